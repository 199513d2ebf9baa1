#pragma once

#include <string>
#include <vector>

#include "sck/graph.hpp"

namespace sck::testing {

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

// Two k-cycles glued at vertex 0.
inline Graph two_cycles_shared_vertex(int k) {
    Graph g(2 * k - 1);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    std::vector<int> second{0};
    for (int i = 0; i < k - 1; ++i) second.push_back(k + i);
    for (int i = 0; i < k; ++i) g.add_edge(second[i], second[(i + 1) % k]);
    return g;
}

// Two k-cycles glued along the edge {0,1}.
inline Graph two_cycles_shared_edge(int k) {
    Graph g(2 * k - 2);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    std::vector<int> second{0};
    for (int i = 0; i < k - 2; ++i) second.push_back(k + i);
    second.push_back(1);
    for (size_t i = 0; i + 1 < second.size(); ++i) g.add_edge(second[i], second[i + 1]);
    return g;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(SCK_FIXTURE_DIR) + "/" + name;
}

}  // namespace sck::testing
