#include "sck/decompose.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace sck {

const char* to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::Unclassified: return "unclassified";
        case ComponentKind::CutEdge: return "cut_edge";
        case ComponentKind::CycleK: return "cycle_k";
        case ComponentKind::Cage: return "cage";
        case ComponentKind::Other: return "other";
    }
    return "?";
}

bool Component::contains_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

Graph Component::local_graph(std::vector<int>* to_orig) const {
    std::unordered_map<int, int> idx;
    for (size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(vertices.size()));
    for (const auto& [u, v] : edges) g.add_edge(idx.at(u), idx.at(v));
    if (to_orig) *to_orig = vertices;
    return g;
}

std::map<int, std::vector<int>> Decomposition::shared() const {
    std::map<int, std::vector<int>> owners;
    for (size_t i = 0; i < components.size(); ++i) {
        for (int v : components[i].vertices) owners[v].push_back(static_cast<int>(i));
    }
    std::map<int, std::vector<int>> out;
    for (auto& [v, ids] : owners) {
        if (ids.size() > 1) out.emplace(v, std::move(ids));
    }
    return out;
}

namespace {

Component make_component(std::vector<int> vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Component{std::move(vertices), std::move(edges)};
}

// Connected components of the component's vertices minus {u,v}.
std::vector<std::vector<int>> parts_without_pair(const Component& c, int u, int v) {
    std::unordered_map<int, std::vector<int>> adj;
    for (const auto& [a, b] : c.edges) {
        if (a == u || a == v || b == u || b == v) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::vector<int>> parts;
    std::set<int> left(c.vertices.begin(), c.vertices.end());
    left.erase(u);
    left.erase(v);
    std::set<int> seen;
    for (int s : left) {
        if (seen.count(s)) continue;
        std::vector<int> part, stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            part.push_back(x);
            for (int y : adj[x]) {
                if (!seen.count(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

// Recursive split at 2-clique separators; each side keeps the edge {u,v}.
void split_at_edges(Component c, std::vector<Component>& out) {
    if (c.vertices.size() > 3) {
        for (const auto& [u, v] : c.edges) {
            auto parts = parts_without_pair(c, u, v);
            if (parts.size() < 2) continue;
            for (auto& part : parts) {
                std::set<int> side(part.begin(), part.end());
                side.insert(u);
                side.insert(v);
                std::vector<Edge> side_edges;
                for (const auto& e : c.edges) {
                    if (side.count(e.first) && side.count(e.second)) side_edges.push_back(e);
                }
                split_at_edges(
                    make_component({side.begin(), side.end()}, std::move(side_edges)), out);
            }
            return;
        }
    }
    out.push_back(std::move(c));
}

}  // namespace

Decomposition clique_separator_decompose(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("decompose: empty graph");
    if (!g.is_connected()) throw std::runtime_error("decompose: graph disconnected");
    Decomposition dec;
    if (g.vertex_count() == 1) {
        dec.components.push_back(make_component({0}, {}));
        return dec;
    }
    for (const auto& bicomp_edges : biconnected_components(g)) {
        std::vector<int> vs;
        for (const auto& [u, v] : bicomp_edges) {
            vs.push_back(u);
            vs.push_back(v);
        }
        split_at_edges(make_component(std::move(vs), bicomp_edges), dec.components);
    }
    std::sort(dec.components.begin(), dec.components.end(),
              [](const Component& a, const Component& b) { return a.vertices < b.vertices; });
    return dec;
}

std::optional<int> bfs_cage_test(const Component& c, int k) {
    if (k < 6 || k % 2 != 0) return std::nullopt;
    int half = k / 2;
    std::vector<int> to_orig;
    Graph g = c.local_graph(&to_orig);
    if (!g.is_connected()) return std::nullopt;

    // step 1: exactly two non-adjacent vertices of equal degree d >= 3,
    // every other vertex of degree 2
    std::vector<int> hubs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d >= 3) {
            hubs.push_back(v);
        } else if (d != 2) {
            return std::nullopt;
        }
    }
    if (hubs.size() != 2) return std::nullopt;
    int w = hubs[0], z = hubs[1];
    int d = g.degree(w);
    if (g.degree(z) != d || g.has_edge(w, z)) return std::nullopt;

    // steps 2-3: BFS from a maximum degree vertex
    BfsTree t = bfs_tree(g, w);
    int max_level = *std::max_element(t.level.begin(), t.level.end());
    if (max_level != half) return std::nullopt;  // k/2+1 levels
    int last_count = 0, last_vertex = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (t.level[v] == max_level) {
            ++last_count;
            last_vertex = v;
        }
    }
    if (last_count != 1 || last_vertex != z) return std::nullopt;
    if (!t.cross_edges.empty()) return std::nullopt;
    if (static_cast<int>(t.slanting_edges.size()) != d - 1) return std::nullopt;
    for (const auto& [a, b] : t.slanting_edges) {
        // all d-1 slanting edges join z to its non-parents one level up
        if (a != z && b != z) return std::nullopt;
        int other = (a == z) ? b : a;
        if (t.level[other] != max_level - 1 || other == t.parent[z]) return std::nullopt;
    }

    // structural re-verification: minus the hubs, the component must be d
    // disjoint paths of k/2-1 vertices joining a neighbor of w to one of z
    int expected_path_len = half - 1;
    if (g.vertex_count() != d * expected_path_len + 2) return std::nullopt;
    std::vector<char> used(g.vertex_count(), 0);
    used[w] = used[z] = 1;
    for (int s : g.neighbors(w)) {
        std::vector<int> path{s};
        if (used[s]) return std::nullopt;
        used[s] = 1;
        while (true) {
            int v = path.back();
            int next = -1;
            for (int u : g.neighbors(v)) {
                if (u != w && u != z && !used[u]) {
                    if (next != -1) return std::nullopt;  // branching, not a path
                    next = u;
                }
            }
            if (next == -1) break;
            used[next] = 1;
            path.push_back(next);
        }
        if (static_cast<int>(path.size()) != expected_path_len) return std::nullopt;
        if (!g.has_edge(path.back(), z)) return std::nullopt;
    }
    for (char u : used) {
        if (!u) return std::nullopt;
    }
    return d;
}

ComponentKind classify_component(const Component& c, int k, int* cage_size_out) {
    if (cage_size_out) *cage_size_out = 0;
    size_t nv = c.vertices.size();
    // A single isolated vertex arises only for K_1 input; bookkeeping kind.
    if (nv == 1 && c.edges.empty()) return ComponentKind::CutEdge;
    if (nv == 2 && c.edges.size() == 1) return ComponentKind::CutEdge;
    if (nv == static_cast<size_t>(k) && c.edges.size() == static_cast<size_t>(k)) {
        Graph g = c.local_graph();
        bool two_regular = true;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != 2) {
                two_regular = false;
                break;
            }
        }
        if (two_regular && g.is_connected()) return ComponentKind::CycleK;
    }
    if (k % 2 == 0) {
        if (auto n = bfs_cage_test(c, k)) {
            if (cage_size_out) *cage_size_out = *n;
            return ComponentKind::Cage;
        }
    }
    return ComponentKind::Other;
}

RecognitionResult recognize_sck(const Graph& g, int k) {
    if (k < 5) throw std::invalid_argument("recognize_sck: k must be >= 5");
    if (g.vertex_count() == 0) throw std::invalid_argument("recognize_sck: empty graph");
    RecognitionResult res;
    res.decomposition = clique_separator_decompose(g);
    res.is_sck = true;
    for (auto& c : res.decomposition.components) {
        c.kind = classify_component(c, k, &c.cage_size);
        if (c.kind == ComponentKind::Other) res.is_sck = false;
    }
    return res;
}

}  // namespace sck
