#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sck/graph.hpp"

namespace sck {

struct MinimalSeparator {
    std::vector<int> vertices;        // sorted
    std::pair<int, int> witness_pair;  // non-adjacent vertices it separates
};

// All inclusion-minimal (u,v)-separators over non-adjacent pairs,
// deduplicated by vertex set and sorted by (size, vertices). Seeded with the
// close separators N(C), C a component of G \ N[v], then saturated by the
// standard substitution step, which reaches every minimal separator.
std::vector<MinimalSeparator> enumerate_minimal_separators(const Graph& g);

// Two hub vertices joined by `size` vertex-disjoint paths of path_length-2
// internal vertices each; any two paths plus the hubs form a C_k when
// path_length = k/2+1.
struct CageDescriptor {
    std::pair<int, int> hubs;
    int size = 0;         // n, number of paths
    int path_length = 0;  // l
    std::vector<std::vector<int>> paths;  // internal vertices, hub-w end first
};

// All maximal cages with l = k/2+1 and n >= 3 present as subgraphs; n is
// maximal per hub pair. k must be even and >= 6.
std::vector<CageDescriptor> find_cages(const Graph& g, int k);

struct SeparatorReport {
    int max_size = 0;
    bool all_independent_when_ge3 = true;
    int max_cage_size = 0;
    std::vector<std::string> violations;
};

// Executable checker for the separator bounds: odd k caps every minimal
// separator at 2 vertices; even k requires size >= 3 separators to be
// independent and no larger than the maximum cage size. Requires SC_k input.
SeparatorReport check_separator_bounds(const Graph& g, int k);

}  // namespace sck
