#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sck/cycles.hpp"
#include "sck/decompose.hpp"
#include "sck/graph.hpp"

namespace sck {

// Three induced C_k's through one common edge, pairwise sharing only it.
struct PyramidWitness {
    Edge base_edge;
    std::vector<InducedCycle> cycles;  // exactly three
};

std::optional<PyramidWitness> detect_3ck_pyramid(const Graph& g, int k);

struct HamiltonicityResult {
    bool hamiltonian = false;
    std::optional<std::vector<int>> cycle;
};

// Characterization for SC_k graphs: hamiltonian iff 2-connected, cage-free
// (no cage of size >= 3; vacuous for odd k) and 3-C_k-pyramid free. On the
// true branch returns the spanning cycle left after deleting every edge
// shared by two induced cycles. Requires SC_k input with >= 3 vertices.
HamiltonicityResult is_hamiltonian_sck(const Graph& g, int k);

struct BruteForceHamilton {
    std::optional<std::vector<int>> cycle;
    // Set when the component-count test |components(G-S)| > |S| already
    // settled the answer for some S of size 1 or 2.
    bool chvatal_fired = false;
};

// Exhaustive backtracking oracle; `use_chvatal` enables the component-count
// shortcut. Throws when the graph exceeds max_vertices.
BruteForceHamilton hamiltonian_bruteforce(const Graph& g, int max_vertices = 16,
                                          bool use_chvatal = true);

bool is_spanning_cycle(const Graph& g, const std::vector<int>& cycle);

// Proper coloring with exactly 2 colors for even k, 3 for odd k with a
// cycle, 2 for a cycle-free graph with an edge, 1 for K_1. Requires SC_k.
std::vector<int> color_sck(const Graph& g, int k);

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

struct FillInResult {
    Graph chordal_graph;
    std::vector<Edge> added_edges;
    // (kind, edges added) per decomposition component
    std::vector<std::pair<ComponentKind, int>> per_component_counts;
};

// Minimum fill-in for SC_k graphs: fan each C_k component from one vertex
// (k-3 edges), star each cage from a maximum-degree hub (n(k/2-2)+1 edges),
// leave cut edges alone. The recombined graph is chordal.
FillInResult fill_in(const Graph& g, int k);

// Perfect-elimination-ordering test (maximum cardinality search).
bool is_chordal(const Graph& g);

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;            // sorted vertex sets
    std::vector<std::pair<int, int>> tree_edges;   // bag index pairs
    int width = 0;
};

// Width-2 tree decomposition for odd k: fan triples per cycle, 2-bags for
// non-cycle edges, typed-weight bag graph, minimum spanning tree. fan_hubs
// optionally picks the fan vertex per cycle (parallel to the canonically
// sorted cycle list, -1 for the default lowest label).
TreeDecomposition tree_decomposition_odd(const Graph& g, int k,
                                         const std::vector<int>& fan_hubs = {});

// Even-k variant driven by the decomposition: 2-bags for cut edges, fan
// triples per C_k component, per-path bag chains for cages. fan_hubs applies
// to C_k components in component order.
TreeDecomposition tree_decomposition_even(const Graph& g, int k,
                                          const std::vector<int>& fan_hubs = {});

// Cycle-free fallback: one 2-bag per edge, chained along the tree.
TreeDecomposition trivial_tree_decomposition(const Graph& g);

struct TdValidation {
    bool valid = true;
    std::string violation;  // first violated condition, with a witness
};

TdValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Exact treewidth by elimination-ordering DP over vertex subsets.
int treewidth_bruteforce(const Graph& g, int max_vertices = 12);

}  // namespace sck
