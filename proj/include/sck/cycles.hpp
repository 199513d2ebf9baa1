#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "sck/graph.hpp"

namespace sck {

// Chordless cycle in canonical form: minimum label first, then the
// lexicographically smaller of the two directions.
struct InducedCycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool contains_vertex(int v) const;
    bool contains_edge(const Edge& e) const;
    std::vector<Edge> edge_set() const;  // sorted

    bool operator==(const InducedCycle& o) const { return vertices == o.vertices; }
    bool operator<(const InducedCycle& o) const { return vertices < o.vertices; }
};

InducedCycle canonical_cycle(const std::vector<int>& cyc);

// Sentinel for cycle-free graphs; keeps girth <= chordality total.
inline constexpr int kNoCycle = std::numeric_limits<int>::max();

// All chordless cycles (length <= max_len when given), canonical, sorted.
// Throws when the search exceeds the node budget.
std::vector<InducedCycle> enumerate_induced_cycles(
    const Graph& g, std::optional<int> max_len = std::nullopt,
    long long budget = 200'000'000LL);

int girth(const Graph& g);       // kNoCycle when acyclic
int chordality(const Graph& g);  // kNoCycle when acyclic

// Definition-level membership test: cycle-free or every induced cycle of
// length exactly k. Anchors every recognition test. Requires k >= 5.
bool is_sck_oracle(const Graph& g, int k);

struct InferredK {
    std::optional<int> k;  // absent for cycle-free and non-SC_k graphs
    bool cycle_free = false;
};
InferredK infer_k(const Graph& g);

// HubPair covers the remaining lawful even-k case: two cycles of a cage of
// size >= 4 that use disjoint path pairs meet in exactly the two hubs.
enum class IntersectionKind { Disjoint, OneVertex, OneEdge, HalfKEdges, HubPair, Other };

const char* to_string(IntersectionKind k);

struct CycleIntersection {
    IntersectionKind kind = IntersectionKind::Other;
    std::vector<int> shared_vertices;  // sorted
    std::vector<Edge> shared_edges;    // sorted
};

// Classification of how two induced cycles of an SC_k graph may meet:
// disjoint, one vertex, one edge, or (even k) a path of k/2 shared edges.
// Anything else signals non-SC_k input.
CycleIntersection classify_cycle_intersection(const Graph& g, const InducedCycle& a,
                                              const InducedCycle& b, int k);

}  // namespace sck
