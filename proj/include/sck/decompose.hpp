#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sck/graph.hpp"

namespace sck {

enum class ComponentKind { Unclassified, CutEdge, CycleK, Cage, Other };

const char* to_string(ComponentKind k);

// One separator-free piece of the clique-separator decomposition. Vertices
// and edges use host-graph labels; a re-added 2-clique separator edge
// appears in every side it was added back to.
struct Component {
    std::vector<int> vertices;  // sorted
    std::vector<Edge> edges;    // sorted
    ComponentKind kind = ComponentKind::Unclassified;
    int cage_size = 0;  // n for Cage components

    bool contains_vertex(int v) const;
    Graph local_graph(std::vector<int>* to_orig = nullptr) const;
};

struct Decomposition {
    std::vector<Component> components;

    // vertex -> indices of components containing it (only shared vertices).
    std::map<int, std::vector<int>> shared() const;
};

// Split at cut vertices, then recursively at separating edges {u,v} with the
// edge re-added to every side, until no component has a clique separator of
// size one or two.
Decomposition clique_separator_decompose(const Graph& g);

ComponentKind classify_component(const Component& c, int k, int* cage_size_out = nullptr);

// The BFS cage test: degree census (exactly two non-adjacent equal-degree
// vertices of degree d >= 3, all others degree 2), then a BFS from a
// max-degree vertex with k/2+1 levels, a single last-level vertex and d-1
// slanting edges between the last two levels. Returns the cage size d.
std::optional<int> bfs_cage_test(const Component& c, int k);

struct RecognitionResult {
    bool is_sck = false;
    Decomposition decomposition;
};

// Decomposition-based recognizer; agrees with is_sck_oracle on all inputs.
// Requires k >= 5 and a connected graph.
RecognitionResult recognize_sck(const Graph& g, int k);

}  // namespace sck
