#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sck/cycles.hpp"
#include "sck/graph.hpp"

namespace sck {

// One element of a vertex-cycle ordering: a pendant vertex, or an s-pendant
// C_k together with the attachment it leaves behind when removed.
struct VcoLabel {
    enum class Kind { PendantVertex, PendantCycle };
    Kind kind = Kind::PendantVertex;

    // PendantVertex
    int vertex = -1;
    int attach_vertex = -1;

    // PendantCycle: s in {0, 1, 2, k/2+1}; `cycle` is the full C_k in cyclic
    // order; `attach` lists the vertices kept on removal ({}, {x}, {u,v}, or
    // the shared path, in path order).
    int s = -1;
    std::vector<int> cycle;
    std::vector<int> attach;

    std::vector<int> removed() const;  // vertices deleted by this label
};

struct Vco {
    std::vector<VcoLabel> labels;  // removal order
    std::vector<int> base_vertices;
    std::vector<Edge> base_edges;
};

// Lowest-label pendant vertex if any, otherwise the pendant cycle with the
// lowest contained label (ties broken by removed-vertex sequence). Throws
// when nothing pendant exists, which signals non-SC_k input.
VcoLabel find_pendant(const Graph& g, int k);

// Iterated find_pendant + removal down to a K_1 or lone C_k base.
Vco extract_vco(const Graph& g, int k);

// Reverse replay through the construction rules; reproduces the labeled
// input graph exactly.
Graph replay_vco(const Vco& vco);

enum class Rule {
    AttachVertex,        // pendant vertex at any vertex
    AttachCycleVertex,   // C_k sharing one vertex
    AttachCycleEdge,     // C_k sharing one edge
    AttachCyclePath,     // C_k across an eligible path of k/2+1 vertices (even k)
};

struct GeneratorOptions {
    int k = 5;
    int steps = 0;
    std::uint64_t seed = 0;
    // Empty means all rules applicable to k with weight 1.
    std::vector<std::pair<Rule, double>> rule_weights;
    enum class Base { BySeed, K1, Ck } base = Base::BySeed;
    int max_retries = 64;
};

// Random SC_k graph built from the construction rules; the output always
// satisfies is_sck_oracle.
Graph generate_sck(const GeneratorOptions& opt);

// Eligibility of a k/2+1-vertex path for the path-attachment rule. The new
// vertices attach only to the path's endpoints, so the attachment keeps the
// graph strictly chordality-k exactly when every induced path between those
// endpoints has k/2 edges.
bool rule_vi_eligible(const Graph& g, const std::vector<int>& path, int k);

// All simple paths on k/2+1 vertices (each listed once, smaller endpoint
// first); used by the generator and by eligibility tests.
std::vector<std::vector<int>> paths_of_length(const Graph& g, int vertices);

}  // namespace sck
