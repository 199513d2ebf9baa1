#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sck {

// Undirected edge, stored with the smaller endpoint first.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on dense labels 0..n-1. Adjacency lists are kept
// sorted and duplicate-free, so traversals visit neighbors in ascending
// order and every query is deterministic. Values are treated as immutable
// once built; the add_* members exist for builders and the generator.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    int add_vertex();
    // Rejects out-of-range labels and self-loops; duplicate edges collapse.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    std::vector<Edge> edges() const;  // sorted

    bool is_connected() const;
    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    void check_vertex(int v, const char* what) const;
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Validating constructor used by parsers and the CLI.
Graph build_graph(int n, const std::vector<Edge>& edges);

// BFS tree with non-tree edges split into cross (same level) and slanting
// (adjacent levels). In a BFS tree of a simple graph no non-tree edge spans
// two or more levels.
struct BfsTree {
    int root = -1;
    std::vector<int> parent;  // -1 for the root
    std::vector<int> level;
    std::vector<Edge> tree_edges;
    std::vector<Edge> cross_edges;
    std::vector<Edge> slanting_edges;
};

// Throws if some vertex is unreachable from root, naming it.
BfsTree bfs_tree(const Graph& g, int root);

std::vector<int> cut_vertices(const Graph& g);
std::vector<Edge> cut_edges(const Graph& g);
// Edge sets of the maximal biconnected subgraphs; their union is E(G).
std::vector<std::vector<Edge>> biconnected_components(const Graph& g);

int min_degree(const Graph& g);

struct MatchingCheck {
    bool is_matching = true;
    // Two non-tree edges sharing a vertex, when the check fails.
    std::optional<std::pair<Edge, Edge>> conflict;
};
MatchingCheck nontree_edges_form_matching(const Graph& g, int root);

// Induced subgraph with dense relabeling; to_orig maps new labels back.
struct SubgraphView {
    Graph graph;
    std::vector<int> to_orig;
};
SubgraphView induced_subgraph(const Graph& g, const std::vector<int>& keep);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Edge-list text format: comment lines start with "c ", the header line is
// "p <n> <m>", then m lines "e <u> <v>" with 0-based labels. LF endings.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comments = {});

}  // namespace sck
