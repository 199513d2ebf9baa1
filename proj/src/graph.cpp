#include "sck/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stack>
#include <stdexcept>
#include <unordered_map>

namespace sck {

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= vertex_count()) {
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(vertex_count()) + ")");
    }
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) {
        throw std::invalid_argument("add_edge: self-loop (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    }
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;  // duplicate collapses
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return false;
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v, "neighbors");
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v, "degree");
    return static_cast<int>(adj_[v].size());
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_connected() const {
    int n = vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::stack<int> st;
    st.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!st.empty()) {
        int v = st.top();
        st.pop();
        for (int u : adj_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                st.push(u);
            }
        }
    }
    return reached == n;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

BfsTree bfs_tree(const Graph& g, int root) {
    int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("bfs_tree: root out of range");
    BfsTree t;
    t.root = root;
    t.parent.assign(n, -1);
    t.level.assign(n, -1);
    t.level[root] = 0;
    std::deque<int> q{root};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : g.neighbors(v)) {
            if (t.level[u] < 0) {
                t.level[u] = t.level[v] + 1;
                t.parent[u] = v;
                t.tree_edges.push_back(make_edge(v, u));
                q.push_back(u);
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (t.level[v] < 0) {
            throw std::runtime_error("bfs_tree: graph disconnected, vertex " +
                                     std::to_string(v) + " unreachable from root " +
                                     std::to_string(root));
        }
    }
    for (const Edge& e : g.edges()) {
        auto [u, v] = e;
        if (t.parent[u] == v || t.parent[v] == u) continue;
        int d = t.level[u] - t.level[v];
        if (d == 0) {
            t.cross_edges.push_back(e);
        } else {
            // |d| == 1 in a BFS tree of a simple graph
            t.slanting_edges.push_back(e);
        }
    }
    return t;
}

namespace {

// Iterative lowlink DFS computing articulation points, bridges and
// biconnected components in one pass.
struct LowLink {
    std::vector<int> articulation;
    std::vector<Edge> bridges;
    std::vector<std::vector<Edge>> bicomps;
};

LowLink lowlink_dfs(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("lowlink: empty graph");
    LowLink out;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<char> is_art(n, 0);
    std::vector<Edge> edge_stack;
    int timer = 0;

    for (int start = 0; start < n; ++start) {
        if (disc[start] >= 0) continue;
        // frame: (vertex, index into adjacency)
        std::vector<std::pair<int, size_t>> frames;
        frames.emplace_back(start, 0);
        disc[start] = low[start] = timer++;
        int root_children = 0;
        while (!frames.empty()) {
            int v = frames.back().first;
            size_t idx = frames.back().second;
            const auto& nbrs = g.neighbors(v);
            if (idx < nbrs.size()) {
                frames.back().second = idx + 1;
                int u = nbrs[idx];
                if (disc[u] < 0) {
                    parent[u] = v;
                    disc[u] = low[u] = timer++;
                    edge_stack.push_back(make_edge(v, u));
                    if (v == start) ++root_children;
                    frames.emplace_back(u, 0);
                } else if (u != parent[v] && disc[u] < disc[v]) {
                    edge_stack.push_back(make_edge(v, u));
                    low[v] = std::min(low[v], disc[u]);
                }
            } else {
                frames.pop_back();
                if (!frames.empty()) {
                    int p = frames.back().first;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (p != start) is_art[p] = 1;
                        std::vector<Edge> comp;
                        Edge top = make_edge(p, v);
                        while (!edge_stack.empty()) {
                            Edge e = edge_stack.back();
                            edge_stack.pop_back();
                            comp.push_back(e);
                            if (e == top) break;
                        }
                        out.bicomps.push_back(std::move(comp));
                    }
                    if (low[v] > disc[p]) out.bridges.push_back(make_edge(p, v));
                }
            }
        }
        if (root_children >= 2) is_art[start] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (is_art[v]) out.articulation.push_back(v);
    }
    std::sort(out.bridges.begin(), out.bridges.end());
    for (auto& comp : out.bicomps) std::sort(comp.begin(), comp.end());
    std::sort(out.bicomps.begin(), out.bicomps.end());
    return out;
}

}  // namespace

std::vector<int> cut_vertices(const Graph& g) { return lowlink_dfs(g).articulation; }

std::vector<Edge> cut_edges(const Graph& g) { return lowlink_dfs(g).bridges; }

std::vector<std::vector<Edge>> biconnected_components(const Graph& g) {
    return lowlink_dfs(g).bicomps;
}

int min_degree(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("min_degree: empty graph");
    int d = g.degree(0);
    for (int v = 1; v < n; ++v) d = std::min(d, g.degree(v));
    return d;
}

MatchingCheck nontree_edges_form_matching(const Graph& g, int root) {
    BfsTree t = bfs_tree(g, root);
    std::vector<Edge> nontree = t.cross_edges;
    nontree.insert(nontree.end(), t.slanting_edges.begin(), t.slanting_edges.end());
    std::sort(nontree.begin(), nontree.end());
    std::vector<int> owner(g.vertex_count(), -1);
    MatchingCheck mc;
    for (size_t i = 0; i < nontree.size(); ++i) {
        for (int v : {nontree[i].first, nontree[i].second}) {
            if (owner[v] >= 0) {
                mc.is_matching = false;
                mc.conflict = {nontree[owner[v]], nontree[i]};
                return mc;
            }
        }
        owner[nontree[i].first] = static_cast<int>(i);
        owner[nontree[i].second] = static_cast<int>(i);
    }
    return mc;
}

SubgraphView induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    SubgraphView view;
    view.to_orig = keep;
    std::sort(view.to_orig.begin(), view.to_orig.end());
    view.to_orig.erase(std::unique(view.to_orig.begin(), view.to_orig.end()),
                       view.to_orig.end());
    std::unordered_map<int, int> from_orig;
    for (size_t i = 0; i < view.to_orig.size(); ++i) from_orig[view.to_orig[i]] = (int)i;
    view.graph = Graph(static_cast<int>(view.to_orig.size()));
    for (size_t i = 0; i < view.to_orig.size(); ++i) {
        for (int u : g.neighbors(view.to_orig[i])) {
            auto it = from_orig.find(u);
            if (it != from_orig.end() && (int)i < it->second) {
                view.graph.add_edge((int)i, it->second);
            }
        }
    }
    return view;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::stack<int> st;
        st.push(s);
        seen[s] = 1;
        while (!st.empty()) {
            int v = st.top();
            st.pop();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    st.push(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("edge list, line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag.empty()) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) fail("duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("malformed header, expected 'p <n> <m>'");
            continue;
        }
        if (tag == "e") {
            if (n < 0) fail("edge before header");
            long long u, v;
            if (!(ls >> u >> v)) fail("malformed edge, expected 'e <u> <v>'");
            if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex label out of range");
            if (u == v) fail("self-loop");
            edges.emplace_back(make_edge((int)u, (int)v));
            continue;
        }
        fail("unknown line type '" + tag + "'");
    }
    ++lineno;
    if (n < 0) fail("missing header 'p <n> <m>'");
    if ((long long)edges.size() != m) {
        fail("header declares " + std::to_string(m) + " edges, found " +
             std::to_string(edges.size()));
    }
    return build_graph((int)n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.first << " " << e.second << "\n";
}

}  // namespace sck
