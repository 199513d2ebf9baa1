#include "sck/algorithms.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sck/separators.hpp"

namespace sck {

namespace {

void require_sck(const Graph& g, int k, const char* who) {
    if (!is_sck_oracle(g, k)) {
        throw std::runtime_error(std::string(who) + ": input is not an SC_" +
                                 std::to_string(k) + " graph");
    }
}

template <typename T>
size_t shared_count(const std::vector<T>& a, const std::vector<T>& b) {
    size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++c;
            ++i;
            ++j;
        }
    }
    return c;
}

}  // namespace

std::optional<PyramidWitness> detect_3ck_pyramid(const Graph& g, int k) {
    auto cycles = enumerate_induced_cycles(g);
    std::vector<const InducedCycle*> of_k;
    for (const auto& c : cycles) {
        if (c.length() == k) of_k.push_back(&c);
    }
    for (const Edge& e : g.edges()) {
        std::vector<const InducedCycle*> through;
        for (const auto* c : of_k) {
            if (c->contains_edge(e)) through.push_back(c);
        }
        if (through.size() < 3) continue;
        size_t m = through.size();
        for (size_t a = 0; a < m; ++a) {
            for (size_t b = a + 1; b < m; ++b) {
                for (size_t c = b + 1; c < m; ++c) {
                    const InducedCycle* tri[3] = {through[a], through[b], through[c]};
                    bool pairwise_edge_only = true;
                    for (int i = 0; i < 3 && pairwise_edge_only; ++i) {
                        for (int j = i + 1; j < 3; ++j) {
                            std::vector<int> vi = tri[i]->vertices, vj = tri[j]->vertices;
                            std::sort(vi.begin(), vi.end());
                            std::sort(vj.begin(), vj.end());
                            if (shared_count(vi, vj) != 2) {
                                pairwise_edge_only = false;
                                break;
                            }
                        }
                    }
                    if (!pairwise_edge_only) continue;
                    // verify the union is an induced n-C_k pyramid with n = 3
                    std::set<int> uv;
                    std::set<Edge> ue;
                    for (const auto* cy : tri) {
                        for (int v : cy->vertices) uv.insert(v);
                        for (const Edge& ce : cy->edge_set()) ue.insert(ce);
                    }
                    if (static_cast<int>(uv.size()) != (k - 2) * 3 + 2) continue;
                    if (static_cast<int>(ue.size()) != (k - 1) * 3 + 1) continue;
                    bool induced = true;
                    for (auto i = uv.begin(); i != uv.end() && induced; ++i) {
                        for (auto j = std::next(i); j != uv.end(); ++j) {
                            bool in_g = g.has_edge(*i, *j);
                            bool in_u = ue.count(make_edge(*i, *j)) > 0;
                            if (in_g != in_u) {
                                induced = false;
                                break;
                            }
                        }
                    }
                    if (!induced) continue;
                    PyramidWitness w;
                    w.base_edge = e;
                    w.cycles = {*tri[0], *tri[1], *tri[2]};
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

bool is_spanning_cycle(const Graph& g, const std::vector<int>& cycle) {
    int n = g.vertex_count();
    if (static_cast<int>(cycle.size()) != n || n < 3) return false;
    std::vector<char> seen(n, 0);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
        if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
    }
    return true;
}

HamiltonicityResult is_hamiltonian_sck(const Graph& g, int k) {
    if (g.vertex_count() < 3) {
        throw std::invalid_argument("is_hamiltonian_sck: need at least 3 vertices");
    }
    require_sck(g, k, "is_hamiltonian_sck");
    HamiltonicityResult res;
    if (!g.is_connected() || !cut_vertices(g).empty()) return res;
    if (k % 2 == 0 && !find_cages(g, k).empty()) return res;
    if (detect_3ck_pyramid(g, k)) return res;

    // sufficiency construction: drop every edge shared by two induced cycles
    auto cycles = enumerate_induced_cycles(g);
    std::map<Edge, int> edge_uses;
    for (const auto& c : cycles) {
        for (const Edge& e : c.edge_set()) ++edge_uses[e];
    }
    Graph h(g.vertex_count());
    for (const Edge& e : g.edges()) {
        auto it = edge_uses.find(e);
        if (it == edge_uses.end() || it->second < 2) h.add_edge(e.first, e.second);
    }
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (h.degree(v) != 2) {
            throw std::runtime_error("is_hamiltonian_sck: spanning-cycle construction failed");
        }
    }
    std::vector<int> cyc{0};
    int prev = -1, cur = 0;
    while (true) {
        int next = -1;
        for (int u : h.neighbors(cur)) {
            if (u != prev) {
                next = u;
                break;
            }
        }
        if (next == 0) break;
        cyc.push_back(next);
        prev = cur;
        cur = next;
    }
    if (!is_spanning_cycle(g, cyc)) {
        throw std::runtime_error("is_hamiltonian_sck: spanning-cycle construction failed");
    }
    res.hamiltonian = true;
    res.cycle = std::move(cyc);
    return res;
}

namespace {

int components_minus(const Graph& g, const std::vector<int>& removed) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    for (int v : removed) seen[v] = 1;
    int comps = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
    }
    return comps;
}

}  // namespace

BruteForceHamilton hamiltonian_bruteforce(const Graph& g, int max_vertices, bool use_chvatal) {
    int n = g.vertex_count();
    if (n > max_vertices) {
        throw std::runtime_error("hamiltonian_bruteforce: graph exceeds the vertex bound " +
                                 std::to_string(max_vertices));
    }
    BruteForceHamilton res;
    if (n < 3) return res;
    if (use_chvatal) {
        // Chvatal's necessary condition for |S| <= 2
        if (!g.is_connected()) {
            res.chvatal_fired = true;
            return res;
        }
        for (int v = 0; v < n; ++v) {
            if (components_minus(g, {v}) > 1) {
                res.chvatal_fired = true;
                return res;
            }
        }
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (components_minus(g, {u, v}) > 2) {
                    res.chvatal_fired = true;
                    return res;
                }
            }
        }
    } else if (!g.is_connected()) {
        return res;
    }

    std::vector<int> path{0};
    std::vector<char> visited(n, 0);
    visited[0] = 1;

    auto unvisited_connected = [&]() {
        int start = -1, want = 0;
        for (int v = 0; v < n; ++v) {
            if (!visited[v]) {
                ++want;
                start = v;
            }
        }
        if (want == 0) return true;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int got = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (!visited[u] && !seen[u]) {
                    seen[u] = 1;
                    ++got;
                    stack.push_back(u);
                }
            }
        }
        return got == want;
    };

    auto search = [&](auto&& self) -> bool {
        if (static_cast<int>(path.size()) == n) {
            return g.has_edge(path.back(), 0);
        }
        if (!unvisited_connected()) return false;
        for (int u : g.neighbors(path.back())) {
            if (visited[u]) continue;
            visited[u] = 1;
            path.push_back(u);
            if (self(self)) return true;
            path.pop_back();
            visited[u] = 0;
        }
        return false;
    };
    if (search(search)) res.cycle = path;
    return res;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
    for (const Edge& e : g.edges()) {
        if (colors[e.first] == colors[e.second]) return false;
    }
    return true;
}

namespace {

// 2-SAT over literals 0..2m-1 (literal 2i = variable i true); returns an
// assignment or nothing when unsatisfiable.
std::optional<std::vector<char>> solve_two_sat(
    int vars, const std::vector<std::pair<int, int>>& implications) {
    int n = 2 * vars;
    std::vector<std::vector<int>> adj(n), radj(n);
    for (const auto& [a, b] : implications) {
        adj[a].push_back(b);
        radj[b].push_back(a);
    }
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::pair<int, size_t>> st{{s, 0}};
        seen[s] = 1;
        while (!st.empty()) {
            auto [v, i] = st.back();
            if (i < adj[v].size()) {
                st.back().second = i + 1;
                int u = adj[v][i];
                if (!seen[u]) {
                    seen[u] = 1;
                    st.emplace_back(u, 0);
                }
            } else {
                order.push_back(v);
                st.pop_back();
            }
        }
    }
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] >= 0) continue;
        std::vector<int> st{*it};
        comp[*it] = nc;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int u : radj[v]) {
                if (comp[u] < 0) {
                    comp[u] = nc;
                    st.push_back(u);
                }
            }
        }
        ++nc;
    }
    std::vector<char> value(vars, 0);
    for (int i = 0; i < vars; ++i) {
        if (comp[2 * i] == comp[2 * i + 1]) return std::nullopt;
        // components are numbered in topological order; a literal is safe to
        // assert when its component comes later than its negation's
        value[i] = comp[2 * i] > comp[2 * i + 1];
    }
    return value;
}

}  // namespace

std::vector<int> color_sck(const Graph& g, int k) {
    require_sck(g, k, "color_sck");
    int n = g.vertex_count();
    if (n == 1) return {0};
    BfsTree t = bfs_tree(g, 0);
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = t.level[v] % 2;
    if (k % 2 == 1 && !t.cross_edges.empty()) {
        // Cross edges join equal levels and conflict under the level-parity
        // coloring; slanting edges never do. The non-tree edges form a
        // matching, so one endpoint per cross edge takes the third color.
        // The chosen endpoints must also be pairwise non-adjacent (picks can
        // clash through a tree edge), which is a 2-SAT instance: variable i
        // true means cross edge i recolors its smaller endpoint.
        int m = static_cast<int>(t.cross_edges.size());
        std::vector<int> owner(n, -1);  // vertex -> cross edge index
        for (int i = 0; i < m; ++i) {
            owner[t.cross_edges[i].first] = i;
            owner[t.cross_edges[i].second] = i;
        }
        auto literal_for = [&](int vertex) {
            int i = owner[vertex];
            bool smaller = vertex == std::min(t.cross_edges[i].first, t.cross_edges[i].second);
            return 2 * i + (smaller ? 0 : 1);
        };
        std::vector<std::pair<int, int>> implications;
        for (const Edge& e : g.edges()) {
            int iu = owner[e.first], iv = owner[e.second];
            if (iu < 0 || iv < 0 || iu == iv) continue;
            // not both endpoints may be recolored: pick_u -> not pick_v
            int lu = literal_for(e.first), lv = literal_for(e.second);
            implications.emplace_back(lu, lv ^ 1);
            implications.emplace_back(lv, lu ^ 1);
        }
        auto pick = solve_two_sat(m, implications);
        if (!pick) {
            throw std::runtime_error("color_sck: no independent endpoint choice exists");
        }
        for (int i = 0; i < m; ++i) {
            auto [a, b] = t.cross_edges[i];
            colors[(*pick)[i] ? std::min(a, b) : std::max(a, b)] = 2;
        }
    }
    return colors;
}

bool is_chordal(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    // maximum cardinality search
    std::vector<int> weight(n, 0), pos(n, -1), order(n, -1);
    std::vector<char> numbered(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
        }
        numbered[best] = 1;
        order[i] = best;
        pos[best] = i;
        for (int u : g.neighbors(best)) {
            if (!numbered[u]) ++weight[u];
        }
    }
    // perfect elimination check
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int follower = -1;
        for (int u : g.neighbors(v)) {
            if (pos[u] > i && (follower < 0 || pos[u] < pos[follower])) follower = u;
        }
        if (follower < 0) continue;
        for (int u : g.neighbors(v)) {
            if (pos[u] > pos[follower] && !g.has_edge(follower, u)) return false;
        }
    }
    return true;
}

FillInResult fill_in(const Graph& g, int k) {
    require_sck(g, k, "fill_in");
    RecognitionResult rec = recognize_sck(g, k);
    if (!rec.is_sck) {
        throw std::runtime_error("fill_in: recognition rejected the input");
    }
    FillInResult out;
    out.chordal_graph = g;
    for (const Component& c : rec.decomposition.components) {
        int added = 0;
        if (c.kind == ComponentKind::CycleK) {
            int hub = c.vertices.front();
            for (int v : c.vertices) {
                if (v != hub && !g.has_edge(hub, v)) {
                    out.chordal_graph.add_edge(hub, v);
                    out.added_edges.push_back(make_edge(hub, v));
                    ++added;
                }
            }
        } else if (c.kind == ComponentKind::Cage) {
            std::vector<int> to_orig;
            Graph local = c.local_graph(&to_orig);
            int hub = -1;
            for (int v = 0; v < local.vertex_count(); ++v) {
                if (hub < 0 || local.degree(v) > local.degree(hub)) hub = v;
            }
            int hub_orig = to_orig[hub];
            for (int v : c.vertices) {
                if (v != hub_orig && !g.has_edge(hub_orig, v)) {
                    out.chordal_graph.add_edge(hub_orig, v);
                    out.added_edges.push_back(make_edge(hub_orig, v));
                    ++added;
                }
            }
        }
        out.per_component_counts.emplace_back(c.kind, added);
    }
    std::sort(out.added_edges.begin(), out.added_edges.end());
    return out;
}

namespace {

using WeightedBagEdge = std::array<int, 3>;  // weight, i, j

std::vector<std::pair<int, int>> kruskal_tree(size_t bag_count,
                                              std::vector<WeightedBagEdge> candidates) {
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> parent(bag_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<int, int>> tree;
    for (const auto& [w, i, j] : candidates) {
        int a = find(i), b = find(j);
        if (a == b) continue;
        parent[a] = b;
        tree.emplace_back(i, j);
    }
    if (tree.size() + 1 != bag_count) {
        throw std::runtime_error("tree decomposition: bag graph is disconnected");
    }
    return tree;
}

std::vector<std::vector<int>> fan_triples(const std::vector<int>& cycle_order, int hub) {
    // bags {hub, a, b} for every cycle edge {a,b} not incident to the hub
    std::vector<std::vector<int>> bags;
    int n = static_cast<int>(cycle_order.size());
    for (int i = 0; i < n; ++i) {
        int a = cycle_order[i], b = cycle_order[(i + 1) % n];
        if (a == hub || b == hub) continue;
        std::vector<int> bag{hub, a, b};
        std::sort(bag.begin(), bag.end());
        bags.push_back(std::move(bag));
    }
    return bags;
}

int make_width(const std::vector<std::vector<int>>& bags) {
    size_t mx = 0;
    for (const auto& b : bags) mx = std::max(mx, b.size());
    return static_cast<int>(mx) - 1;
}

}  // namespace

TreeDecomposition tree_decomposition_odd(const Graph& g, int k,
                                         const std::vector<int>& fan_hubs) {
    if (k < 5 || k % 2 == 0) {
        throw std::invalid_argument("tree_decomposition_odd: k must be odd, >= 5");
    }
    require_sck(g, k, "tree_decomposition_odd");
    auto cycles = enumerate_induced_cycles(g);
    if (cycles.empty()) {
        throw std::runtime_error(
            "tree_decomposition_odd: cycle-free input; use the trivial edge-bag decomposition");
    }

    std::set<Edge> cycle_edges;
    for (const auto& c : cycles) {
        for (const Edge& e : c.edge_set()) cycle_edges.insert(e);
    }
    TreeDecomposition td;
    std::vector<int> bag_cycle;  // cycle index per bag, -1 for 2-bags
    for (const Edge& e : g.edges()) {
        if (!cycle_edges.count(e)) {
            td.bags.push_back({e.first, e.second});
            bag_cycle.push_back(-1);
        }
    }
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
        int hub = cycles[ci].vertices.front();
        if (ci < fan_hubs.size() && fan_hubs[ci] >= 0) {
            hub = fan_hubs[ci];
            if (!cycles[ci].contains_vertex(hub)) {
                throw std::invalid_argument("tree_decomposition_odd: fan hub not on its cycle");
            }
        }
        for (auto& bag : fan_triples(cycles[ci].vertices, hub)) {
            td.bags.push_back(std::move(bag));
            bag_cycle.push_back(static_cast<int>(ci));
        }
    }

    // pairwise cycle intersection profile
    size_t nc = cycles.size();
    std::vector<std::vector<int>> sorted_cycle_vs(nc);
    std::vector<std::vector<Edge>> cycle_es(nc);
    for (size_t i = 0; i < nc; ++i) {
        sorted_cycle_vs[i] = cycles[i].vertices;
        std::sort(sorted_cycle_vs[i].begin(), sorted_cycle_vs[i].end());
        cycle_es[i] = cycles[i].edge_set();
    }

    std::vector<WeightedBagEdge> cand;
    for (size_t i = 0; i < td.bags.size(); ++i) {
        for (size_t j = i + 1; j < td.bags.size(); ++j) {
            size_t shared = shared_count(td.bags[i], td.bags[j]);
            if (shared == 0) continue;
            int ci = bag_cycle[i], cj = bag_cycle[j];
            bool i3 = td.bags[i].size() == 3, j3 = td.bags[j].size() == 3;
            int w = 0;
            if (i3 && j3 && ci == cj && shared == 2) {
                w = 1;
            } else if (i3 && j3 && ci != cj) {
                size_t ce = shared_count(cycle_es[ci], cycle_es[cj]);
                size_t cv = shared_count(sorted_cycle_vs[ci], sorted_cycle_vs[cj]);
                if (ce == 1 && shared == 2) {
                    w = 2;
                } else if (cv == 1 && shared == 1) {
                    w = 3;
                }
            } else if (i3 != j3 && shared == 1) {
                w = 4;
            } else if (!i3 && !j3 && shared == 1) {
                w = 5;
            }
            if (w > 0) cand.push_back({w, static_cast<int>(i), static_cast<int>(j)});
        }
    }
    td.tree_edges = kruskal_tree(td.bags.size(), std::move(cand));
    td.width = make_width(td.bags);
    return td;
}

TreeDecomposition tree_decomposition_even(const Graph& g, int k,
                                          const std::vector<int>& fan_hubs) {
    if (k < 6 || k % 2 != 0) {
        throw std::invalid_argument("tree_decomposition_even: k must be even, >= 6");
    }
    RecognitionResult rec = recognize_sck(g, k);
    if (!rec.is_sck) {
        throw std::runtime_error("tree_decomposition_even: input is not an SC_" +
                                 std::to_string(k) + " graph");
    }
    const auto& comps = rec.decomposition.components;
    bool has_cycle = false;
    for (const auto& c : comps) {
        if (c.kind != ComponentKind::CutEdge) has_cycle = true;
    }
    if (!has_cycle) {
        throw std::runtime_error(
            "tree_decomposition_even: cycle-free input; use the trivial edge-bag decomposition");
    }

    TreeDecomposition td;
    std::vector<int> bag_comp;
    size_t cycle_comp_seen = 0;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        const Component& c = comps[ci];
        if (c.kind == ComponentKind::CutEdge) {
            if (c.edges.empty()) continue;  // isolated K_1 input handled below
            td.bags.push_back({c.edges[0].first, c.edges[0].second});
            bag_comp.push_back(static_cast<int>(ci));
        } else if (c.kind == ComponentKind::CycleK) {
            std::vector<int> to_orig;
            Graph local = c.local_graph(&to_orig);
            std::vector<int> order_local{0};
            int prev = -1, cur = 0;
            while (true) {
                int next = -1;
                for (int u : local.neighbors(cur)) {
                    if (u != prev) {
                        next = u;
                        break;
                    }
                }
                if (next == 0) break;
                order_local.push_back(next);
                prev = cur;
                cur = next;
            }
            std::vector<int> order;
            for (int v : order_local) order.push_back(to_orig[v]);
            int hub = c.vertices.front();
            if (cycle_comp_seen < fan_hubs.size() && fan_hubs[cycle_comp_seen] >= 0) {
                hub = fan_hubs[cycle_comp_seen];
                if (!c.contains_vertex(hub)) {
                    throw std::invalid_argument(
                        "tree_decomposition_even: fan hub not on its cycle component");
                }
            }
            ++cycle_comp_seen;
            for (auto& bag : fan_triples(order, hub)) {
                td.bags.push_back(std::move(bag));
                bag_comp.push_back(static_cast<int>(ci));
            }
        } else if (c.kind == ComponentKind::Cage) {
            std::vector<int> to_orig;
            Graph local = c.local_graph(&to_orig);
            std::vector<int> hubs;
            for (int v = 0; v < local.vertex_count(); ++v) {
                if (local.degree(v) >= 3) hubs.push_back(v);
            }
            int w = to_orig[hubs[0]] < to_orig[hubs[1]] ? hubs[0] : hubs[1];
            int z = w == hubs[0] ? hubs[1] : hubs[0];
            std::vector<std::vector<int>> paths;
            std::vector<char> used(local.vertex_count(), 0);
            used[w] = used[z] = 1;
            for (int s0 : local.neighbors(w)) {
                std::vector<int> p{s0};
                used[s0] = 1;
                while (!local.has_edge(p.back(), z)) {
                    for (int u : local.neighbors(p.back())) {
                        if (u != w && u != z && !used[u]) {
                            used[u] = 1;
                            p.push_back(u);
                            break;
                        }
                    }
                }
                std::vector<int> po;
                for (int v : p) po.push_back(to_orig[v]);
                paths.push_back(std::move(po));
            }
            std::sort(paths.begin(), paths.end());
            int wo = to_orig[w], zo = to_orig[z];
            for (const auto& p : paths) {
                std::vector<int> first{wo, zo, p[0]};
                std::sort(first.begin(), first.end());
                td.bags.push_back(std::move(first));
                bag_comp.push_back(static_cast<int>(ci));
                for (size_t i = 0; i + 1 < p.size(); ++i) {
                    std::vector<int> bag{zo, p[i], p[i + 1]};
                    std::sort(bag.begin(), bag.end());
                    td.bags.push_back(std::move(bag));
                    bag_comp.push_back(static_cast<int>(ci));
                }
            }
        }
    }
    if (td.bags.empty()) {  // K_1 input
        td.bags.push_back({0});
        td.width = 0;
        return td;
    }

    // component pair relations: shared edge beats shared vertex
    size_t ncomp = comps.size();
    std::vector<std::vector<char>> edge_shared(ncomp, std::vector<char>(ncomp, 0));
    std::vector<std::vector<char>> vertex_shared(ncomp, std::vector<char>(ncomp, 0));
    for (size_t i = 0; i < ncomp; ++i) {
        for (size_t j = i + 1; j < ncomp; ++j) {
            size_t se = shared_count(comps[i].edges, comps[j].edges);
            size_t sv = shared_count(comps[i].vertices, comps[j].vertices);
            if (se >= 1) {
                edge_shared[i][j] = edge_shared[j][i] = 1;
            } else if (sv == 1) {
                vertex_shared[i][j] = vertex_shared[j][i] = 1;
            }
        }
    }

    std::vector<WeightedBagEdge> cand;
    for (size_t i = 0; i < td.bags.size(); ++i) {
        for (size_t j = i + 1; j < td.bags.size(); ++j) {
            size_t shared = shared_count(td.bags[i], td.bags[j]);
            if (shared == 0) continue;
            int ci = bag_comp[i], cj = bag_comp[j];
            bool i3 = td.bags[i].size() == 3, j3 = td.bags[j].size() == 3;
            int w = 0;
            if (i3 && j3 && ci == cj && shared == 2) {
                w = 1;
            } else if (i3 && j3 && ci != cj) {
                if (edge_shared[ci][cj] && shared == 2) {
                    w = 2;
                } else if (vertex_shared[ci][cj] && shared == 1) {
                    w = 3;
                }
            } else if (i3 != j3 && shared == 1) {
                w = 4;
            } else if (!i3 && !j3 && shared == 1) {
                w = 5;
            }
            if (w > 0) cand.push_back({w, static_cast<int>(i), static_cast<int>(j)});
        }
    }
    td.tree_edges = kruskal_tree(td.bags.size(), std::move(cand));
    td.width = make_width(td.bags);
    return td;
}

TreeDecomposition trivial_tree_decomposition(const Graph& g) {
    if (girth(g) != kNoCycle) {
        throw std::invalid_argument("trivial_tree_decomposition: input has a cycle");
    }
    TreeDecomposition td;
    int n = g.vertex_count();
    if (n == 1) {
        td.bags.push_back({0});
        td.width = 0;
        return td;
    }
    BfsTree t = bfs_tree(g, 0);
    std::vector<int> bag_of(n, -1);  // bag of the edge {parent[v], v}
    for (int v = 1; v < n; ++v) {
        std::vector<int> bag{t.parent[v], v};
        std::sort(bag.begin(), bag.end());
        bag_of[v] = static_cast<int>(td.bags.size());
        td.bags.push_back(std::move(bag));
    }
    int first_root_child = -1;
    for (int v = 1; v < n; ++v) {
        if (t.parent[v] == 0) {
            if (first_root_child < 0) {
                first_root_child = v;
            } else {
                td.tree_edges.emplace_back(bag_of[first_root_child], bag_of[v]);
            }
        } else {
            td.tree_edges.emplace_back(bag_of[t.parent[v]], bag_of[v]);
        }
    }
    td.width = 1;
    return td;
}

TdValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    TdValidation res;
    auto fail = [&](std::string msg) {
        res.valid = false;
        res.violation = std::move(msg);
        return res;
    };
    size_t nb = td.bags.size();
    if (nb == 0) return fail("no bags");
    int n = g.vertex_count();
    for (const auto& bag : td.bags) {
        for (int v : bag) {
            if (v < 0 || v >= n) return fail("bag vertex " + std::to_string(v) + " out of range");
        }
    }
    // the bag graph must be a tree
    if (td.tree_edges.size() + 1 != nb) return fail("bag tree edge count is not |bags|-1");
    std::vector<std::vector<int>> adj(nb);
    for (const auto& [i, j] : td.tree_edges) {
        if (i < 0 || j < 0 || i >= static_cast<int>(nb) || j >= static_cast<int>(nb) || i == j) {
            return fail("bad bag tree edge");
        }
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    {
        std::vector<char> seen(nb, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        size_t got = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    ++got;
                    stack.push_back(u);
                }
            }
        }
        if (got != nb) return fail("bag tree is disconnected");
    }
    // (i) vertex coverage
    std::vector<char> covered(n, 0);
    for (const auto& bag : td.bags) {
        for (int v : bag) covered[v] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (!covered[v]) return fail("condition (i): vertex " + std::to_string(v) + " in no bag");
    }
    // (ii) edge coverage
    for (const Edge& e : g.edges()) {
        bool found = false;
        for (const auto& bag : td.bags) {
            if (std::binary_search(bag.begin(), bag.end(), e.first) &&
                std::binary_search(bag.begin(), bag.end(), e.second)) {
                found = true;
                break;
            }
        }
        if (!found) {
            return fail("condition (ii): edge {" + std::to_string(e.first) + "," +
                        std::to_string(e.second) + "} in no bag");
        }
    }
    // (iii) per-vertex bag connectivity
    for (int v = 0; v < n; ++v) {
        std::vector<char> has(nb, 0);
        int total = 0, start = -1;
        for (size_t b = 0; b < nb; ++b) {
            if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), v)) {
                has[b] = 1;
                ++total;
                start = static_cast<int>(b);
            }
        }
        if (total == 0) continue;
        std::vector<char> seen(nb, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int got = 1;
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            for (int c : adj[b]) {
                if (has[c] && !seen[c]) {
                    seen[c] = 1;
                    ++got;
                    stack.push_back(c);
                }
            }
        }
        if (got != total) {
            return fail("condition (iii): bags of vertex " + std::to_string(v) +
                        " do not induce a subtree");
        }
    }
    if (td.width != make_width(td.bags)) return fail("recorded width mismatch");
    return res;
}

int treewidth_bruteforce(const Graph& g, int max_vertices) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("treewidth_bruteforce: empty graph");
    if (n > max_vertices) {
        throw std::runtime_error("treewidth_bruteforce: graph exceeds the vertex bound " +
                                 std::to_string(max_vertices));
    }
    int full = (1 << n) - 1;
    const int inf = 1 << 29;
    std::vector<int> dp(1 << n, inf);
    dp[0] = 0;
    // Q(mask, v): neighbors of v outside mask, reachable through mask
    auto elimination_degree = [&](int mask, int v) {
        int seen = 1 << v;
        int stack_mask = 1 << v;
        int count = 0;
        while (stack_mask) {
            int x = __builtin_ctz(stack_mask);
            stack_mask &= stack_mask - 1;
            for (int u : g.neighbors(x)) {
                int bit = 1 << u;
                if (seen & bit) continue;
                seen |= bit;
                if (mask & bit) {
                    stack_mask |= bit;
                } else {
                    ++count;
                }
            }
        }
        return count;
    };
    for (int mask = 0; mask <= full; ++mask) {
        if (dp[mask] >= inf) continue;
        for (int v = 0; v < n; ++v) {
            if (mask & (1 << v)) continue;
            int q = elimination_degree(mask, v);
            int cand = std::max(dp[mask], q);
            int nmask = mask | (1 << v);
            if (cand < dp[nmask]) dp[nmask] = cand;
        }
    }
    return dp[full];
}

}  // namespace sck
