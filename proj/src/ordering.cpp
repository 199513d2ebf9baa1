#include "sck/ordering.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "sck/decompose.hpp"

namespace sck {

std::vector<int> VcoLabel::removed() const {
    if (kind == Kind::PendantVertex) return {vertex};
    std::set<int> keep(attach.begin(), attach.end());
    std::vector<int> out;
    for (int v : cycle) {
        if (!keep.count(v)) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Cyclic order of a 2-regular component, starting at `start`; when
// `second` >= 0 the walk leaves `start` toward it.
std::vector<int> walk_cycle(const Graph& g, const std::vector<int>& to_orig, int start,
                            int second = -1) {
    std::vector<int> order{start};
    int prev = -1, cur = start;
    if (second >= 0) {
        order.push_back(second);
        prev = start;
        cur = second;
    }
    while (true) {
        int next = -1;
        for (int u : g.neighbors(cur)) {
            if (u != prev) {
                next = u;
                break;
            }
        }
        if (next == start) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    std::vector<int> out;
    out.reserve(order.size());
    for (int v : order) out.push_back(to_orig[v]);
    return out;
}

struct PendantCandidate {
    VcoLabel label;
    int min_label = 0;
    std::vector<int> removed_seq;
};

bool better(const PendantCandidate& a, const PendantCandidate& b) {
    if (a.min_label != b.min_label) return a.min_label < b.min_label;
    return a.removed_seq < b.removed_seq;
}

}  // namespace

VcoLabel find_pendant(const Graph& g, int k) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 1) {
            VcoLabel l;
            l.kind = VcoLabel::Kind::PendantVertex;
            l.vertex = v;
            l.attach_vertex = g.neighbors(v)[0];
            return l;
        }
    }

    Decomposition dec = clique_separator_decompose(g);
    for (auto& c : dec.components) c.kind = classify_component(c, k, &c.cage_size);
    auto shared = dec.shared();
    auto boundary = [&](const Component& c, int self_idx) {
        std::vector<int> b;
        for (int v : c.vertices) {
            auto it = shared.find(v);
            if (it != shared.end()) b.push_back(v);
        }
        (void)self_idx;
        return b;
    };
    auto on_other_cycle = [&](int v, int self_idx) {
        auto it = shared.find(v);
        if (it == shared.end()) return false;
        for (int idx : it->second) {
            if (idx == self_idx) continue;
            ComponentKind kk = dec.components[idx].kind;
            if (kk == ComponentKind::CycleK || kk == ComponentKind::Cage) return true;
        }
        return false;
    };

    std::optional<PendantCandidate> best;
    auto consider = [&](PendantCandidate cand) {
        if (!best || better(cand, *best)) best = std::move(cand);
    };

    for (size_t ci = 0; ci < dec.components.size(); ++ci) {
        const Component& c = dec.components[ci];
        if (c.kind == ComponentKind::CycleK) {
            std::vector<int> b = boundary(c, static_cast<int>(ci));
            if (b.size() > 2) continue;
            std::vector<int> to_orig;
            Graph local = c.local_graph(&to_orig);
            auto local_of = [&](int orig) {
                return static_cast<int>(std::lower_bound(to_orig.begin(), to_orig.end(), orig) -
                                        to_orig.begin());
            };
            VcoLabel l;
            l.kind = VcoLabel::Kind::PendantCycle;
            if (b.empty()) {
                continue;  // the whole graph is this cycle; handled as base
            } else if (b.size() == 1) {
                l.s = on_other_cycle(b[0], static_cast<int>(ci)) ? 1 : 0;
                l.attach = {b[0]};
                l.cycle = walk_cycle(local, to_orig, local_of(b[0]));
            } else {
                // two boundary vertices are pendant only when they span an edge
                int u = b[0], v = b[1];
                if (!g.has_edge(u, v)) continue;
                l.s = 2;
                l.attach = {u, v};
                // orient the cycle u -> interior -> v so the kept edge wraps
                int lu = local_of(u), lv = local_of(v);
                int away = -1;
                for (int x : local.neighbors(lu)) {
                    if (x != lv) {
                        away = x;
                        break;
                    }
                }
                l.cycle = walk_cycle(local, to_orig, lu, away);
            }
            PendantCandidate cand;
            cand.min_label = *std::min_element(l.cycle.begin(), l.cycle.end());
            cand.label = std::move(l);
            cand.removed_seq = cand.label.removed();
            consider(std::move(cand));
        } else if (c.kind == ComponentKind::Cage) {
            // one cage path with no outside attachment is a (k/2+1)-pendant C_k
            std::vector<int> to_orig;
            Graph local = c.local_graph(&to_orig);
            std::vector<int> hubs;
            for (int v = 0; v < local.vertex_count(); ++v) {
                if (local.degree(v) >= 3) hubs.push_back(v);
            }
            if (hubs.size() != 2) continue;
            int w = hubs[0], z = hubs[1];
            std::vector<std::vector<int>> paths;
            {
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
                    paths.push_back(std::move(p));
                }
            }
            auto orig_path = [&](const std::vector<int>& p) {
                std::vector<int> out;
                for (int v : p) out.push_back(to_orig[v]);
                return out;
            };
            std::vector<std::vector<int>> opaths;
            for (auto& p : paths) opaths.push_back(orig_path(p));
            std::sort(opaths.begin(), opaths.end());
            for (size_t pi = 0; pi < opaths.size(); ++pi) {
                bool clean = true;
                for (int v : opaths[pi]) {
                    if (shared.count(v)) {
                        clean = false;
                        break;
                    }
                }
                if (!clean) continue;
                // reference path = lowest remaining one
                int ref = -1;
                for (size_t pj = 0; pj < opaths.size(); ++pj) {
                    if (pj != pi) {
                        ref = static_cast<int>(pj);
                        break;
                    }
                }
                VcoLabel l;
                l.kind = VcoLabel::Kind::PendantCycle;
                l.s = k / 2 + 1;
                l.attach.push_back(to_orig[w]);
                for (int v : opaths[ref]) l.attach.push_back(v);
                l.attach.push_back(to_orig[z]);
                l.cycle.push_back(to_orig[w]);
                for (int v : opaths[pi]) l.cycle.push_back(v);
                l.cycle.push_back(to_orig[z]);
                for (auto it = opaths[ref].rbegin(); it != opaths[ref].rend(); ++it) {
                    l.cycle.push_back(*it);
                }
                PendantCandidate cand;
                cand.min_label = *std::min_element(l.cycle.begin(), l.cycle.end());
                cand.label = std::move(l);
                cand.removed_seq = cand.label.removed();
                consider(std::move(cand));
            }
        }
    }
    if (!best) {
        throw std::runtime_error("find_pendant: no pendant vertex or pendant cycle found "
                                 "(input not SC_k, or already a base graph?)");
    }
    return std::move(best->label);
}

namespace {

bool is_single_cycle(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n || !g.is_connected()) return false;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2) return false;
    }
    return true;
}

VcoLabel relabel(const VcoLabel& l, const std::vector<int>& to_orig) {
    VcoLabel out = l;
    if (out.vertex >= 0) out.vertex = to_orig[out.vertex];
    if (out.attach_vertex >= 0) out.attach_vertex = to_orig[out.attach_vertex];
    for (int& v : out.cycle) v = to_orig[v];
    for (int& v : out.attach) v = to_orig[v];
    return out;
}

}  // namespace

Vco extract_vco(const Graph& g, int k) {
    if (g.vertex_count() == 0) throw std::invalid_argument("extract_vco: empty graph");
    Vco vco;
    std::vector<int> alive(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) alive[v] = v;

    while (true) {
        SubgraphView view = induced_subgraph(g, alive);
        if (view.graph.vertex_count() == 1 || is_single_cycle(view.graph)) {
            vco.base_vertices = view.to_orig;
            for (const Edge& e : view.graph.edges()) {
                vco.base_edges.push_back(make_edge(view.to_orig[e.first], view.to_orig[e.second]));
            }
            std::sort(vco.base_edges.begin(), vco.base_edges.end());
            return vco;
        }
        VcoLabel label = relabel(find_pendant(view.graph, k), view.to_orig);
        std::set<int> gone;
        for (int v : label.removed()) gone.insert(v);
        std::vector<int> next;
        for (int v : alive) {
            if (!gone.count(v)) next.push_back(v);
        }
        if (next.size() == alive.size()) {
            throw std::runtime_error("extract_vco: no progress (internal error)");
        }
        alive = std::move(next);
        vco.labels.push_back(std::move(label));
    }
}

Graph replay_vco(const Vco& vco) {
    int maxv = -1;
    for (int v : vco.base_vertices) maxv = std::max(maxv, v);
    for (const auto& l : vco.labels) {
        maxv = std::max(maxv, l.vertex);
        for (int v : l.cycle) maxv = std::max(maxv, v);
    }
    Graph g(maxv + 1);
    for (const Edge& e : vco.base_edges) g.add_edge(e.first, e.second);
    for (auto it = vco.labels.rbegin(); it != vco.labels.rend(); ++it) {
        const VcoLabel& l = *it;
        if (l.kind == VcoLabel::Kind::PendantVertex) {
            g.add_edge(l.vertex, l.attach_vertex);
        } else {
            int n = static_cast<int>(l.cycle.size());
            for (int i = 0; i < n; ++i) g.add_edge(l.cycle[i], l.cycle[(i + 1) % n]);
        }
    }
    return g;
}

std::vector<std::vector<int>> paths_of_length(const Graph& g, int vertices) {
    std::vector<std::vector<int>> out;
    if (vertices < 2) return out;
    std::vector<int> path;
    std::vector<char> on_path(g.vertex_count(), 0);
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == vertices) {
            if (path.front() < path.back()) out.push_back(path);
            return;
        }
        for (int u : g.neighbors(path.back())) {
            if (on_path[u]) continue;
            path.push_back(u);
            on_path[u] = 1;
            self(self);
            on_path[u] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < g.vertex_count(); ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend(extend);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool rule_vi_eligible(const Graph& g, const std::vector<int>& path, int k) {
    if (k % 2 != 0) return false;
    if (static_cast<int>(path.size()) != k / 2 + 1) return false;
    std::set<int> distinct(path.begin(), path.end());
    if (distinct.size() != path.size()) return false;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.has_edge(path[i], path[i + 1])) return false;
    }

    // The new vertices attach only to the endpoints, so every induced cycle
    // the attachment creates is the new path plus an induced endpoint-to-
    // endpoint path of the host. All of those must close a C_k, i.e. every
    // induced path between the endpoints must have exactly k/2 edges.
    int a = path.front(), b = path.back();
    int want = k / 2;
    std::vector<int> cur{a};
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[a] = 1;
    bool ok = true;
    // prune branches from which b is unreachable around the current path
    auto reaches_b = [&](int from) {
        std::vector<char> seen = on_path;
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == b) return true;
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        return false;
    };
    auto extend = [&](auto&& self) -> void {
        if (!ok) return;
        int v = cur.back();
        int p = static_cast<int>(cur.size());
        for (int u : g.neighbors(v)) {
            if (!ok) return;
            if (on_path[u]) continue;
            bool chord = false;
            for (int i = 0; i + 1 < p; ++i) {
                if (g.has_edge(u, cur[i])) {
                    chord = true;
                    break;
                }
            }
            if (chord) continue;
            if (u == b) {
                if (p != want) ok = false;  // would close a cycle of length p + k/2
                continue;
            }
            if (!reaches_b(u)) continue;
            cur.push_back(u);
            on_path[u] = 1;
            self(self);
            on_path[u] = 0;
            cur.pop_back();
        }
    };
    extend(extend);
    return ok;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::vector<int> new_vertices(Graph& g, int count) {
    std::vector<int> vs;
    for (int i = 0; i < count; ++i) vs.push_back(g.add_vertex());
    return vs;
}

}  // namespace

Graph generate_sck(const GeneratorOptions& opt) {
    if (opt.k < 5) throw std::invalid_argument("generate_sck: k must be >= 5");
    bool even = opt.k % 2 == 0;
    std::vector<std::pair<Rule, double>> weights = opt.rule_weights;
    if (weights.empty()) {
        weights = {{Rule::AttachVertex, 1.0},
                   {Rule::AttachCycleVertex, 1.0},
                   {Rule::AttachCycleEdge, 1.0}};
        if (even) weights.emplace_back(Rule::AttachCyclePath, 1.0);
    }
    double total = 0;
    for (const auto& [rule, wt] : weights) {
        if (rule == Rule::AttachCyclePath && !even && wt > 0) {
            throw std::invalid_argument("generate_sck: path attachment needs even k");
        }
        if (wt < 0) throw std::invalid_argument("generate_sck: negative rule weight");
        total += wt;
    }
    if (total <= 0) throw std::invalid_argument("generate_sck: no rule enabled");

    std::mt19937_64 rng(opt.seed);
    Graph g;
    bool start_ck = opt.base == GeneratorOptions::Base::Ck ||
                    (opt.base == GeneratorOptions::Base::BySeed && draw(rng, 2) == 0);
    if (start_ck) {
        g = Graph(opt.k);
        for (int i = 0; i < opt.k; ++i) g.add_edge(i, (i + 1) % opt.k);
    } else {
        g = Graph(1);
    }

    for (int step = 0; step < opt.steps; ++step) {
        bool applied = false;
        for (int attempt = 0; attempt < opt.max_retries && !applied; ++attempt) {
            double x = (static_cast<double>(rng() >> 11) / 9007199254740992.0) * total;
            Rule rule = weights.back().first;
            for (const auto& [r, wt] : weights) {
                if (x < wt) {
                    rule = r;
                    break;
                }
                x -= wt;
            }
            switch (rule) {
                case Rule::AttachVertex: {
                    int u = static_cast<int>(draw(rng, g.vertex_count()));
                    int v = g.add_vertex();
                    g.add_edge(u, v);
                    applied = true;
                    break;
                }
                case Rule::AttachCycleVertex: {
                    int u = static_cast<int>(draw(rng, g.vertex_count()));
                    auto vs = new_vertices(g, opt.k - 1);
                    g.add_edge(u, vs.front());
                    for (size_t i = 0; i + 1 < vs.size(); ++i) g.add_edge(vs[i], vs[i + 1]);
                    g.add_edge(vs.back(), u);
                    applied = true;
                    break;
                }
                case Rule::AttachCycleEdge: {
                    auto es = g.edges();
                    if (es.empty()) break;  // K_1: redraw
                    Edge e = es[draw(rng, es.size())];
                    auto vs = new_vertices(g, opt.k - 2);
                    g.add_edge(e.first, vs.front());
                    for (size_t i = 0; i + 1 < vs.size(); ++i) g.add_edge(vs[i], vs[i + 1]);
                    g.add_edge(vs.back(), e.second);
                    applied = true;
                    break;
                }
                case Rule::AttachCyclePath: {
                    // eligibility depends only on the endpoints; cache per pair
                    std::map<Edge, bool> cache;
                    std::vector<std::vector<int>> eligible;
                    for (const auto& p : paths_of_length(g, opt.k / 2 + 1)) {
                        Edge ends = make_edge(p.front(), p.back());
                        auto it = cache.find(ends);
                        bool good = it != cache.end() ? it->second
                                                      : rule_vi_eligible(g, p, opt.k);
                        if (it == cache.end()) cache.emplace(ends, good);
                        if (good) eligible.push_back(p);
                    }
                    if (eligible.empty()) break;  // redraw
                    const auto& p = eligible[draw(rng, eligible.size())];
                    auto vs = new_vertices(g, opt.k / 2 - 1);
                    g.add_edge(p.front(), vs.front());
                    for (size_t i = 0; i + 1 < vs.size(); ++i) g.add_edge(vs[i], vs[i + 1]);
                    g.add_edge(vs.back(), p.back());
                    applied = true;
                    break;
                }
            }
        }
        if (!applied) {
            throw std::runtime_error("generate_sck: no eligible site after bounded retries");
        }
    }
    return g;
}

}  // namespace sck
