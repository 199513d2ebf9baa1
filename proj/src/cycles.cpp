#include "sck/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace sck {

bool InducedCycle::contains_vertex(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool InducedCycle::contains_edge(const Edge& e) const {
    int n = length();
    for (int i = 0; i < n; ++i) {
        if (make_edge(vertices[i], vertices[(i + 1) % n]) == e) return true;
    }
    return false;
}

std::vector<Edge> InducedCycle::edge_set() const {
    std::vector<Edge> es;
    int n = length();
    es.reserve(n);
    for (int i = 0; i < n; ++i) es.push_back(make_edge(vertices[i], vertices[(i + 1) % n]));
    std::sort(es.begin(), es.end());
    return es;
}

InducedCycle canonical_cycle(const std::vector<int>& cyc) {
    if (cyc.size() < 3) throw std::invalid_argument("canonical_cycle: length < 3");
    int n = static_cast<int>(cyc.size());
    int mi = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::vector<int> fwd(n), bwd(n);
    for (int i = 0; i < n; ++i) {
        fwd[i] = cyc[(mi + i) % n];
        bwd[i] = cyc[(mi - i % n + n) % n];
    }
    return InducedCycle{fwd <= bwd ? std::move(fwd) : std::move(bwd)};
}

std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g, std::optional<int> max_len,
                                                   long long budget) {
    int n = g.vertex_count();
    std::vector<InducedCycle> out;
    if (n < 3) return out;
    int limit = max_len.value_or(n);
    if (limit < 3) return out;

    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    long long steps = 0;

    // DFS path extension rooted at the minimum cycle label s: every vertex on
    // the path except s is > s, internal path vertices are pairwise
    // non-adjacent unless consecutive, and a neighbor of s closes a cycle.
    // Direction dedup: second path vertex must be smaller than the closer.
    auto extend = [&](auto&& self, int s) -> void {
        int v = path.back();
        int p = static_cast<int>(path.size());
        for (int u : g.neighbors(v)) {
            if (u <= s || on_path[u]) continue;
            if (++steps > budget) {
                throw std::runtime_error("enumerate_induced_cycles: budget exceeded");
            }
            bool chord = false;
            for (int i = 1; i + 1 < p; ++i) {
                if (g.has_edge(u, path[i])) {
                    chord = true;
                    break;
                }
            }
            if (chord) continue;
            if (p >= 2 && g.has_edge(u, s)) {
                // closes an induced cycle of length p+1; never extend past a
                // neighbor of s (any longer cycle has chord {u, s})
                if (p + 1 <= limit && path[1] < u) {
                    std::vector<int> cyc = path;
                    cyc.push_back(u);
                    out.push_back(canonical_cycle(cyc));
                }
                continue;
            }
            if (p == 1 || p + 2 <= limit) {
                path.push_back(u);
                on_path[u] = 1;
                if (p + 2 <= limit) self(self, s);
                on_path[u] = 0;
                path.pop_back();
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend(extend, s);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int girth(const Graph& g) {
    auto cycles = enumerate_induced_cycles(g);
    if (cycles.empty()) return kNoCycle;
    int best = kNoCycle;
    for (const auto& c : cycles) best = std::min(best, c.length());
    return best;
}

int chordality(const Graph& g) {
    auto cycles = enumerate_induced_cycles(g);
    if (cycles.empty()) return kNoCycle;
    int best = 0;
    for (const auto& c : cycles) best = std::max(best, c.length());
    return best;
}

bool is_sck_oracle(const Graph& g, int k) {
    if (k < 5) throw std::invalid_argument("is_sck_oracle: k must be >= 5");
    for (const auto& c : enumerate_induced_cycles(g)) {
        if (c.length() != k) return false;
    }
    return true;
}

InferredK infer_k(const Graph& g) {
    auto cycles = enumerate_induced_cycles(g);
    if (cycles.empty()) return InferredK{std::nullopt, true};
    int lo = kNoCycle, hi = 0;
    for (const auto& c : cycles) {
        lo = std::min(lo, c.length());
        hi = std::max(hi, c.length());
    }
    if (lo == hi && lo >= 5) return InferredK{lo, false};
    return InferredK{std::nullopt, false};
}

const char* to_string(IntersectionKind k) {
    switch (k) {
        case IntersectionKind::Disjoint: return "disjoint";
        case IntersectionKind::OneVertex: return "one_vertex";
        case IntersectionKind::OneEdge: return "one_edge";
        case IntersectionKind::HalfKEdges: return "half_k_edges";
        case IntersectionKind::HubPair: return "hub_pair";
        case IntersectionKind::Other: return "other";
    }
    return "?";
}

namespace {

// Both arcs between x and y along the cycle have exactly half its edges.
bool antipodal_on_cycle(const InducedCycle& c, int x, int y) {
    int n = c.length();
    if (n % 2 != 0) return false;
    int ix = -1, iy = -1;
    for (int i = 0; i < n; ++i) {
        if (c.vertices[i] == x) ix = i;
        if (c.vertices[i] == y) iy = i;
    }
    return ix >= 0 && iy >= 0 && std::abs(ix - iy) == n / 2;
}

// True when `vs` induces a simple path in g covering all of `vs`.
bool induces_path(const Graph& g, const std::vector<int>& vs) {
    int deg1 = 0;
    int edges = 0;
    for (size_t i = 0; i < vs.size(); ++i) {
        int d = 0;
        for (size_t j = 0; j < vs.size(); ++j) {
            if (i != j && g.has_edge(vs[i], vs[j])) ++d;
        }
        if (d == 0 || d > 2) return false;
        if (d == 1) ++deg1;
        edges += d;
    }
    edges /= 2;
    return deg1 == 2 && edges == static_cast<int>(vs.size()) - 1;
}

}  // namespace

CycleIntersection classify_cycle_intersection(const Graph& g, const InducedCycle& a,
                                              const InducedCycle& b, int k) {
    if (a == b) throw std::invalid_argument("classify_cycle_intersection: identical cycles");
    CycleIntersection out;
    std::vector<int> va = a.vertices, vb = b.vertices;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                          std::back_inserter(out.shared_vertices));
    auto ea = a.edge_set(), eb = b.edge_set();
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                          std::back_inserter(out.shared_edges));

    size_t sv = out.shared_vertices.size();
    size_t se = out.shared_edges.size();
    if (sv == 0) {
        out.kind = IntersectionKind::Disjoint;
    } else if (sv == 1) {
        out.kind = IntersectionKind::OneVertex;
    } else if (sv == 2 && se == 1) {
        out.kind = IntersectionKind::OneEdge;
    } else if (k % 2 == 0 && se == static_cast<size_t>(k / 2) &&
               sv == static_cast<size_t>(k / 2 + 1) &&
               induces_path(g, out.shared_vertices)) {
        out.kind = IntersectionKind::HalfKEdges;
    } else if (k % 2 == 0 && sv == 2 && se == 0 &&
               !g.has_edge(out.shared_vertices[0], out.shared_vertices[1]) &&
               antipodal_on_cycle(a, out.shared_vertices[0], out.shared_vertices[1]) &&
               antipodal_on_cycle(b, out.shared_vertices[0], out.shared_vertices[1])) {
        out.kind = IntersectionKind::HubPair;
    } else {
        out.kind = IntersectionKind::Other;
    }
    return out;
}

}  // namespace sck
