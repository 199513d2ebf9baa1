#include "sck/separators.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "sck/cycles.hpp"

namespace sck {

namespace {

// Connected components of g minus `removed`.
std::vector<std::vector<int>> components_without(const Graph& g,
                                                 const std::vector<char>& removed) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen = removed;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> neighborhood_of_set(const Graph& g, const std::vector<int>& vs) {
    std::set<int> in(vs.begin(), vs.end());
    std::set<int> nb;
    for (int v : vs) {
        for (int u : g.neighbors(v)) {
            if (!in.count(u)) nb.insert(u);
        }
    }
    return {nb.begin(), nb.end()};
}

}  // namespace

std::vector<MinimalSeparator> enumerate_minimal_separators(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("enumerate_minimal_separators: need >= 2 vertices");
    if (!g.is_connected()) throw std::runtime_error("enumerate_minimal_separators: disconnected");

    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    auto offer = [&](std::vector<int> s) {
        if (s.empty()) return;
        if (seen.insert(s).second) queue.push_back(std::move(s));
    };

    // close separators
    for (int v = 0; v < n; ++v) {
        std::vector<char> removed(n, 0);
        removed[v] = 1;
        for (int u : g.neighbors(v)) removed[u] = 1;
        for (const auto& comp : components_without(g, removed)) {
            offer(neighborhood_of_set(g, comp));
        }
    }
    // saturation: substitute each x in S by its neighborhood
    while (!queue.empty()) {
        std::vector<int> s = std::move(queue.front());
        queue.pop_front();
        for (int x : s) {
            std::vector<char> removed(n, 0);
            for (int y : s) removed[y] = 1;
            removed[x] = 1;
            for (int u : g.neighbors(x)) removed[u] = 1;
            for (const auto& comp : components_without(g, removed)) {
                offer(neighborhood_of_set(g, comp));
            }
        }
    }

    std::vector<MinimalSeparator> out;
    for (const auto& s : seen) {
        std::vector<char> removed(n, 0);
        for (int v : s) removed[v] = 1;
        auto comps = components_without(g, removed);
        // keep full components only: every separator vertex must see them
        std::vector<int> witnesses;
        for (const auto& comp : comps) {
            bool full = true;
            for (int v : s) {
                bool touches = false;
                for (int u : g.neighbors(v)) {
                    if (std::binary_search(comp.begin(), comp.end(), u)) {
                        touches = true;
                        break;
                    }
                }
                if (!touches) {
                    full = false;
                    break;
                }
            }
            if (full) witnesses.push_back(comp.front());
        }
        if (witnesses.size() < 2) continue;  // not minimal for any pair
        out.push_back(MinimalSeparator{s, {witnesses[0], witnesses[1]}});
    }
    std::sort(out.begin(), out.end(), [](const MinimalSeparator& a, const MinimalSeparator& b) {
        return a.vertices.size() != b.vertices.size() ? a.vertices.size() < b.vertices.size()
                                                      : a.vertices < b.vertices;
    });
    return out;
}

namespace {

// All induced w-z paths with exactly `internal` internal vertices: the only
// adjacencies among {w, path..., z} are the consecutive ones.
std::vector<std::vector<int>> induced_paths_between(const Graph& g, int w, int z,
                                                    int internal) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> on_path(g.vertex_count(), 0);
    auto extend = [&](auto&& self) -> void {
        int v = path.empty() ? w : path.back();
        for (int u : g.neighbors(v)) {
            if (u == w || u == z || on_path[u]) continue;
            bool chord = g.has_edge(u, w) && !path.empty();
            for (size_t i = 0; !chord && i + 1 < path.size(); ++i) {
                if (g.has_edge(u, path[i])) chord = true;
            }
            if (chord) continue;
            bool at_end = static_cast<int>(path.size()) + 1 == internal;
            if (at_end) {
                if (g.has_edge(u, z)) {
                    path.push_back(u);
                    out.push_back(path);
                    path.pop_back();
                }
                continue;
            }
            if (g.has_edge(u, z)) continue;  // would chord the longer path
            path.push_back(u);
            on_path[u] = 1;
            self(self);
            on_path[u] = 0;
            path.pop_back();
        }
    };
    if (internal >= 1) extend(extend);
    return out;
}

// Maximum pairwise internally-disjoint subset, deterministic first-found
// among maxima (paths examined in sorted order).
void max_disjoint(const std::vector<std::vector<int>>& paths, size_t i,
                  std::vector<char>& used, std::vector<int>& cur, std::vector<int>& best) {
    if (cur.size() + (paths.size() - i) <= best.size()) return;
    if (i == paths.size()) {
        if (cur.size() > best.size()) best = cur;
        return;
    }
    bool free_path = true;
    for (int v : paths[i]) {
        if (used[v]) {
            free_path = false;
            break;
        }
    }
    if (free_path) {
        for (int v : paths[i]) used[v] = 1;
        cur.push_back(static_cast<int>(i));
        max_disjoint(paths, i + 1, used, cur, best);
        cur.pop_back();
        for (int v : paths[i]) used[v] = 0;
    }
    max_disjoint(paths, i + 1, used, cur, best);
}

}  // namespace

std::vector<CageDescriptor> find_cages(const Graph& g, int k) {
    if (k < 6 || k % 2 != 0) throw std::invalid_argument("find_cages: k must be even, >= 6");
    int l = k / 2 + 1;
    int internal = l - 2;
    int n = g.vertex_count();
    std::vector<CageDescriptor> out;
    for (int w = 0; w < n; ++w) {
        if (g.degree(w) < 3) continue;
        for (int z = w + 1; z < n; ++z) {
            if (g.degree(z) < 3 || g.has_edge(w, z)) continue;
            auto paths = induced_paths_between(g, w, z, internal);
            if (paths.size() < 3) continue;
            std::sort(paths.begin(), paths.end());
            std::vector<char> used(n, 0);
            std::vector<int> cur, best;
            max_disjoint(paths, 0, used, cur, best);
            if (best.size() < 3) continue;
            CageDescriptor cd;
            cd.hubs = {w, z};
            cd.size = static_cast<int>(best.size());
            cd.path_length = l;
            for (int idx : best) cd.paths.push_back(paths[idx]);
            // re-verify the descriptor against the host graph
            std::set<int> all{w, z};
            bool ok = true;
            for (const auto& p : cd.paths) {
                if (static_cast<int>(p.size()) != internal) ok = false;
                if (!g.has_edge(w, p.front()) || !g.has_edge(p.back(), z)) ok = false;
                for (size_t i = 0; i + 1 < p.size(); ++i) {
                    if (!g.has_edge(p[i], p[i + 1])) ok = false;
                }
                for (int v : p) {
                    if (!all.insert(v).second) ok = false;
                }
            }
            if (ok && all.size() == static_cast<size_t>(cd.size * internal + 2)) {
                out.push_back(std::move(cd));
            }
        }
    }
    return out;
}

SeparatorReport check_separator_bounds(const Graph& g, int k) {
    if (!is_sck_oracle(g, k)) {
        throw std::runtime_error(
            "check_separator_bounds: input is not SC_k; run is_sck_oracle first");
    }
    SeparatorReport rep;
    auto seps = enumerate_minimal_separators(g);
    for (const auto& s : seps) {
        rep.max_size = std::max(rep.max_size, static_cast<int>(s.vertices.size()));
    }
    if (k % 2 == 0) {
        for (const auto& cd : find_cages(g, k)) {
            rep.max_cage_size = std::max(rep.max_cage_size, cd.size);
        }
    }
    auto describe = [](const std::vector<int>& vs) {
        std::string s = "{";
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(vs[i]);
        }
        return s + "}";
    };
    for (const auto& s : seps) {
        int size = static_cast<int>(s.vertices.size());
        if (k % 2 == 1) {
            if (size > 2) {
                rep.violations.push_back("separator " + describe(s.vertices) +
                                         " has size > 2 for odd k");
            }
            continue;
        }
        if (size < 3) continue;
        for (size_t i = 0; i < s.vertices.size(); ++i) {
            for (size_t j = i + 1; j < s.vertices.size(); ++j) {
                if (g.has_edge(s.vertices[i], s.vertices[j])) {
                    rep.all_independent_when_ge3 = false;
                    rep.violations.push_back("separator " + describe(s.vertices) +
                                             " of size >= 3 is not independent");
                }
            }
        }
        int bound = rep.max_cage_size >= 3 ? rep.max_cage_size : 2;
        if (size > bound) {
            rep.violations.push_back("separator " + describe(s.vertices) +
                                     " exceeds the maximum cage size " +
                                     std::to_string(rep.max_cage_size));
        }
    }
    return rep;
}

}  // namespace sck
