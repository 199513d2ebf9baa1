#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "sck/algorithms.hpp"
#include "sck/ordering.hpp"

using namespace sck;
using namespace sck::testing;

namespace {

Graph pyramid(int n_cycles, int k) {
    Graph g(2);
    g.add_edge(0, 1);
    for (int c = 0; c < n_cycles; ++c) {
        int prev = 0;
        for (int i = 0; i < k - 2; ++i) {
            int v = g.add_vertex();
            g.add_edge(prev, v);
            prev = v;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

Graph generated(int k, int steps, std::uint64_t seed) {
    GeneratorOptions opt;
    opt.k = k;
    opt.steps = steps;
    opt.seed = seed;
    return generate_sck(opt);
}

}  // namespace

TEST_CASE("detect_3ck_pyramid") {
    Graph pyr = pyramid(3, 5);
    CHECK(pyr.vertex_count() == 11);
    CHECK(pyr.edge_count() == 13);
    auto w = detect_3ck_pyramid(pyr, 5);
    REQUIRE(w.has_value());
    CHECK(w->base_edge == Edge{0, 1});
    CHECK(w->cycles.size() == 3);

    CHECK_FALSE(detect_3ck_pyramid(cycle_graph(5), 5).has_value());
    CHECK_FALSE(detect_3ck_pyramid(pyramid(2, 5), 5).has_value());
}

TEST_CASE("hamiltonicity characterization on fixtures") {
    Graph se = two_cycles_shared_edge(5);
    auto r = is_hamiltonian_sck(se, 5);
    CHECK(r.hamiltonian);
    REQUIRE(r.cycle.has_value());
    CHECK(r.cycle->size() == 8);
    CHECK(is_spanning_cycle(se, *r.cycle));

    CHECK_FALSE(is_hamiltonian_sck(pyramid(3, 5), 5).hamiltonian);

    Graph cage = read_edge_list_file(fixture_path("cage_3_4.graph"));
    CHECK_FALSE(is_hamiltonian_sck(cage, 6).hamiltonian);

    Graph c7 = cycle_graph(7);
    r = is_hamiltonian_sck(c7, 7);
    CHECK(r.hamiltonian);
    CHECK(is_spanning_cycle(c7, *r.cycle));

    CHECK_THROWS_AS(is_hamiltonian_sck(complete_graph(4), 5), std::runtime_error);
    CHECK_THROWS_AS(is_hamiltonian_sck(build_graph(2, {{0, 1}}), 5), std::invalid_argument);
}

TEST_CASE("hamiltonian_bruteforce") {
    auto c7 = hamiltonian_bruteforce(cycle_graph(7));
    REQUIRE(c7.cycle.has_value());
    CHECK(is_spanning_cycle(cycle_graph(7), *c7.cycle));

    auto pyr = hamiltonian_bruteforce(pyramid(3, 5));
    CHECK_FALSE(pyr.cycle.has_value());
    CHECK(pyr.chvatal_fired);  // removing the two apexes leaves 3 parts

    auto sv = hamiltonian_bruteforce(two_cycles_shared_vertex(6));
    CHECK_FALSE(sv.cycle.has_value());

    CHECK_THROWS_AS(hamiltonian_bruteforce(cycle_graph(17)), std::runtime_error);
}

TEST_CASE("chvatal shortcut is sound") {
    std::mt19937_64 rng(606);
    int fired = 0;
    for (int it = 0; it < 150; ++it) {
        Graph g = random_graph(8, 0.3, rng);
        auto with = hamiltonian_bruteforce(g, 16, true);
        auto without = hamiltonian_bruteforce(g, 16, false);
        CHECK(with.cycle.has_value() == without.cycle.has_value());
        if (with.chvatal_fired) {
            ++fired;
            CHECK_FALSE(without.cycle.has_value());
        }
    }
    CHECK(fired > 10);
}

TEST_CASE("characterization agrees with brute force on generated graphs") {
    for (int k : {5, 6, 7, 8}) {
        int done = 0;
        for (int i = 0; i < 80 && done < 25; ++i) {
            Graph g = generated(k, i % 4, 5000 + 17 * k + i);
            if (g.vertex_count() < 3 || g.vertex_count() > 16) continue;
            ++done;
            auto fast = is_hamiltonian_sck(g, k);
            auto slow = hamiltonian_bruteforce(g);
            CHECK(fast.hamiltonian == slow.cycle.has_value());
            if (fast.hamiltonian) CHECK(is_spanning_cycle(g, *fast.cycle));
        }
        CHECK(done == 25);
    }
}

TEST_CASE("coloring") {
    auto c6 = color_sck(cycle_graph(6), 6);
    CHECK(is_proper_coloring(cycle_graph(6), c6));
    CHECK(*std::max_element(c6.begin(), c6.end()) == 1);

    auto c5 = color_sck(cycle_graph(5), 5);
    CHECK(is_proper_coloring(cycle_graph(5), c5));
    CHECK(*std::max_element(c5.begin(), c5.end()) == 2);

    auto tree = color_sck(path_graph(7), 5);
    CHECK(is_proper_coloring(path_graph(7), tree));
    CHECK(*std::max_element(tree.begin(), tree.end()) == 1);

    CHECK(color_sck(complete_graph(1), 5) == std::vector<int>{0});
    CHECK_THROWS_AS(color_sck(complete_graph(4), 5), std::runtime_error);
}

TEST_CASE("is_chordal agrees with induced-cycle enumeration") {
    CHECK(is_chordal(complete_graph(4)));
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    CHECK(is_chordal(path_graph(5)));

    std::mt19937_64 rng(17);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_graph(8, 0.25 + 0.1 * (it % 5), rng);
        bool expect = true;
        for (const auto& c : enumerate_induced_cycles(g)) {
            if (c.length() >= 4) {
                expect = false;
                break;
            }
        }
        CHECK(is_chordal(g) == expect);
    }
}

TEST_CASE("fill_in on named graphs") {
    FillInResult c5 = fill_in(cycle_graph(5), 5);
    CHECK(c5.added_edges.size() == 2);
    CHECK(is_chordal(c5.chordal_graph));

    FillInResult c7 = fill_in(cycle_graph(7), 7);
    CHECK(c7.added_edges.size() == 4);
    CHECK(is_chordal(c7.chordal_graph));

    Graph cage = read_edge_list_file(fixture_path("cage_3_4.graph"));
    FillInResult fc = fill_in(cage, 6);
    CHECK(fc.added_edges.size() == 4);  // 3*(3-2)+1
    CHECK(is_chordal(fc.chordal_graph));

    FillInResult tr = fill_in(path_graph(6), 5);
    CHECK(tr.added_edges.empty());
}

TEST_CASE("fill_in is minimum on small instances") {
    auto chordal_fn = [](const Graph& g) { return is_chordal(g); };
    CHECK(min_fillin_bruteforce(cycle_graph(5), chordal_fn) == 2);
    CHECK(min_fillin_bruteforce(cycle_graph(7), chordal_fn) == 4);

    Graph cage = read_edge_list_file(fixture_path("cage_3_4.graph"));
    CHECK(min_fillin_bruteforce(cage, chordal_fn) == 4);

    for (int k : {5, 6, 7}) {
        for (int i = 0; i < 30; ++i) {
            Graph g = generated(k, i % 3, 8800 + 13 * k + i);
            if (g.vertex_count() > 9) continue;
            FillInResult r = fill_in(g, k);
            CHECK(static_cast<int>(r.added_edges.size()) ==
                  min_fillin_bruteforce(g, chordal_fn));
        }
    }
}

TEST_CASE("fill_in per-component counts") {
    for (int k : {5, 6, 7, 8}) {
        for (int i = 0; i < 20; ++i) {
            Graph g = generated(k, i % 8, 7100 + 29 * k + i);
            FillInResult r = fill_in(g, k);
            CHECK(is_chordal(r.chordal_graph));
            for (const auto& [kind, count] : r.per_component_counts) {
                if (kind == ComponentKind::CycleK) CHECK(count == k - 3);
                if (kind == ComponentKind::CutEdge) CHECK(count == 0);
            }
        }
    }
}

TEST_CASE("tree decomposition of a bare cycle fans from the lowest vertex") {
    TreeDecomposition td = tree_decomposition_odd(cycle_graph(5), 5);
    std::vector<std::vector<int>> expect{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}};
    std::vector<std::vector<int>> bags = td.bags;
    std::sort(bags.begin(), bags.end());
    CHECK(bags == expect);
    CHECK(td.width == 2);
    CHECK(validate_tree_decomposition(cycle_graph(5), td).valid);
}

TEST_CASE("even tree decomposition handles cycles and cages") {
    TreeDecomposition td = tree_decomposition_even(cycle_graph(6), 6);
    CHECK(td.bags.size() == 4);
    CHECK(td.width == 2);
    CHECK(validate_tree_decomposition(cycle_graph(6), td).valid);

    Graph cage = read_edge_list_file(fixture_path("cage_3_4.graph"));
    td = tree_decomposition_even(cage, 6);
    CHECK(td.width == 2);
    CHECK(validate_tree_decomposition(cage, td).valid);
    // per path: {w,z,u1} then {z,u1,u2}
    CHECK(td.bags.size() == 6);
}

TEST_CASE("tree decompositions validate on generated graphs") {
    for (int k : {5, 6, 7, 8}) {
        int done = 0;
        for (int i = 0; i < 60 && done < 30; ++i) {
            Graph g = generated(k, 1 + i % 9, 9900 + 41 * k + i);
            if (girth(g) == kNoCycle) continue;
            ++done;
            TreeDecomposition td = k % 2 == 1 ? tree_decomposition_odd(g, k)
                                              : tree_decomposition_even(g, k);
            TdValidation v = validate_tree_decomposition(g, td);
            INFO(v.violation);
            CHECK(v.valid);
            CHECK(td.width == 2);
            if (g.vertex_count() <= 12) CHECK(treewidth_bruteforce(g) == 2);
        }
        CHECK(done == 30);
    }
}

TEST_CASE("cycle-free inputs are rejected by the cycle algorithms") {
    CHECK_THROWS_AS(tree_decomposition_odd(path_graph(4), 5), std::runtime_error);
    CHECK_THROWS_AS(tree_decomposition_even(path_graph(4), 6), std::runtime_error);
    TreeDecomposition td = trivial_tree_decomposition(path_graph(6));
    CHECK(td.width == 1);
    CHECK(validate_tree_decomposition(path_graph(6), td).valid);

    Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    td = trivial_tree_decomposition(star);
    CHECK(validate_tree_decomposition(star, td).valid);
}

TEST_CASE("validator catches shuffled trees and broken coverage") {
    Graph g = two_cycles_shared_vertex(5);
    TreeDecomposition td = tree_decomposition_odd(g, 5);
    REQUIRE(validate_tree_decomposition(g, td).valid);

    TreeDecomposition bad = td;
    REQUIRE(bad.tree_edges.size() >= 2);
    // rewire one tree edge to break some vertex's subtree
    bool broke = false;
    for (size_t e = 0; e < bad.tree_edges.size() && !broke; ++e) {
        for (size_t b = 0; b < bad.bags.size() && !broke; ++b) {
            TreeDecomposition mut = td;
            mut.tree_edges[e].second = static_cast<int>(b);
            if (mut.tree_edges[e].first == mut.tree_edges[e].second) continue;
            TdValidation v = validate_tree_decomposition(g, mut);
            if (!v.valid) broke = true;
        }
    }
    CHECK(broke);

    TreeDecomposition missing = td;
    missing.bags.pop_back();
    missing.tree_edges.pop_back();
    CHECK_FALSE(validate_tree_decomposition(g, missing).valid);

    TreeDecomposition single;
    single.bags = {{0, 1, 2, 3, 4, 5, 6, 7, 8}};
    single.width = 8;
    CHECK(validate_tree_decomposition(g, single).valid);
}

TEST_CASE("treewidth bruteforce on known graphs") {
    CHECK(treewidth_bruteforce(cycle_graph(5)) == 2);
    CHECK(treewidth_bruteforce(cycle_graph(9)) == 2);
    CHECK(treewidth_bruteforce(path_graph(6)) == 1);
    CHECK(treewidth_bruteforce(complete_graph(4)) == 3);
    CHECK(treewidth_bruteforce(complete_graph(1)) == 0);
    CHECK_THROWS_AS(treewidth_bruteforce(cycle_graph(13)), std::runtime_error);
}
