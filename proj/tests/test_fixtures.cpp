#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "sck/algorithms.hpp"
#include "sck/ordering.hpp"
#include "sck/separators.hpp"

using namespace sck;
using namespace sck::testing;

TEST_CASE("showcase graph: census") {
    Graph g = read_edge_list_file(fixture_path("sc6_showcase.graph"));
    CHECK(g.vertex_count() == 25);
    CHECK(g.edge_count() == 28);
    CHECK(min_degree(g) == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(18) == 1);

    auto cycles = enumerate_induced_cycles(g);
    CHECK(cycles.size() == 5);
    for (const auto& c : cycles) CHECK(c.length() == 6);
    CHECK(girth(g) == 6);
    CHECK(chordality(g) == 6);
    CHECK(infer_k(g).k == 6);
    CHECK(subset_induced_cycles(induced_subgraph(g, {19, 20, 21, 22, 23, 24, 3, 4}).graph).size() ==
          3);
}

TEST_CASE("showcase graph: recognition and decomposition") {
    Graph g = read_edge_list_file(fixture_path("sc6_showcase.graph"));
    CHECK(is_sck_oracle(g, 6));
    CHECK_FALSE(is_sck_oracle(g, 5));

    RecognitionResult r = recognize_sck(g, 6);
    CHECK(r.is_sck);
    CHECK_FALSE(recognize_sck(g, 5).is_sck);

    int cut_edges_n = 0, cycles_n = 0, cages_n = 0;
    for (const auto& c : r.decomposition.components) {
        switch (c.kind) {
            case ComponentKind::CutEdge: ++cut_edges_n; break;
            case ComponentKind::CycleK: ++cycles_n; break;
            case ComponentKind::Cage: ++cages_n; break;
            default: FAIL("unexpected component kind");
        }
        if (c.kind == ComponentKind::Cage) {
            CHECK(c.cage_size == 3);
            CHECK(c.vertices == std::vector<int>{3, 4, 19, 20, 21, 22, 23, 24});
        }
    }
    CHECK(cut_edges_n == 7);
    CHECK(cycles_n == 2);
    CHECK(cages_n == 1);
}

TEST_CASE("showcase graph: separators, treewidth, coloring, fill-in") {
    Graph g = read_edge_list_file(fixture_path("sc6_showcase.graph"));
    SeparatorReport rep = check_separator_bounds(g, 6);
    CHECK(rep.violations.empty());
    CHECK(rep.max_cage_size == 3);

    CHECK(treewidth_bruteforce(g, 25) == 2);

    auto colors = color_sck(g, 6);
    CHECK(is_proper_coloring(g, colors));
    CHECK(*std::max_element(colors.begin(), colors.end()) == 1);

    FillInResult fr = fill_in(g, 6);
    CHECK(is_chordal(fr.chordal_graph));
    CHECK(fr.added_edges.size() == 2 * 3 + 4);  // two fans + one cage star

    CHECK_FALSE(is_hamiltonian_sck(g, 6).hamiltonian);
}

TEST_CASE("showcase graph: pendants and vco") {
    Graph g = read_edge_list_file(fixture_path("sc6_showcase.graph"));
    VcoLabel first = find_pendant(g, 6);
    CHECK(first.kind == VcoLabel::Kind::PendantVertex);
    CHECK(first.vertex == 0);

    Vco vco = extract_vco(g, 6);
    CHECK(replay_vco(vco) == g);
    int pv = 0;
    std::multiset<int> s_values;
    for (const auto& l : vco.labels) {
        if (l.kind == VcoLabel::Kind::PendantVertex) {
            ++pv;
        } else {
            s_values.insert(l.s);
        }
    }
    // tree vertices leave as pendant vertices; the cage sheds one 4-pendant
    // path; the two detached cycles leave as 0-pendants
    CHECK(pv == 7);
    CHECK(s_values == std::multiset<int>{0, 0, 4});
    CHECK(vco.base_vertices.size() == 6);
}

TEST_CASE("pyramid fixture: counts and non-hamiltonicity") {
    Graph g = read_edge_list_file(fixture_path("pyramid_3_c5.graph"));
    CHECK(g.vertex_count() == 11);
    CHECK(g.edge_count() == 13);
    CHECK(is_sck_oracle(g, 5));
    CHECK(recognize_sck(g, 5).is_sck);
    CHECK(g.degree(0) == 4);
    CHECK(g.degree(1) == 4);

    auto w = detect_3ck_pyramid(g, 5);
    REQUIRE(w.has_value());
    CHECK(w->base_edge == Edge{0, 1});

    CHECK_FALSE(is_hamiltonian_sck(g, 5).hamiltonian);
    auto bf = hamiltonian_bruteforce(g);
    CHECK_FALSE(bf.cycle.has_value());
    CHECK(bf.chvatal_fired);
}

TEST_CASE("cage fixture: recognition both parities") {
    Graph g = read_edge_list_file(fixture_path("cage_3_4.graph"));
    CHECK(is_sck_oracle(g, 6));
    CHECK(recognize_sck(g, 6).is_sck);
    CHECK_FALSE(recognize_sck(g, 7).is_sck);
    CHECK_FALSE(recognize_sck(g, 8).is_sck);
    CHECK(treewidth_bruteforce(g) == 2);
}

TEST_CASE("trace graph: the 11-bag decomposition, bag for bag") {
    Graph g = read_edge_list_file(fixture_path("sc5_trace.graph"));
    REQUIRE(is_sck_oracle(g, 5));

    auto cycles = enumerate_induced_cycles(g);
    REQUIRE(cycles.size() == 3);
    // canonical order: {0..4} cycle, {3..7} cycle, {4,8..11} cycle
    CHECK(cycles[0].vertices == std::vector<int>{0, 1, 4, 3, 2});
    CHECK(cycles[1].vertices == std::vector<int>{3, 4, 7, 5, 6});
    CHECK(cycles[2].vertices == std::vector<int>{4, 9, 8, 10, 11});

    TreeDecomposition td = tree_decomposition_odd(g, 5, {1, 6, 11});
    std::set<std::vector<int>> bags(td.bags.begin(), td.bags.end());
    std::set<std::vector<int>> expect{
        {2, 12},    {12, 13},  {3, 4, 6},   {4, 6, 7},  {5, 6, 7},  {0, 1, 2},
        {1, 2, 3},  {1, 3, 4}, {8, 10, 11}, {8, 9, 11}, {4, 9, 11},
    };
    CHECK(bags == expect);
    CHECK(td.bags.size() == 11);
    CHECK(td.width == 2);
    TdValidation v = validate_tree_decomposition(g, td);
    INFO(v.violation);
    CHECK(v.valid);

    // default fan vertices give a different but equally valid decomposition
    TreeDecomposition dflt = tree_decomposition_odd(g, 5);
    CHECK(dflt.width == 2);
    CHECK(validate_tree_decomposition(g, dflt).valid);
    CHECK(treewidth_bruteforce(g, 14) == 2);
}
