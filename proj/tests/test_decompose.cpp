#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "sck/decompose.hpp"

using namespace sck;
using namespace sck::testing;

namespace {

// every input edge appears in some component; recombination reproduces g
void check_partition(const Graph& g, const Decomposition& dec) {
    std::set<Edge> covered;
    std::map<Edge, int> owners;
    std::set<int> vertices;
    for (const auto& c : dec.components) {
        for (const auto& e : c.edges) {
            covered.insert(e);
            ++owners[e];
        }
        vertices.insert(c.vertices.begin(), c.vertices.end());
    }
    auto ge = g.edges();
    CHECK(covered == std::set<Edge>(ge.begin(), ge.end()));
    CHECK(static_cast<int>(vertices.size()) == g.vertex_count());
    // components pairwise share at most one vertex or the re-added edge
    for (size_t i = 0; i < dec.components.size(); ++i) {
        for (size_t j = i + 1; j < dec.components.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(dec.components[i].vertices.begin(),
                                  dec.components[i].vertices.end(),
                                  dec.components[j].vertices.begin(),
                                  dec.components[j].vertices.end(), std::back_inserter(inter));
            CHECK(inter.size() <= 2);
            if (inter.size() == 2) {
                Edge e = make_edge(inter[0], inter[1]);
                CHECK(g.has_edge(e.first, e.second));
                CHECK(owners[e] >= 2);  // the re-added separator edge
            }
        }
    }
}

}  // namespace

TEST_CASE("decomposition of glued cycles") {
    Graph se = two_cycles_shared_edge(5);
    Decomposition dec = clique_separator_decompose(se);
    REQUIRE(dec.components.size() == 2);
    for (const auto& c : dec.components) {
        CHECK(c.vertices.size() == 5);
        CHECK(c.edges.size() == 5);
        CHECK(classify_component(c, 5) == ComponentKind::CycleK);
    }
    check_partition(se, dec);

    Graph tree = path_graph(5);
    Decomposition tdec = clique_separator_decompose(tree);
    CHECK(tdec.components.size() == 4);
    for (const auto& c : tdec.components) CHECK(classify_component(c, 5) == ComponentKind::CutEdge);
}

TEST_CASE("decomposition partition invariant on random graphs") {
    std::mt19937_64 rng(314);
    int done = 0;
    for (int it = 0; it < 200 && done < 50; ++it) {
        Graph g = random_graph(9, 0.3, rng);
        if (!g.is_connected()) continue;
        ++done;
        check_partition(g, clique_separator_decompose(g));
    }
    CHECK(done == 50);
}

TEST_CASE("classify_component basics") {
    Component k2;
    k2.vertices = {0, 1};
    k2.edges = {{0, 1}};
    CHECK(classify_component(k2, 6) == ComponentKind::CutEdge);

    Graph c6 = cycle_graph(6);
    Component cyc;
    cyc.vertices = {0, 1, 2, 3, 4, 5};
    cyc.edges = c6.edges();
    CHECK(classify_component(cyc, 6) == ComponentKind::CycleK);
    CHECK(classify_component(cyc, 5) == ComponentKind::Other);

    Graph cage = read_edge_list_file(fixture_path("cage_3_4.graph"));
    Component cg;
    cg.vertices = {0, 1, 2, 3, 4, 5, 6, 7};
    cg.edges = cage.edges();
    int n = 0;
    CHECK(classify_component(cg, 6, &n) == ComponentKind::Cage);
    CHECK(n == 3);
}

TEST_CASE("bfs_cage_test") {
    Graph cage = read_edge_list_file(fixture_path("cage_3_4.graph"));
    Component cg;
    cg.vertices = {0, 1, 2, 3, 4, 5, 6, 7};
    cg.edges = cage.edges();
    CHECK(bfs_cage_test(cg, 6) == 3);

    Component cyc;
    cyc.vertices = {0, 1, 2, 3, 4, 5};
    cyc.edges = cycle_graph(6).edges();
    CHECK_FALSE(bfs_cage_test(cyc, 6).has_value());

    // a 3-C_6 pyramid has adjacent hubs, which step 1 rejects
    Graph pyr(14);
    pyr.add_edge(0, 1);
    int next = 2;
    for (int p = 0; p < 3; ++p) {
        std::vector<int> path;
        for (int i = 0; i < 4; ++i) path.push_back(next++);
        pyr.add_edge(0, path.front());
        for (size_t i = 0; i + 1 < path.size(); ++i) pyr.add_edge(path[i], path[i + 1]);
        pyr.add_edge(path.back(), 1);
    }
    Component pc;
    pc.vertices.resize(14);
    for (int i = 0; i < 14; ++i) pc.vertices[i] = i;
    pc.edges = pyr.edges();
    CHECK_FALSE(bfs_cage_test(pc, 6).has_value());
}

TEST_CASE("recognize_sck on named graphs") {
    CHECK(recognize_sck(cycle_graph(5), 5).is_sck);
    CHECK_FALSE(recognize_sck(cycle_graph(5), 7).is_sck);
    CHECK(recognize_sck(complete_graph(1), 5).is_sck);
    CHECK(recognize_sck(build_graph(2, {{0, 1}}), 5).is_sck);
    CHECK_FALSE(recognize_sck(complete_graph(4), 5).is_sck);
    CHECK_THROWS_AS(recognize_sck(cycle_graph(5), 4), std::invalid_argument);

    // C_5 with a pendant path
    Graph g = cycle_graph(5);
    int a = g.add_vertex();
    int b = g.add_vertex();
    g.add_edge(2, a);
    g.add_edge(a, b);
    CHECK(recognize_sck(g, 5).is_sck);
}

TEST_CASE("recognizer agrees with the oracle exhaustively on 5 vertices") {
    for_each_connected_graph(5, [](const Graph& g) {
        for (int k : {5, 6}) {
            CHECK(recognize_sck(g, k).is_sck == is_sck_oracle(g, k));
        }
    });
}

TEST_CASE("recognizer agrees with the oracle on random graphs") {
    std::mt19937_64 rng(777);
    int done = 0;
    for (int it = 0; it < 600 && done < 200; ++it) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.22 + 0.08 * (it % 4), rng);
        if (!g.is_connected()) continue;
        ++done;
        for (int k : {5, 6, 7, 8}) {
            CHECK(recognize_sck(g, k).is_sck == is_sck_oracle(g, k));
        }
    }
    CHECK(done == 200);
}

TEST_CASE("odd k never classifies a cage") {
    Graph cage = read_edge_list_file(fixture_path("cage_3_4.graph"));
    RecognitionResult r = recognize_sck(cage, 7);
    CHECK_FALSE(r.is_sck);
    for (const auto& c : r.decomposition.components) {
        CHECK(c.kind != ComponentKind::Cage);
    }
}
