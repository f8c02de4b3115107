#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "chroma/corpus.hpp"
#include "chroma/graph.hpp"
#include "chroma/rng.hpp"

using namespace chroma;

namespace {

Graph p3() { return Graph::build(3, {{0, 1}, {1, 2}}); }
Graph c4() { return Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Graph c5() { return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
Graph k4() { return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph k4_minus_01() { return Graph::build(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("canonical_pair orders endpoints") {
    CHECK(canonical_pair(3, 1) == VertexPair{1, 3});
    CHECK(canonical_pair(1, 3) == VertexPair{1, 3});
    CHECK_THROWS_AS(canonical_pair(2, 2), GraphError);
}

TEST_CASE("build: P3 construction") {
    const Graph g = p3();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("build: duplicate edges collapse") {
    const Graph g = Graph::build(4, {{0, 1}, {0, 1}});
    CHECK(g.edge_count() == 1);
    const Graph h = Graph::build(4, {{0, 1}, {1, 0}});
    CHECK(h.edge_count() == 1);
}

TEST_CASE("build: rejects self-loops and out-of-range endpoints") {
    CHECK_THROWS_AS(Graph::build(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::build(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Graph::build(2, {{-1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::build(0, {}), GraphError);
}

TEST_CASE("adjacency is symmetric and loop-free on random graphs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = generate(GraphFamily::random(12, 0.4, seed));
        for (int v : g.vertices()) {
            CHECK_FALSE(g.adjacent(v, v));
            for (int u : g.neighbors(v)) CHECK(g.adjacent(u, v));
        }
    }
}

TEST_CASE("common_neighborhood: hand cases") {
    const Graph path4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(path4.common_neighborhood(0, 2) == std::vector<int>{1});

    CHECK(k4_minus_01().common_neighborhood(0, 1) == std::vector<int>{2, 3});

    const Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.common_neighborhood(1, 2) == std::vector<int>{0});
}

TEST_CASE("common_neighborhood: symmetric, defined for adjacent pairs, errors on missing") {
    const Graph g = c5();
    for (int u : g.vertices())
        for (int v : g.vertices())
            if (u != v) CHECK(g.common_neighborhood(u, v) == g.common_neighborhood(v, u));
    CHECK(g.common_neighborhood(0, 1).empty());  // adjacent pair, still defined
    CHECK_THROWS_AS(g.common_neighborhood(0, 9), GraphError);
}

TEST_CASE("contract: P3 collapses to K2") {
    const Graph g = p3().contract(0, 2);
    CHECK(g.vertex_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.provenance(0) == std::vector<int>{0, 2});
    CHECK(g.provenance(1) == std::vector<int>{1});
}

TEST_CASE("contract: C4 merge keeps (1,3) non-adjacent") {
    const Graph g = c4().contract(0, 2);
    CHECK(g.vertex_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 3));
    CHECK_FALSE(g.adjacent(1, 3));
}

TEST_CASE("contract: C5 merge keeps the far edge") {
    const Graph g = c5().contract(0, 2);
    CHECK(g.vertex_count() == 4);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 3));
    CHECK(g.adjacent(0, 4));
    CHECK(g.adjacent(3, 4));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK_FALSE(g.adjacent(1, 4));
}

TEST_CASE("contract: argument order does not matter; input value unchanged") {
    const Graph g = c5();
    CHECK(g.contract(0, 2) == g.contract(2, 0));
    const Graph before = g;
    (void)g.contract(0, 2);
    CHECK(g == before);
}

TEST_CASE("contract: rejects adjacent pairs and missing vertices") {
    CHECK_THROWS_AS(c5().contract(0, 1), GraphError);
    CHECK_THROWS_AS(c5().contract(0, 7), GraphError);
    CHECK_THROWS_AS(c5().contract(3, 3), GraphError);
}

TEST_CASE("contract: vertex count drops by one, edge count never grows") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = generate(GraphFamily::random(10, 0.5, seed));
        while (!g.is_complete()) {
            std::optional<std::pair<int, int>> pick;
            for (int u : g.vertices()) {
                for (int v : g.vertices())
                    if (u < v && !g.adjacent(u, v)) {
                        pick = {u, v};
                        break;
                    }
                if (pick) break;
            }
            REQUIRE(pick);
            const Graph h = g.contract(pick->first, pick->second);
            CHECK(h.vertex_count() == g.vertex_count() - 1);
            CHECK(h.edge_count() <= g.edge_count());
            g = h;
        }
    }
}

TEST_CASE("provenance: classes stay disjoint, cover 0..n-1, independent in the original") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph original = generate(GraphFamily::random(10, 0.4, seed));
        Graph g = original;
        SplitMix64 rng(seed * 977);
        while (!g.is_complete()) {
            std::vector<std::pair<int, int>> nonadj;
            for (int u : g.vertices())
                for (int v : g.vertices())
                    if (u < v && !g.adjacent(u, v)) nonadj.emplace_back(u, v);
            const auto [u, v] = nonadj[rng.next_below(nonadj.size())];
            g = g.contract(u, v);

            std::set<int> seen;
            for (int w : g.vertices()) {
                const auto& cls = g.provenance(w);
                CHECK(!cls.empty());
                CHECK(cls.front() == w);  // smallest merged id survives as the vertex id
                for (int orig : cls) CHECK(seen.insert(orig).second);
                CHECK(original.is_independent_set(cls));
            }
            CHECK(static_cast<int>(seen.size()) == original.vertex_count());
        }
    }
}

TEST_CASE("is_complete") {
    CHECK(k4().is_complete());
    CHECK_FALSE(k4_minus_01().is_complete());
    CHECK(Graph::build(1, {}).is_complete());
    CHECK(Graph().is_complete());  // vacuous
}

TEST_CASE("delete_vertices: C5 minus the selected pair") {
    const Graph g = c5().delete_vertices({0, 2});
    CHECK(g.vertices() == std::vector<int>{1, 3, 4});
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(3, 4));
    CHECK(g.degree(1) == 0);
}

TEST_CASE("delete_vertices: empty drop is identity, full drop is the empty graph") {
    const Graph g = c5();
    CHECK(g.delete_vertices({}) == g);
    const Graph empty = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}}).delete_vertices({0, 1, 2});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.is_complete());
    CHECK_THROWS_AS(g.delete_vertices({9}), GraphError);
}

TEST_CASE("is_independent_set") {
    const Graph g = c5();
    CHECK(g.is_independent_set({0, 2}));
    CHECK_FALSE(g.is_independent_set({0, 1}));
    CHECK(g.is_independent_set({}));
    CHECK_THROWS_AS(g.is_independent_set({0, 9}), GraphError);
}

TEST_CASE("is_connected") {
    CHECK(c5().is_connected());
    CHECK_FALSE(Graph::build(4, {{0, 1}, {2, 3}}).is_connected());
    CHECK(Graph::build(1, {}).is_connected());
    CHECK_FALSE(Graph::build(2, {}).is_connected());
}
