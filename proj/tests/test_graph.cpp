#include "doctest.h"

#include <string>
#include <variant>

#include "d2c/graph.hpp"
#include "test_util.hpp"

using namespace d2c;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{-1, 0}}), std::invalid_argument);

    Graph g(3, {{1, 2}, {0, 1}});
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("two coloring validates values") {
    CHECK_THROWS_AS(TwoColoring({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(TwoColoring({0}), std::invalid_argument);
    TwoColoring c({1, 2, 1});
    CHECK(c.size() == 3);
    CHECK(c[2] == 1);
}

TEST_CASE("graph6 parse: known records") {
    Graph empty2 = parse_graph6("A?");
    CHECK(empty2.n() == 2);
    CHECK(empty2.m() == 0);

    Graph k2 = parse_graph6("A_");
    CHECK(k2.n() == 2);
    CHECK(k2.edges() == std::vector<std::pair<int, int>>{{0, 1}});

    Graph k3 = parse_graph6("Bw");
    CHECK(k3 == testutil::complete(3));

    Graph p3 = parse_graph6("Bg");
    CHECK(p3 == testutil::path(3));

    Graph cherry = parse_graph6("BW");
    CHECK(cherry.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

    Graph c5 = parse_graph6("Dhc");
    CHECK(c5 == testutil::cycle(5));
}

TEST_CASE("graph6 parse: malformed records") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("?"), ParseError);       // n = 0
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);       // truncated
    CHECK_THROWS_AS(parse_graph6("A_X"), ParseError);     // trailing bytes
    CHECK_THROWS_AS(parse_graph6("A\x20"), ParseError);   // byte below 63
    CHECK_THROWS_AS(parse_graph6("A\x7f"), ParseError);   // byte above 126
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);      // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~~????"), ParseError);  // 6-byte sizes unsupported

    CHECK_THROWS_WITH_AS(parse_graph6("A`"), doctest::Contains("padding"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6("A\x20"), doctest::Contains("byte 1"), ParseError);
}

TEST_CASE("graph6 write: known records and round trips") {
    CHECK(write_graph6(Graph(2)) == "A?");
    CHECK(write_graph6(Graph(2, {{0, 1}})) == "A_");
    CHECK(write_graph6(testutil::complete(3)) == "Bw");
    CHECK(write_graph6(testutil::path(3)) == "Bg");
    CHECK(write_graph6(testutil::cycle(5)) == "Dhc");
    CHECK_THROWS_AS(write_graph6(Graph()), std::invalid_argument);

    auto rng = testutil::make_rng(1001);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 40;
        Graph g = testutil::random_graph(n, 0.4, rng);
        Graph back = parse_graph6(write_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 extended size encoding round trips above 62 vertices") {
    auto rng = testutil::make_rng(1002);
    for (int n : {63, 100, 200}) {
        Graph g = testutil::random_graph(n, 0.05, rng);
        std::string rec = write_graph6(g);
        CHECK(rec[0] == '~');
        CHECK(parse_graph6(rec) == g);
    }
}

TEST_CASE("edge list parse") {
    CHECK(parse_edge_list("2 1\n0 1") == Graph(2, {{0, 1}}));
    CHECK(parse_edge_list("3 2\n0 1\n1 2") == testutil::path(3));
    CHECK(parse_edge_list("# comment\n3 2\n\n0 1\n# another\n1 2\n") == testutil::path(3));

    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 0"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 2\n0 1\n1 0"), doctest::Contains("duplicate"),
                         ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);

    auto rng = testutil::make_rng(1003);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::random_graph(2 + trial, 0.5, rng);
        std::string text = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
        for (auto [u, v] : g.edges())
            text += std::to_string(u) + " " + std::to_string(v) + "\n";
        CHECK(parse_edge_list(text) == g);
    }
}

TEST_CASE("complement") {
    CHECK(complement(Graph(2, {{0, 1}})) == Graph(2));
    CHECK(complement(testutil::path(3)) == Graph(3, {{0, 2}}));

    auto rng = testutil::make_rng(1004);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testutil::random_graph(1 + trial % 12, 0.5, rng);
        CHECK(complement(complement(g)) == g);
        CHECK(g.m() + complement(g).m() == g.n() * (g.n() - 1) / 2);
    }
}

TEST_CASE("connected components") {
    auto single = connected_components(Graph(2, {{0, 1}}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].graph == Graph(2, {{0, 1}}));
    CHECK(single[0].vertex_map == std::vector<int>{0, 1});

    auto isolated = connected_components(Graph(2));
    REQUIRE(isolated.size() == 2);
    CHECK(isolated[0].graph.n() == 1);
    CHECK(isolated[1].vertex_map == std::vector<int>{1});

    // path on {0,1,2} plus an edge on {3,4}
    Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph.n() == 3);
    CHECK(comps[1].graph.n() == 2);
    CHECK(comps[0].graph == testutil::path(3));
    CHECK(comps[1].vertex_map == std::vector<int>{3, 4});

    auto rng = testutil::make_rng(1005);
    for (int trial = 0; trial < 30; ++trial) {
        Graph r = testutil::random_graph(1 + trial % 10, 0.25, rng);
        auto parts = connected_components(r);
        std::vector<int> seen(r.n(), 0);
        int prev_min = -1;
        for (const auto& part : parts) {
            CHECK(is_connected(part.graph));
            CHECK(part.graph.n() == static_cast<int>(part.vertex_map.size()));
            CHECK(part.vertex_map.front() > prev_min);
            prev_min = part.vertex_map.front();
            for (int v = 0; v < part.graph.n(); ++v) {
                CHECK(seen[part.vertex_map[v]] == 0);
                seen[part.vertex_map[v]] = 1;
                for (int w : part.graph.neighbors(v))
                    CHECK(r.has_edge(part.vertex_map[v], part.vertex_map[w]));
            }
        }
        for (int flag : seen) CHECK(flag == 1);
    }
}

TEST_CASE("bipartition") {
    auto p3 = bipartition(testutil::path(3));
    REQUIRE(std::holds_alternative<TwoColoring>(p3));
    CHECK(std::get<TwoColoring>(p3).colors == std::vector<int>{1, 2, 1});

    auto c5 = bipartition(testutil::cycle(5));
    REQUIRE(std::holds_alternative<OddCycleCertificate>(c5));
    const auto& cert = std::get<OddCycleCertificate>(c5);
    CHECK(cert.cycle.size() == 5);
    CHECK(is_valid_odd_cycle(testutil::cycle(5), cert));

    auto two = bipartition(Graph(2));
    REQUIRE(std::holds_alternative<TwoColoring>(two));
    CHECK(std::get<TwoColoring>(two).colors == std::vector<int>{1, 1});

    auto rng = testutil::make_rng(1006);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testutil::random_graph(1 + trial % 12, 0.3, rng);
        auto result = bipartition(g);
        if (const auto* colors = std::get_if<TwoColoring>(&result)) {
            CHECK(is_proper(g, *colors));
        } else {
            CHECK(is_valid_odd_cycle(g, std::get<OddCycleCertificate>(result)));
        }
    }
}

TEST_CASE("odd cycle validation rejects bad certificates") {
    Graph c5 = testutil::cycle(5);
    CHECK(!is_valid_odd_cycle(c5, {{0, 1, 2, 3}}));           // even length
    CHECK(!is_valid_odd_cycle(c5, {{0, 1, 3, 2, 4}}));        // non-adjacent step
    CHECK(!is_valid_odd_cycle(c5, {{0, 1, 0, 1, 0}}));        // repeats
    CHECK(!is_valid_odd_cycle(testutil::path(3), {{0, 1, 2}}));  // not closed
}

TEST_CASE("subdivide") {
    auto [p3, map_k2] = subdivide(Graph(2, {{0, 1}}));
    CHECK(p3 == Graph(3, {{0, 2}, {1, 2}}));
    CHECK(map_k2.source_n == 2);
    CHECK(map_k2.source_edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(map_k2.edge_vertex(1, 0) == 2);
    CHECK(map_k2.source_edge(2) == std::pair<int, int>{0, 1});
    CHECK(map_k2.source_graph() == Graph(2, {{0, 1}}));
    CHECK(map_k2.subdivided_graph() == p3);

    auto [c6, map_k3] = subdivide(testutil::complete(3));
    CHECK(c6.n() == 6);
    CHECK(c6.m() == 6);
    for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
    CHECK(is_connected(c6));

    auto [k1, map_k1] = subdivide(Graph(1));
    CHECK(k1 == Graph(1));
    CHECK(map_k1.source_edges.empty());

    auto rng = testutil::make_rng(1007);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testutil::random_graph(1 + trial % 9, 0.5, rng);
        auto [sub, map] = subdivide(g);
        CHECK(sub.n() == g.n() + g.m());
        CHECK(sub.m() == 2 * g.m());
        for (int v = g.n(); v < sub.n(); ++v) CHECK(sub.degree(v) == 2);
        CHECK(std::holds_alternative<TwoColoring>(bipartition(sub)));
        CHECK(is_connected(sub) == is_connected(g));
        for (auto [u, v] : g.edges()) {
            auto ev = map.edge_vertex(u, v);
            REQUIRE(ev.has_value());
            CHECK(sub.has_edge(u, *ev));
            CHECK(sub.has_edge(v, *ev));
            CHECK(!sub.has_edge(u, v));
        }
    }
}

TEST_CASE("disjoint union") {
    Graph u = disjoint_union({Graph(2, {{0, 1}}), Graph(2, {{0, 1}})});
    CHECK(u == Graph(4, {{0, 1}, {2, 3}}));
    CHECK(disjoint_union({Graph(1)}) == Graph(1));
}
