#include "../support/oracles.hh"

#include <inlim/errors.hh>
#include <inlim/generate.hh>
#include <inlim/graph.hh>

#include <doctest.h>

using namespace inlim;
using inlim::generate::Rng;

namespace
{
    auto c4() -> SimpleGraph
    {
        return SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    }

    auto k4() -> SimpleGraph
    {
        return SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    }
}

TEST_CASE("simple graphs reject loops, repeated pairs and stray endpoints")
{
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), InvalidInput);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), InvalidInput);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), InvalidInput);
    try {
        (void)SimpleGraph(3, {{0, 0}, {0, 1}, {0, 1}});
        FAIL("no exception");
    }
    catch (const InvalidInput & e) {
        CHECK(e.violations().size() == 2);
    }
}

TEST_CASE("components")
{
    auto two = SimpleGraph(4, {{0, 1}, {2, 3}});
    CHECK(components(two).count == 2);
    CHECK(components(two).label[0] == components(two).label[1]);
    CHECK(components(two).label[1] != components(two).label[2]);
    CHECK(components(c4()).count == 1);

    Rng rng(11);
    for (int round = 0; round < 100; ++round) {
        auto g = generate::random_graph(8, 0.2, rng);
        auto reach = test::reachability(g);
        auto c = components(g);
        for (VertexId u = 0; u < 8; ++u)
            for (VertexId v = 0; v < 8; ++v)
                REQUIRE((c.label[u] == c.label[v]) == reach[u][v]);
    }
}

TEST_CASE("forest recognition")
{
    CHECK(is_forest(SimpleGraph(3, {{0, 1}, {1, 2}})));
    CHECK(! is_forest(c4()));
    CHECK(is_forest(SimpleGraph(5, {})));
    CHECK(is_forest(SimpleGraph(0, {})));
}

TEST_CASE("cycle finding")
{
    CHECK(! find_cycle(SimpleGraph(4, {{0, 1}, {1, 2}, {1, 3}})));

    auto cycle = find_cycle(c4());
    REQUIRE(cycle);
    CHECK(cycle->size() == 4);
    CHECK(test::is_simple_cycle(c4(), *cycle));

    auto in_k4 = find_cycle(k4());
    REQUIRE(in_k4);
    CHECK(test::is_simple_cycle(k4(), *in_k4));

    Rng rng(12);
    for (int round = 0; round < 200; ++round) {
        auto g = generate::random_graph(9, 0.25, rng);
        auto found = find_cycle(g);
        REQUIRE(found.has_value() == ! is_forest(g));
        REQUIRE(found.has_value() == ! test::brute_is_forest_without(g, std::vector<std::uint8_t>(9, 0)));
        if (found)
            REQUIRE(test::is_simple_cycle(g, *found));
    }
}

TEST_CASE("exact feedback vertex sets")
{
    auto tree = SimpleGraph(4, {{0, 1}, {1, 2}, {1, 3}});
    auto none_needed = fvs_exact(tree, 0);
    REQUIRE(none_needed);
    CHECK(none_needed->empty());

    CHECK(! fvs_exact(c4(), 0));
    auto one = fvs_exact(c4(), 1);
    REQUIRE(one);
    CHECK(one->size() == 1);
    CHECK(one->members() == std::vector<VertexId>{0});

    CHECK(! fvs_exact(k4(), 1));
    auto two = fvs_exact(k4(), 2);
    REQUIRE(two);
    CHECK(two->size() == 2);
    CHECK(is_feedback_vertex_set(k4(), *two));
    CHECK(test::brute_has_fvs(k4(), 2));
    CHECK(! test::brute_has_fvs(k4(), 1));
}

TEST_CASE("exact feedback vertex sets agree with exhaustive search")
{
    Rng rng(13);
    for (int round = 0; round < 150; ++round) {
        auto n = 3 + round % 8;
        auto g = generate::random_graph(n, 0.35, rng);
        for (std::size_t k = 0; k <= 4; ++k) {
            auto s = fvs_exact(g, k);
            REQUIRE(s.has_value() == test::brute_has_fvs(g, k));
            if (s) {
                REQUIRE(s->size() <= k);
                REQUIRE(is_forest(remove_vertices(g, *s).graph));
            }
        }
        // deterministic: same graph, same answer
        REQUIRE(fvs_exact(g, 4) == fvs_exact(g, 4));
    }
}

TEST_CASE("smallest feedback vertex sets")
{
    Rng rng(17);
    for (int round = 0; round < 120; ++round) {
        auto g = generate::random_graph(4 + round % 6, 0.5, rng);
        auto s = fvs_minimum(g, 6);
        REQUIRE(s);
        REQUIRE(is_feedback_vertex_set(g, *s));
        REQUIRE(test::brute_has_fvs(g, s->size()));
        if (s->size() > 0)
            REQUIRE(! test::brute_has_fvs(g, s->size() - 1));
    }
    CHECK(! fvs_minimum(k4(), 1));
}

TEST_CASE("removing vertices")
{
    VertexSet first(4);
    first.insert(0);
    auto path = remove_vertices(c4(), first);
    CHECK(path.graph.vertex_count() == 3);
    CHECK(path.graph.edge_count() == 2);
    CHECK(is_forest(path.graph));
    CHECK(path.vertex_origin == std::vector<VertexId>{1, 2, 3});
    CHECK(path.edge_origin == std::vector<EdgeId>{1, 2});
    CHECK(! path.vertex_map[0]);
    CHECK(path.vertex_map[2] == 1);

    VertexSet all(4, std::vector<VertexId>{0, 1, 2, 3});
    auto empty = remove_vertices(c4(), all);
    CHECK(empty.graph.vertex_count() == 0);
    CHECK(empty.graph.edge_count() == 0);

    Rng rng(14);
    std::bernoulli_distribution coin(0.3);
    for (int round = 0; round < 100; ++round) {
        auto g = generate::random_graph(9, 0.4, rng);
        VertexSet s(9);
        for (VertexId v = 0; v < 9; ++v)
            if (coin(rng))
                s.insert(v);
        auto r = remove_vertices(g, s);
        std::size_t edges = 0;
        for (auto [u, v] : g.edges())
            if (! s.contains(u) && ! s.contains(v))
                ++edges;
        REQUIRE(r.graph.vertex_count() == 9 - s.size());
        REQUIRE(r.graph.edge_count() == edges);
        for (EdgeId e = 0; e < r.graph.edge_count(); ++e) {
            auto [a, b] = r.graph.edge(e);
            auto [u, v] = g.edge(r.edge_origin[e]);
            REQUIRE(r.vertex_origin[a] == u);
            REQUIRE(r.vertex_origin[b] == v);
        }
    }
}

TEST_CASE("vertex sets check their range")
{
    CHECK_THROWS_AS(VertexSet(3, std::vector<VertexId>{3}), InvalidInput);
    CHECK_THROWS_AS((void)remove_vertices(c4(), VertexSet(3)), InvalidInput);
    CHECK(! is_feedback_vertex_set(c4(), VertexSet(3)));
}
