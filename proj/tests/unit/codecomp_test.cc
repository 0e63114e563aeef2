#include "../support/fixtures.hh"
#include "../support/oracles.hh"

#include <inlim/codecomp.hh>
#include <inlim/errors.hh>
#include <inlim/generate.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace inlim;
using inlim::generate::Rng;
using inlim::generate::ShapeKind;
using std::string;
using std::vector;

namespace
{
    auto masked(const FinSetObj & s, std::span<const std::uint8_t> mask) -> vector<string>
    {
        return test::names(s, mask);
    }

    // Filters every edge in the given order until nothing changes.
    auto fixpoint(const CoDecomposition & d, SubMask m, const vector<EdgeId> & order) -> SubMask
    {
        while (true) {
            auto before = m;
            for (auto e : order)
                (void)filter(d, m, e);
            if (m == before)
                return m;
        }
    }

    auto any_vertex_empty(const SubMask & m) -> bool
    {
        for (VertexId t = 0; t < m.vertex_count(); ++t)
            if (m.vertex_empty(t))
                return true;
        return false;
    }

    auto random_instance(Rng & rng, int round) -> CoDecomposition
    {
        auto kind = round % 3 == 0 ? ShapeKind::tree : ShapeKind::random;
        return test::random_small_diagram(kind, 2 + round % 6, 1 + round % 4, rng, 0.4);
    }
}

TEST_CASE("validation")
{
    CHECK(validate(test::path_example()).empty());
    CHECK(validate(test::cycle_example()).empty());
    CHECK_NOTHROW(require_valid(test::cycle_example()));

    auto too_wide = test::path_example();
    too_wide.legs[0][1] = FinFn(3, {0, 2});
    auto violations = validate(too_wide);
    REQUIRE(! violations.empty());
    CHECK(violations.front().find("edge 0") != string::npos);
    CHECK_THROWS_AS(require_valid(too_wide), InvalidInput);

    auto short_leg = test::path_example();
    short_leg.legs[1][1] = FinFn(2, {1});
    CHECK(! validate(short_leg).empty());

    auto missing = test::path_example();
    missing.legs.pop_back();
    CHECK(! validate(missing).empty());

    auto sets = test::path_example();
    sets.vertex_sets.pop_back();
    CHECK(! validate(sets).empty());
}

TEST_CASE("filter on the four-cycle")
{
    auto d = test::cycle_example();
    for (EdgeId e = 0; e < 4; ++e) {
        auto m = SubMask::full(d);
        CHECK(filter(d, m, e));
        CHECK(m == SubMask::full(d));
    }

    // pin vertex 0 to a and filter both of its edges
    auto m = SubMask::full(d);
    m.vertex(0)[1] = 0;
    CHECK(filter(d, m, 0));
    CHECK(filter(d, m, 3));
    CHECK(masked(d.vertex_sets[0], m.vertex(0)) == vector<string>{"a"});
    CHECK(masked(d.edge_sets[0], m.edge(0)) == vector<string>{"3"});
    CHECK(masked(d.vertex_sets[1], m.vertex(1)) == vector<string>{"d"});
    CHECK(masked(d.edge_sets[3], m.edge(3)) == vector<string>{"a"});
    CHECK(masked(d.vertex_sets[3], m.vertex(3)) == vector<string>{"a"});
    CHECK(masked(d.edge_sets[2], m.edge(2)) == vector<string>{"1", "2"});
    CHECK(masked(d.vertex_sets[2], m.vertex(2)) == vector<string>{"c", "d"});

    CHECK_THROWS_AS((void)filter(d, m, 4), InvalidInput);
}

TEST_CASE("filter empties the cospan")
{
    auto d = test::cospan_example();
    auto m = SubMask::full(d);
    CHECK(! filter(d, m, 0));
    CHECK(m.vertex_empty(0));
    CHECK(m.vertex_empty(1));
    CHECK(m.edge(0)[0] == 0);
    CHECK(m.edge(0)[1] == 0);
}

TEST_CASE("filter properties on generated masks")
{
    Rng rng(31);
    int checked = 0;
    for (int round = 0; round < 300; ++round) {
        auto d = random_instance(rng, round);
        if (d.shape.edge_count() == 0)
            continue;
        auto m = test::random_leg_closed_mask(d, rng);
        REQUIRE(leg_closed(d, m));
        auto e = std::uniform_int_distribution<EdgeId>(0, static_cast<EdgeId>(d.shape.edge_count() - 1))(rng);

        auto once = m;
        auto alive = filter(d, once, e);
        auto [x, y] = d.shape.edge(e);
        REQUIRE(alive == (! once.vertex_empty(x) && ! once.vertex_empty(y)));
        REQUIRE(once.subset_of(m));
        REQUIRE(leg_closed(d, once));

        auto twice = once;
        (void)filter(d, twice, e);
        REQUIRE(twice == once);

        // the edge mask is the common image, from either side
        auto from_x = image(d.legs[e][0], once.vertex(x));
        auto from_y = image(d.legs[e][1], once.vertex(y));
        auto edge = once.edge(e);
        REQUIRE(from_x == from_y);
        REQUIRE(ElementMask(edge.begin(), edge.end()) == from_x);

        // only the edge and its endpoints move
        for (VertexId t = 0; t < d.shape.vertex_count(); ++t)
            if (t != x && t != y)
                REQUIRE(std::ranges::equal(once.vertex(t), m.vertex(t)));
        for (EdgeId f = 0; f < d.shape.edge_count(); ++f)
            if (f != e)
                REQUIRE(std::ranges::equal(once.edge(f), m.edge(f)));

        REQUIRE(test::masked_families(d, once) == test::masked_families(d, m));
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("exhaustive filtering reaches the same fixpoint in any order")
{
    Rng rng(32);
    int checked = 0;
    for (int round = 0; round < 200; ++round) {
        auto d = random_instance(rng, round);
        auto m = test::random_leg_closed_mask(d, rng, 0.8);
        vector<EdgeId> order(d.shape.edge_count());
        std::iota(order.begin(), order.end(), 0);
        auto forward = fixpoint(d, m, order);
        std::shuffle(order.begin(), order.end(), rng);
        auto shuffled = fixpoint(d, m, order);
        REQUIRE(forward == shuffled);
        REQUIRE(test::masked_families(d, forward) == test::masked_families(d, m));

        if (is_forest(d.shape)) {
            auto expected = test::family_image(d, m);
            if (any_vertex_empty(forward))
                REQUIRE(expected == SubMask::none(d));
            else
                REQUIRE(forward == expected);
        }
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("glue two points into a cospan")
{
    auto point = test::discrete({1});
    MaskedDiagram left{point, SubMask::full(point)};
    MaskedDiagram right{point, SubMask::full(point)};
    auto glued = glue(left, 0, FinFn(2, {0}), right, 0, FinFn(2, {1}), test::labelled({"a", "b"}));
    CHECK(glued.diagram == test::cospan_example());
    CHECK(glued.mask == SubMask::full(glued.diagram));
    CHECK(validate(glued.diagram).empty());
}

TEST_CASE("re-gluing the halves of the path example")
{
    auto d = test::path_example();
    auto full = SubMask::full(d);
    auto left = restrict_to_subgraph(d, full, VertexSet(3, vector<VertexId>{0}));
    auto right = restrict_to_subgraph(d, full, VertexSet(3, vector<VertexId>{1, 2}));
    auto glued = glue({left.diagram, left.mask}, 0, d.legs[0][0], {right.diagram, right.mask}, 0, d.legs[0][1], d.edge_sets[0]);

    auto & g = glued.diagram;
    CHECK(g.vertex_sets == d.vertex_sets);
    REQUIRE(g.shape.edge_count() == 2);
    CHECK(g.shape.edge(0) == std::pair<VertexId, VertexId>{1, 2});
    CHECK(g.shape.edge(1) == std::pair<VertexId, VertexId>{0, 1});
    CHECK(g.edge_sets[0] == d.edge_sets[1]);
    CHECK(g.edge_sets[1] == d.edge_sets[0]);
    CHECK(g.legs[0] == d.legs[1]);
    CHECK(g.legs[1] == d.legs[0]);
}

TEST_CASE("splitting a tree at an edge and gluing it back")
{
    Rng rng(33);
    for (int round = 0; round < 100; ++round) {
        auto d = test::random_small_diagram(ShapeKind::tree, 2 + round % 8, 3, rng);
        auto m = test::random_leg_closed_mask(d, rng);
        auto n = d.shape.vertex_count();
        auto cut = std::uniform_int_distribution<EdgeId>(0, static_cast<EdgeId>(d.shape.edge_count() - 1))(rng);
        auto [x, y] = d.shape.edge(cut);

        // the side of x once the cut edge is gone
        VertexSet side(n);
        vector<VertexId> stack{x};
        side.insert(x);
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto & [u, e] : d.shape.incident(v))
                if (e != cut && ! side.contains(u)) {
                    side.insert(u);
                    stack.push_back(u);
                }
        }
        VertexSet rest(n);
        for (VertexId v = 0; v < n; ++v)
            if (! side.contains(v))
                rest.insert(v);

        auto left = restrict_to_subgraph(d, m, side);
        auto right = restrict_to_subgraph(d, m, rest);
        auto glued = glue({left.diagram, left.mask}, *left.index.vertex_map[x], d.legs[cut][0],
            {right.diagram, right.mask}, *right.index.vertex_map[y], d.legs[cut][1], d.edge_sets[cut]);
        REQUIRE(validate(glued.diagram).empty());

        auto split = left.diagram.shape.vertex_count();
        auto origin = [&](VertexId v) {
            return v < split ? left.index.vertex_origin[v] : right.index.vertex_origin[v - split];
        };
        auto & g = glued.diagram;
        REQUIRE(g.shape.vertex_count() == n);
        REQUIRE(g.shape.edge_count() == d.shape.edge_count());
        for (VertexId v = 0; v < n; ++v) {
            REQUIRE(g.vertex_sets[v] == d.vertex_sets[origin(v)]);
            REQUIRE(std::ranges::equal(glued.mask.vertex(v), m.vertex(origin(v))));
        }
        vector<bool> used(d.shape.edge_count(), false);
        for (EdgeId e = 0; e < g.shape.edge_count(); ++e) {
            auto [a, b] = g.shape.edge(e);
            auto original = std::find(d.shape.edges().begin(), d.shape.edges().end(), std::pair{origin(a), origin(b)});
            REQUIRE(original != d.shape.edges().end());
            auto f = static_cast<EdgeId>(original - d.shape.edges().begin());
            REQUIRE(! used[f]);
            used[f] = true;
            REQUIRE(g.edge_sets[e] == d.edge_sets[f]);
            REQUIRE(g.legs[e] == d.legs[f]);
            if (f != cut)
                REQUIRE(std::ranges::equal(glued.mask.edge(e), m.edge(f)));
        }
    }
}

TEST_CASE("restriction")
{
    auto d = test::cycle_example();
    auto m = SubMask::full(d);
    auto same = restrict_to_subgraph(d, m, VertexSet(4, vector<VertexId>{0, 1, 2, 3}));
    CHECK(same.diagram == d);
    CHECK(same.mask == m);

    // pinned at a and filtered, then cut down to the path 1-2-3
    m.vertex(0)[1] = 0;
    (void)filter(d, m, 0);
    (void)filter(d, m, 3);
    auto tau = restrict_to_subgraph(d, m, VertexSet(4, vector<VertexId>{1, 2, 3}));
    auto & t = tau.diagram;
    REQUIRE(t.shape.vertex_count() == 3);
    REQUIRE(t.shape.edge_count() == 2);
    CHECK(masked(t.vertex_sets[0], tau.mask.vertex(0)) == vector<string>{"d"});
    CHECK(masked(t.edge_sets[0], tau.mask.edge(0)) == vector<string>{"c", "d"});
    CHECK(masked(t.vertex_sets[1], tau.mask.vertex(1)) == vector<string>{"c", "d"});
    CHECK(masked(t.edge_sets[1], tau.mask.edge(1)) == vector<string>{"1", "2"});
    CHECK(masked(t.vertex_sets[2], tau.mask.vertex(2)) == vector<string>{"a"});

    Rng rng(34);
    std::bernoulli_distribution coin(0.6);
    for (int round = 0; round < 100; ++round) {
        auto r = random_instance(rng, round);
        auto rm = test::random_leg_closed_mask(r, rng);
        VertexSet keep(r.shape.vertex_count());
        for (VertexId v = 0; v < r.shape.vertex_count(); ++v)
            if (coin(rng))
                keep.insert(v);
        auto sub = restrict_to_subgraph(r, rm, keep);
        REQUIRE(validate(sub.diagram).empty());
        REQUIRE(leg_closed(sub.diagram, sub.mask));
        for (EdgeId e = 0; e < sub.diagram.shape.edge_count(); ++e) {
            auto f = sub.index.edge_origin[e];
            REQUIRE(sub.diagram.legs[e] == r.legs[f]);
            REQUIRE(sub.diagram.edge_sets[e] == r.edge_sets[f]);
            REQUIRE(std::ranges::equal(sub.mask.edge(e), rm.edge(f)));
        }
    }
}

TEST_CASE("materialising subdiagrams")
{
    auto d = test::path_example();
    auto copy = as_subdiagram(d, SubMask::full(d));
    CHECK(copy.diagram == d);

    auto image = test::family_image(d, SubMask::full(d));
    auto sub = as_subdiagram(d, image).diagram;
    CHECK(*sub.vertex_sets[0].labels() == vector<string>{"c"});
    CHECK(*sub.edge_sets[0].labels() == vector<string>{"y"});
    CHECK(*sub.vertex_sets[1].labels() == vector<string>{"β"});
    CHECK(*sub.edge_sets[1].labels() == vector<string>{"v"});
    CHECK(*sub.vertex_sets[2].labels() == vector<string>{"r", "s"});
    CHECK(validate(sub).empty());

    auto broken = SubMask::full(d);
    broken.edge(0)[1] = 0;
    CHECK(! leg_closed(d, broken));
    CHECK_THROWS_AS((void)as_subdiagram(d, broken), InvalidInput);

    auto unnamed = test::discrete({3});
    auto pick = SubMask::none(unnamed);
    pick.vertex(0)[2] = 1;
    CHECK(*as_subdiagram(unnamed, pick).diagram.vertex_sets[0].labels() == vector<string>{"2"});

    Rng rng(35);
    for (int round = 0; round < 100; ++round) {
        auto r = random_instance(rng, round);
        auto m = test::random_leg_closed_mask(r, rng);
        auto s = as_subdiagram(r, m);
        REQUIRE(validate(s.diagram).empty());
        // the inclusion commutes with the legs
        for (EdgeId e = 0; e < r.shape.edge_count(); ++e) {
            auto [x, y] = r.shape.edge(e);
            for (Element a = 0; a < s.diagram.vertex_sets[x].size(); ++a)
                REQUIRE(s.edge_inclusion[e][s.diagram.legs[e][0](a)] == r.legs[e][0](s.vertex_inclusion[x][a]));
            for (Element b = 0; b < s.diagram.vertex_sets[y].size(); ++b)
                REQUIRE(s.edge_inclusion[e][s.diagram.legs[e][1](b)] == r.legs[e][1](s.vertex_inclusion[y][b]));
        }
    }
}
