#include "../support/fixtures.hh"
#include "../support/oracles.hh"

#include <inlim/errors.hh>
#include <inlim/generate.hh>
#include <inlim/oracle.hh>

#include <doctest.h>

using namespace inlim;
using inlim::generate::Rng;
using inlim::generate::ShapeKind;
using std::vector;

namespace
{
    auto tuples(const vector<Witness> & ws) -> vector<vector<Element>>
    {
        vector<vector<Element>> result;
        for (auto & w : ws)
            result.push_back(w.vertex_elements);
        return result;
    }
}

TEST_CASE("enumerating the worked examples")
{
    auto path = oracle::enumerate_limit(test::path_example());
    // (c, β, r) and (c, β, s)
    CHECK(tuples(path) == vector<vector<Element>>{{2, 1, 0}, {2, 1, 1}});
    for (auto & w : path)
        CHECK(w.edge_elements == vector<Element>{1, 1});

    CHECK(oracle::enumerate_limit(test::cycle_example()).empty());
    CHECK(oracle::enumerate_limit(test::cospan_example()).empty());
    CHECK(tuples(oracle::enumerate_limit(test::discrete({2, 2}))) == vector<vector<Element>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(oracle::enumerate_limit(test::discrete({})).size() == 1);
}

TEST_CASE("the cap is enforced")
{
    auto d = test::discrete({10, 10, 10});
    CHECK(oracle::search_space(d) == 1000);
    CHECK_THROWS_AS((void)oracle::enumerate_limit(d, 999), CapExceeded);
    CHECK_THROWS_AS((void)oracle::brute_image(d, 999), CapExceeded);
    CHECK(oracle::enumerate_limit(d, 1000).size() == 1000);

    generate::InstanceSpec spec;
    spec.kind = ShapeKind::path;
    spec.n = 30;
    spec.w = 5;
    spec.exact_sizes = true;
    auto big = generate::random_diagram(spec, 1);
    CHECK(oracle::search_space(big) > oracle::default_cap);
    CHECK_THROWS_AS((void)oracle::enumerate_limit(big), CapExceeded);
}

TEST_CASE("brute-force image")
{
    auto d = test::path_example();
    auto m = oracle::brute_image(d);
    CHECK(test::names(d.vertex_sets[0], m.vertex(0)) == vector<std::string>{"c"});
    CHECK(test::names(d.edge_sets[0], m.edge(0)) == vector<std::string>{"y"});
    CHECK(test::names(d.vertex_sets[1], m.vertex(1)) == vector<std::string>{"β"});
    CHECK(test::names(d.edge_sets[1], m.edge(1)) == vector<std::string>{"v"});
    CHECK(test::names(d.vertex_sets[2], m.vertex(2)) == vector<std::string>{"r", "s"});

    auto c4 = test::cycle_example();
    CHECK(oracle::brute_image(c4) == SubMask::none(c4));
}

TEST_CASE("iterated pullbacks")
{
    CHECK(oracle::pullback_limit(test::path_example()) == 2);
    CHECK(oracle::pullback_limit(test::cospan_example()) == 0);
    CHECK(oracle::pullback_limit(test::discrete({4})) == 4);
    CHECK_THROWS_AS((void)oracle::pullback_limit(test::cycle_example()), UnsupportedShape);
    CHECK_THROWS_AS((void)oracle::pullback_limit(test::discrete({2, 2})), UnsupportedShape);
}

TEST_CASE("the oracles agree with each other and with backtracking")
{
    Rng rng(51);
    for (int round = 0; round < 200; ++round) {
        auto tree = round % 2 == 0;
        auto d = tree ? test::random_small_diagram(ShapeKind::tree, 1 + round % 9, 3, rng)
                      : test::random_small_diagram(ShapeKind::random, 1 + round % 7, 3, rng, 0.35);
        auto listed = oracle::enumerate_limit(d);
        REQUIRE(tuples(listed) == test::families(d));
        for (auto & w : listed)
            REQUIRE(satisfies(d, w));
        REQUIRE(oracle::brute_image(d) == test::family_image(d, SubMask::full(d)));
        if (tree)
            REQUIRE(oracle::pullback_limit(d) == listed.size());
    }
}

TEST_CASE("image is empty somewhere exactly when empty everywhere in a component")
{
    Rng rng(52);
    for (int round = 0; round < 200; ++round) {
        auto d = test::random_small_diagram(ShapeKind::random, 2 + round % 7, 3, rng, 0.3);
        auto m = oracle::brute_image(d);
        auto parts = components(d.shape);
        for (std::size_t c = 0; c < parts.count; ++c) {
            bool some = false, all = true;
            for (VertexId t = 0; t < d.shape.vertex_count(); ++t)
                if (parts.label[t] == c) {
                    some = some || m.vertex_empty(t);
                    all = all && m.vertex_empty(t);
                }
            REQUIRE(some == all);
        }
    }
}
