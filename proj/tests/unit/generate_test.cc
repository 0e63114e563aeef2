#include "../support/oracles.hh"

#include <inlim/errors.hh>
#include <inlim/generate.hh>
#include <inlim/io.hh>

#include <doctest.h>

using namespace inlim;
using namespace inlim::generate;

TEST_CASE("shape kinds")
{
    for (auto kind : {ShapeKind::tree, ShapeKind::path, ShapeKind::cycle, ShapeKind::random})
        CHECK(parse_shape_kind(shape_kind_name(kind)) == kind);
    CHECK_THROWS_AS((void)parse_shape_kind("star"), InvalidInput);
    CHECK_THROWS_AS((void)cycle_graph(2), InvalidInput);
}

TEST_CASE("same seed, same instance")
{
    for (auto kind : {ShapeKind::tree, ShapeKind::cycle, ShapeKind::random}) {
        InstanceSpec spec;
        spec.kind = kind;
        spec.n = 12;
        CHECK(io::diagram_to_json(random_diagram(spec, 9)) == io::diagram_to_json(random_diagram(spec, 9)));
        CHECK(random_diagram(spec, 9) != random_diagram(spec, 10));
    }
}

TEST_CASE("generated instances are well formed")
{
    Rng rng(91);
    for (int round = 0; round < 100; ++round) {
        InstanceSpec spec;
        spec.kind = static_cast<ShapeKind>(round % 4);
        spec.n = 3 + round % 10;
        spec.w = 1 + round % 5;
        spec.min_size = round % 3 == 0 ? 0 : 1;
        auto d = random_diagram(shape(spec, rng), spec, rng);
        REQUIRE(validate(d).empty());
        if (spec.kind == ShapeKind::tree || spec.kind == ShapeKind::path)
            REQUIRE(is_forest(d.shape));
        if (spec.kind == ShapeKind::cycle) {
            REQUIRE(! fvs_exact(d.shape, 0));
            REQUIRE(fvs_exact(d.shape, 1));
        }
        for (auto & s : d.vertex_sets)
            REQUIRE(s.size() <= spec.w);
    }
}

TEST_CASE("planted instances have a matching family")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        InstanceSpec spec;
        spec.kind = static_cast<ShapeKind>(seed % 4);
        spec.n = 6;
        spec.w = 3;
        spec.planted = true;
        auto d = random_diagram(spec, seed);
        REQUIRE(! test::families(d).empty());
    }
}

TEST_CASE("exact sizes")
{
    InstanceSpec spec;
    spec.kind = ShapeKind::path;
    spec.n = 20;
    spec.w = 5;
    spec.exact_sizes = true;
    auto d = random_diagram(spec, 3);
    CHECK(d.width() == 5);
    for (auto & s : d.edge_sets)
        CHECK(s.size() == 5);

    spec.min_size = 6;
    spec.exact_sizes = false;
    CHECK_THROWS_AS((void)random_diagram(spec, 3), InvalidInput);
}
