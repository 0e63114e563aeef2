#include "../support/fixtures.hh"

#include <inlim/errors.hh>
#include <inlim/finset.hh>
#include <inlim/generate.hh>

#include <doctest.h>

#include <random>

using namespace inlim;
using inlim::generate::Rng;

namespace
{
    auto random_fn(std::size_t source, std::size_t target, Rng & rng) -> FinFn
    {
        std::vector<Element> table(source);
        for (auto & t : table)
            t = std::uniform_int_distribution<Element>(0, static_cast<Element>(target - 1))(rng);
        return FinFn(target, std::move(table));
    }
}

TEST_CASE("finite sets and labels")
{
    auto s = test::labelled({"a", "b"});
    CHECK(s.size() == 2);
    CHECK(s.find("b") == 1);
    CHECK(! s.find("z"));
    CHECK(s.name(0) == "a");
    CHECK(FinSetObj(3).name(2) == "2");
    CHECK(! FinSetObj(3).find("1"));
    CHECK_THROWS_AS(test::labelled({"a", "a"}), InvalidInput);
}

TEST_CASE("functions are total")
{
    CHECK_THROWS_AS(FinFn(2, {0, 2}), InvalidInput);
    CHECK_THROWS_AS(FinFn(0, {0}), InvalidInput);
    CHECK(FinFn(0, {}).source_size() == 0);
    CHECK(FinFn(5, {}).target_size() == 5);
}

TEST_CASE("composition")
{
    auto g = FinFn(4, {3, 1, 1});
    CHECK(compose(FinFn::identity(3), g) == g);
    CHECK(compose(g, FinFn::identity(4)) == g);

    auto constant = compose(FinFn(3, {2, 2}), FinFn(2, {1, 1, 1}));
    CHECK(constant == FinFn(2, {1, 1}));

    CHECK_THROWS_AS((void)compose(FinFn(3, {0}), FinFn(2, {0, 0})), InvalidInput);

    Rng rng(21);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int round = 0; round < 100; ++round) {
        auto a = size(rng), b = size(rng), c = size(rng), d = size(rng);
        auto f = random_fn(a, b, rng), h = random_fn(b, c, rng), k = random_fn(c, d, rng);
        auto hf = compose(f, h);
        for (Element i = 0; i < a; ++i)
            REQUIRE(hf(i) == h(f(i)));
        REQUIRE(compose(compose(f, h), k) == compose(f, compose(h, k)));
    }
}

TEST_CASE("images")
{
    auto all = image(FinFn(3, {2, 0, 1}));
    CHECK(all == ElementMask{1, 1, 1});
    CHECK(image(FinFn(3, {})) == ElementMask{0, 0, 0});

    auto d = test::path_example();
    CHECK(image(d.legs[0][0]) == ElementMask{1, 1});
    CHECK(image(d.legs[1][1]) == ElementMask{0, 1});

    std::vector<std::uint8_t> only_a{1, 0, 0};
    CHECK(image(d.legs[0][0], only_a) == ElementMask{1, 0});

    Rng rng(22);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int round = 0; round < 100; ++round) {
        auto a = size(rng), b = size(rng), c = size(rng);
        auto f = random_fn(a, b, rng), g = random_fn(b, c, rng);
        auto composite = image(compose(f, g));
        auto outer = image(g);
        for (std::size_t t = 0; t < c; ++t)
            REQUIRE((! composite[t] || outer[t]));
    }
}
