#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "stellate/format.hpp"
#include "stellate/monomial.hpp"
#include "stellate/sampler.hpp"

using namespace stellate;
namespace oracle = stellate::testing;

TEST_CASE("construction normalizes to a minimal antichain") {
    MonomialModule a = make_module(2, {{2, 0}, {1, 1}, {2, 1}});
    CHECK(a.gens() == std::vector<Exponents>{{1, 1}, {2, 0}});

    CHECK(make_module(1, {{0}}) == MonomialModule::unit(1));

    MonomialModule frac = make_module(2, {{-1, 2}, {0, 1}});
    CHECK(frac.gens().size() == 2);
    CHECK_FALSE(frac.is_integral());

    CHECK_THROWS_AS(make_module(2, {}), ZeroIdealError);
    CHECK_THROWS_AS(make_module(2, {{1, 0, 0}}), ArityMismatch);
}

TEST_CASE("membership is divisibility by some generator") {
    MonomialModule a = make_module(2, {{2, 0}, {1, 1}});
    CHECK(a.contains({3, 1}));
    CHECK_FALSE(a.contains({0, 0}));
    CHECK(a.contains({1, 1}));
    CHECK_THROWS_AS(a.contains({1, 1, 1}), ArityMismatch);
}

TEST_CASE("sum and product") {
    CHECK(mul(make_module(2, {{1, 0}}), make_module(2, {{0, 1}})) == make_module(2, {{1, 1}}));
    MonomialModule m = make_module(2, {{1, 0}, {0, 1}});
    CHECK(mul(m, m) == make_module(2, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(add(make_module(2, {{2, 0}}), make_module(2, {{1, 1}})) ==
          make_module(2, {{2, 0}, {1, 1}}));
    CHECK(mul(m, MonomialModule::unit(2)) == m);
    CHECK_THROWS_AS(add(m, MonomialModule::unit(3)), ArityMismatch);
}

TEST_CASE("intersection") {
    CHECK(intersect(make_module(2, {{1, 0}}), make_module(2, {{0, 1}})) ==
          make_module(2, {{1, 1}}));
    MonomialModule a = make_module(2, {{2, 0}, {1, 1}});
    CHECK(intersect(a, a) == a);
    CHECK(intersect(a, make_module(2, {{0, 1}})) == make_module(2, {{1, 1}}));
}

TEST_CASE("colon") {
    MonomialModule a = make_module(2, {{2, 0}, {1, 1}});
    CHECK(colon(a, make_module(2, {{1, 0}})) == make_module(2, {{1, 0}, {0, 1}}));
    CHECK(colon(a, MonomialModule::unit(2)) == a);
    MonomialModule p = make_module(2, {{2, 0}});
    CHECK(colon(p, make_module(2, {{0, 1}})) == make_module(2, {{2, -1}}));
    CHECK(colon_integral(p, make_module(2, {{0, 1}})) == make_module(2, {{2, 0}}));
}

TEST_CASE("inverse") {
    CHECK(inverse(make_module(2, {{1, 0}, {0, 1}})) == MonomialModule::unit(2));
    CHECK(inverse(make_module(2, {{1, 0}})) == make_module(2, {{-1, 0}}));
    CHECK(inverse(make_module(2, {{2, 0}, {1, 1}})) == make_module(2, {{-1, 0}}));
}

TEST_CASE("subset and equality") {
    MonomialModule a = make_module(2, {{2, 0}, {1, 1}});
    MonomialModule x = make_module(2, {{1, 0}});
    CHECK(subset(a, x));
    CHECK_FALSE(subset(x, a));
    MonomialModule d = MonomialModule::unit(2);
    CHECK(equal(d, inverse(inverse(d))));
}

TEST_CASE("random_module is deterministic and respects bounds") {
    MonomialModule a = random_module(2, 4, 3, 1);
    CHECK(a == random_module(2, 4, 3, 1));
    CHECK(a.is_integral());
    CHECK(random_module(2, 0, 1, 9) == MonomialModule::unit(2));
    MonomialModule b = random_module(3, 4, 4, 7);
    CHECK(b.gens().size() <= 4);
}

TEST_CASE("rendering") {
    CHECK(to_string(make_module(2, {{2, 0}, {1, 1}})) == "<x1*x2, x1^2>");
    CHECK(to_string(MonomialModule::unit(2)) == "<1>");
    CHECK(to_string(Exponents{-1, 0}) == "x1^-1");
}

TEST_CASE("normalization soundness: membership unchanged by reduction") {
    Rng rng(11);
    for (int k = 0; k < 100; ++k) {
        int nvars = rng.uniform(2, 3);
        // raw generators, kept separately from the normalized module
        std::vector<Exponents> raw;
        int count = rng.uniform(1, 5);
        for (int i = 0; i < count; ++i) {
            Exponents g(static_cast<std::size_t>(nvars));
            for (auto& e : g) e = rng.uniform(-2, 4);
            raw.push_back(g);
        }
        MonomialModule a(nvars, raw);
        oracle::Box box = oracle::bounding_box({&a});
        oracle::for_each_point(box, [&](const Exponents& m) {
            bool raw_member = false;
            for (const auto& g : raw) raw_member = raw_member || divides(g, m);
            CHECK(raw_member == a.contains(m));
        });
    }
}

TEST_CASE("lattice laws on samples") {
    Rng rng(12);
    for (int k = 0; k < 60; ++k) {
        int nvars = 2;
        MonomialModule a = random_fractional_module(rng, nvars, 3, 3, 2);
        MonomialModule b = random_fractional_module(rng, nvars, 3, 3, 2);
        MonomialModule c = random_fractional_module(rng, nvars, 3, 3, 2);
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    }
}

TEST_CASE("colon adjunction: CB <= A iff C <= [A:B]") {
    Rng rng(13);
    for (int k = 0; k < 100; ++k) {
        MonomialModule a = random_fractional_module(rng, 2, 3, 3, 2);
        MonomialModule b = random_fractional_module(rng, 2, 3, 3, 2);
        MonomialModule c = random_fractional_module(rng, 2, 3, 3, 2);
        CHECK(subset(mul(c, b), a) == subset(c, colon(a, b)));
    }
}

TEST_CASE("inverse closed form matches the colon route") {
    Rng rng(14);
    for (int k = 0; k < 100; ++k) {
        MonomialModule a = random_fractional_module(rng, rng.uniform(1, 3), 4, 4, 2);
        MonomialModule inv = inverse(a);
        CHECK(inv == MonomialModule::principal(negate(a.gens_meet())));
    }
}

TEST_CASE("every operation agrees with the box oracle") {
    Rng rng(15);
    for (int k = 0; k < 250; ++k) {
        int nvars = rng.uniform(2, 3);
        MonomialModule a = random_fractional_module(rng, nvars, 3, 3, 2);
        MonomialModule b = random_fractional_module(rng, nvars, 3, 3, 2);

        MonomialModule s = add(a, b);
        oracle::Box box = oracle::bounding_box({&a, &b, &s});
        CHECK(oracle::agrees(s, oracle::add_pred(a, b), box));

        MonomialModule p = mul(a, b);
        box = oracle::bounding_box({&a, &b, &p});
        CHECK(oracle::agrees(p, oracle::mul_pred(a, b), box));

        MonomialModule i = intersect(a, b);
        box = oracle::bounding_box({&a, &b, &i});
        CHECK(oracle::agrees(i, oracle::intersect_pred(a, b), box));

        MonomialModule q = colon(a, b);
        box = oracle::bounding_box({&a, &b, &q});
        CHECK(oracle::agrees(q, oracle::colon_pred(a, b), box));

        MonomialModule inv = inverse(a);
        box = oracle::bounding_box({&a, &inv});
        CHECK(oracle::agrees(inv, oracle::inverse_pred(a), box));
    }
}

TEST_CASE("worked colon and inverse values against predicate reconstruction") {
    MonomialModule a = make_module(2, {{2, 0}, {1, 1}});
    MonomialModule x = make_module(2, {{1, 0}});
    oracle::Box box{{-1, -1}, {3, 3}};
    CHECK(oracle::from_predicate(2, oracle::colon_pred(a, x), box) ==
          make_module(2, {{1, 0}, {0, 1}}));
    oracle::Box ibox{{-2, -2}, {2, 2}};
    CHECK(oracle::from_predicate(2, oracle::inverse_pred(a), ibox) == make_module(2, {{-1, 0}}));
    CHECK(oracle::from_predicate(2, oracle::mul_pred(make_module(2, {{1, 0}, {0, 1}}),
                                                     make_module(2, {{1, 0}, {0, 1}})),
                                 oracle::Box{{0, 0}, {3, 3}}) ==
          make_module(2, {{2, 0}, {1, 1}, {0, 2}}));
}
