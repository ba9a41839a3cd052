#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stellate/infinite.hpp"

using namespace stellate;

TEST_CASE("sparse monomials") {
    InfMonomial one;
    CHECK(one.is_unit());
    CHECK(one.degree() == 0);
    CHECK(one.minidx() == 0);
    CHECK(one.str() == "1");

    InfMonomial m = InfMonomial::variable(2) * InfMonomial::variable(5);
    CHECK(m.degree() == 2);
    CHECK(m.minidx() == 2);
    CHECK(m.max_index() == 5);
    CHECK(m.str() == "x2*x5");
    CHECK(m.divisible_by(InfMonomial::variable(2)));
    CHECK_FALSE(m.divisible_by(InfMonomial::variable(3)));
    CHECK((InfMonomial::variable(1, 3)).str() == "x1^3");

    CHECK(m.truncate(5) == Exponents{0, 1, 0, 0, 1});
    CHECK_THROWS_AS(m.truncate(4), ArityMismatch);
    CHECK_THROWS_AS(InfMonomial::variable(0), std::invalid_argument);
    CHECK_THROWS_AS(InfMonomial::variable(1, -1), std::invalid_argument);
}

TEST_CASE("closed-form membership") {
    CHECK(inf_member(InfMonomial::variable(3), OracleIdeal::m_power(1)));
    CHECK_FALSE(inf_member(InfMonomial::variable(3), OracleIdeal::m_power(2)));
    CHECK(inf_member(InfMonomial::variable(3, 2), OracleIdeal::m_power(2)));
    CHECK_FALSE(inf_member(InfMonomial(), OracleIdeal::m_power(1)));

    const OracleIdeal a = OracleIdeal::example_a();
    CHECK_FALSE(inf_member(InfMonomial::variable(2) * InfMonomial::variable(5), a));
    CHECK(inf_member(InfMonomial::variable(1) * InfMonomial::variable(7), a));
    CHECK_FALSE(inf_member(InfMonomial(), a));
    CHECK_FALSE(inf_member(InfMonomial::variable(4), a));
    CHECK(inf_member(InfMonomial::variable(2, 3), a));
}

TEST_CASE("transform membership closed forms") {
    const OracleIdeal a = OracleIdeal::example_a();
    CHECK_FALSE(inf_s_member(InfMonomial(), a));
    CHECK(inf_s_member(InfMonomial::variable(9), a));
    CHECK(inf_s_member(InfMonomial::variable(3) * InfMonomial::variable(11), a));
    CHECK(inf_s_member(InfMonomial(), OracleIdeal::m_power(1)));
    CHECK(inf_s_member(InfMonomial(), OracleIdeal::m_power(4)));
}

TEST_CASE("membership is upward closed under divisibility") {
    Rng rng(41);
    const OracleIdeal ideals[] = {OracleIdeal::m_power(1), OracleIdeal::m_power(3),
                                  OracleIdeal::example_a()};
    for (int k = 0; k < 300; ++k) {
        InfMonomial m = random_inf_monomial(rng, 10, 5, true);
        InfMonomial u = random_inf_monomial(rng, 10, 3, false);
        for (const auto& ideal : ideals)
            if (inf_member(m, ideal)) CHECK(inf_member(m * u, ideal));
    }
}

TEST_CASE("containments: A inside M, powers of M descend") {
    Rng rng(42);
    for (int k = 0; k < 300; ++k) {
        InfMonomial m = random_inf_monomial(rng, 10, 6, true);
        if (inf_member(m, OracleIdeal::example_a())) CHECK(inf_member(m, OracleIdeal::m_power(1)));
        for (int n = 1; n <= 5; ++n)
            if (inf_member(m, OracleIdeal::m_power(n + 1)))
                CHECK(inf_member(m, OracleIdeal::m_power(n)));
    }
}

TEST_CASE("truncated ideals") {
    CHECK(truncated_m(2) == make_module(2, {{1, 0}, {0, 1}}));
    CHECK(truncated_a(2) == make_module(2, {{2, 0}, {1, 1}, {0, 3}}));
    CHECK(subset(truncated_a(3), truncated_m(3)));
}

TEST_CASE("truncation worked values") {
    // x1*x2 sits in A, both in closed form and in the 4-variable truncation
    InfMonomial p = InfMonomial::variable(1) * InfMonomial::variable(2);
    CHECK(inf_member(p, OracleIdeal::example_a()));
    CHECK(truncated_a(4).contains(p.truncate(4)));
    // x3*x4 misses A both ways: smallest dividing index 3 > degree - 1
    InfMonomial q = InfMonomial::variable(3) * InfMonomial::variable(4);
    CHECK_FALSE(inf_member(q, OracleIdeal::example_a()));
    CHECK_FALSE(truncated_a(5).contains(q.truncate(5)));
}

TEST_CASE("closed forms agree with brute-force truncations") {
    PropertyReport r = truncation_crosscheck(6, 6, 1000, 77);
    CHECK(r.pass);
    CHECK(r.samples == 1000);
}

TEST_CASE("the truncated transform diverges as documented") {
    CHECK(subset(pow(truncated_m(3), 4), truncated_a(3)));
    CHECK_FALSE(subset(pow(truncated_m(3), 3), truncated_a(3)));
}

TEST_CASE("the idempotence counterexample verifies end to end") {
    CounterexampleResult r = verify_counterexample();
    CHECK(r.report.pass);
    CHECK(r.report.seed == 42);
    CHECK(r.report.samples >= 500);
    REQUIRE_FALSE(r.narrative.empty());
    CHECK(r.narrative.back().rfind("Verified", 0) == 0);
}
