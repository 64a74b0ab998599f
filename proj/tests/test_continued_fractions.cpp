#include "doctest.h"

#include <cmath>
#include <random>

#include "rndf/continued_fractions.hpp"
#include "rndf/errors.hpp"

using namespace rndf;

TEST_CASE("cf_expand on exact rationals runs the Euclidean algorithm") {
    auto cf = cf_expand(time_point::rational(3, 7), 10);
    CHECK(cf.a0 == 0);
    REQUIRE(cf.partial_quotients.size() == 2);
    CHECK(cf.partial_quotients[0] == 2);
    CHECK(cf.partial_quotients[1] == 3);
    CHECK(cf.terminated);

    auto one = cf_expand(time_point::rational(1, 1), 5);
    CHECK(one.a0 == 1);
    CHECK(one.terminated);

    CHECK_THROWS_AS(cf_expand(time_point::rational(3, 2), 5), std::invalid_argument);
}

TEST_CASE("cf_expand of pi-3 reproduces the classical quotients") {
    auto cf = cf_expand(time_point::named("pi-3"), 6);
    CHECK(cf.a0 == 0);
    REQUIRE(cf.partial_quotients.size() >= 4);
    CHECK(cf.partial_quotients[0] == 7);
    CHECK(cf.partial_quotients[1] == 15);
    CHECK(cf.partial_quotients[2] == 1);
    CHECK(cf.partial_quotients[3] == 292);

    auto cv = convergents(cf, time_point::named("pi-3"));
    REQUIRE(cv.size() >= 4);
    // first four convergents are 0/1, 1/7, 15/106, 16/113
    CHECK(cv[1].p == 1);
    CHECK(cv[1].q == 7);
    CHECK(cv[3].p == 16);
    CHECK(cv[3].q == 113);
}

TEST_CASE("golden-1 has all partial quotients equal to one and Fibonacci convergents") {
    auto cf = cf_expand(time_point::named("golden-1"), 30);
    CHECK(cf.a0 == 0);
    REQUIRE(cf.partial_quotients.size() == 30);
    for (auto a : cf.partial_quotients) CHECK(a == 1);

    auto cv = convergents(cf, time_point::named("golden-1"));
    // q sequence is the Fibonacci sequence; check the recurrence directly
    for (std::size_t n = 2; n < cv.size(); ++n) {
        CHECK(cv[n].q == cv[n - 1].q + cv[n - 2].q);
        CHECK(cv[n].p == cv[n - 1].p + cv[n - 2].p);
    }
    // K_n -> 1/sqrt(5)
    CHECK(std::abs(cv[15].K - 0.4472135955) <= 1e-3);
}

TEST_CASE("error coefficients are certified and alternate sides") {
    auto tp = time_point::named("pi-3");
    auto cf = cf_expand(tp, 8);
    auto cv = convergents(cf, tp);
    // K(1/7) = 49 (22/7 - pi) = 154 - 49 pi
    CHECK(cv[1].K == doctest::Approx(154.0 - 49.0 * 3.14159265358979323846).epsilon(1e-9));
    for (const auto& c : cv) {
        if (c.exact) continue;
        CHECK(c.K > 0.0);
        CHECK(c.K < 1.0);
    }
    // alternation: sign of rho - p/q flips along the full list
    for (std::size_t n = 1; n < cv.size(); ++n) CHECK(cv[n].side != cv[n - 1].side);
    // 1/7 > pi-3, so 1/7 approaches from the right
    CHECK(cv[1].side == approach_side::right);
    // 15/106 < pi-3: from the left
    CHECK(cv[2].side == approach_side::left);
}

TEST_CASE("K stays in (0,1) across random rational and decimal targets") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> den(2, 100000);
    for (int i = 0; i < 50; ++i) {
        std::int64_t q = den(rng);
        std::int64_t p = std::uniform_int_distribution<std::int64_t>(1, q - 1)(rng);
        auto tp = time_point::rational(p, q);
        auto cf = cf_expand(tp, 40);
        auto cv = convergents(cf, tp);
        for (const auto& c : cv) {
            if (c.exact) continue;
            CHECK(c.K > 0.0);
            CHECK(c.K < 1.0);
        }
    }
}

TEST_CASE("odd denominator subsequence") {
    auto tp = time_point::named("sqrt2-1");
    auto cf = cf_expand(tp, 12);
    for (auto a : cf.partial_quotients) CHECK(a == 2);
    auto cv = convergents(cf, tp);
    auto odd = odd_denominator_subsequence(cv);
    for (const auto& c : odd) CHECK((c.q & 1) != 0);
    // order preserved
    for (std::size_t i = 1; i < odd.size(); ++i) CHECK(odd[i].q > odd[i - 1].q);
    // any 3 consecutive convergents contain an odd q: exhaustive over the
    // parity patterns the recurrence allows (consecutive q are coprime, so
    // (even, even) is impossible; q_{n+2} = a q_{n+1} + q_n then forces an
    // odd within each window of 3)
    for (int qa = 0; qa < 2; ++qa)
        for (int qb = 0; qb < 2; ++qb)
            for (int a = 0; a < 2; ++a) {
                if (qa == 0 && qb == 0) continue;
                int qc = (a * qb + qa) % 2;
                CHECK((qa == 1 || qb == 1 || qc == 1));
            }
    // and on the real list
    for (std::size_t n = 0; n + 2 < cv.size(); ++n) {
        bool any_odd = cv[n].q_odd || cv[n + 1].q_odd || cv[n + 2].q_odd;
        CHECK(any_odd);
    }
    CHECK(odd_denominator_subsequence({}).empty());
}

TEST_CASE("side filter preserves order and splits the list") {
    auto tp = time_point::named("pi-3");
    auto cv = convergents(cf_expand(tp, 8), tp);
    auto left = side_filtered(cv, approach_side::left);
    auto right = side_filtered(cv, approach_side::right);
    CHECK(left.size() + right.size() == cv.size());
    // 1/7 sits in the right list; past the trivial 0/1 the left list starts
    // with 15/106
    REQUIRE(!right.empty());
    REQUIRE(left.size() >= 2);
    CHECK(right[0].q == 7);
    CHECK(left[0].q == 1);
    CHECK(left[1].q == 106);
    // single-element input
    std::vector<convergent> single{cv[1]};
    CHECK(side_filtered(single, approach_side::right).size() == 1);
    CHECK(side_filtered(single, approach_side::left).empty());
}

TEST_CASE("decimal precision exhaustion is an error, not a wrong answer") {
    // 6 digits of pi-3 cannot certify the second quotient (the +-1 ulp
    // envelope straddles 15 vs 16)
    auto tp = time_point::decimal("0.141593");
    CHECK_THROWS_AS(cf_expand(tp, 2), precision_exhausted);
    // but the first one comes out right
    auto cf = cf_expand(tp, 1);
    REQUIRE(cf.partial_quotients.size() == 1);
    CHECK(cf.partial_quotients[0] == 7);
    // ten digits certify a few more
    auto cf10 = cf_expand(time_point::decimal("0.1415926535"), 4);
    CHECK(cf10.partial_quotients[0] == 7);
    CHECK(cf10.partial_quotients[1] == 15);
    CHECK(cf10.partial_quotients[2] == 1);
}

TEST_CASE("doubles expand as exact dyadic rationals") {
    auto tp = time_point::from_x(0.5);
    auto cf = cf_expand(tp, 5);
    CHECK(cf.a0 == 0);
    REQUIRE(cf.partial_quotients.size() == 1);
    CHECK(cf.partial_quotients[0] == 2);
    CHECK(cf.terminated);
}
