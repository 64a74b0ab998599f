#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "rndf/time_point.hpp"

namespace rndf {

using big_int = boost::multiprecision::cpp_int;

// Which side of the target a convergent approaches from: left means
// p/q < rho (positive error rho - p/q).
enum class approach_side { left, right };

struct cf_expansion {
    std::int64_t a0 = 0;
    std::vector<std::int64_t> partial_quotients; // a1, a2, ... all >= 1
    bool terminated = false;                     // rational input, fully expanded
};

struct convergent {
    big_int p;
    big_int q;
    double K = 0.0;     // q^2 |rho - p/q|; in (0,1) except for a terminal exact hit
    approach_side side = approach_side::left;
    bool q_odd = false;
    bool exact = false; // final convergent of a rational input (K = 0)

    bool fits_int64() const;
    std::int64_t p_int64() const;
    std::int64_t q_int64() const;
};

// First n_terms partial quotients of x in [0,1]. Decimal inputs are expanded
// with exact interval arithmetic around their +-1 ulp envelope, so a
// quotient is only ever emitted when the digits certify it
// (precision_exhausted otherwise). Rational inputs terminate early.
cf_expansion cf_expand(const time_point& x, int n_terms);

// Convergents p_n/q_n of the expansion (starting at p_0/q_0 = a0/1) with
// exact integer recurrences and interval-certified error coefficients K_n.
std::vector<convergent> convergents(const cf_expansion& cf, const time_point& x);

// Order-preserving subsequence with odd denominator. Non-empty for any
// input of >= 3 convergents (no two consecutive q_n are even).
std::vector<convergent> odd_denominator_subsequence(const std::vector<convergent>& v);

// Order-preserving filter on the approach side.
std::vector<convergent> side_filtered(const std::vector<convergent>& v, approach_side s);

} // namespace rndf
