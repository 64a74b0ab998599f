#pragma once

#include <cstdint>
#include <optional>

#include "rndf/complex_value.hpp"
#include "rndf/eval_config.hpp"
#include "rndf/time_point.hpp"

namespace rndf {

// Rational parameters t_{p,q} = (p/q)/(2 pi) split by q mod 4: the curve
// makes a corner with two perpendicular side tangents at q = 0,1,3 (mod 4)
// and winds through a spiral at q = 2 (mod 4).
enum class point_class { corner, spiral };

struct rational_point {
    std::int64_t p = 0;
    std::int64_t q = 1;
    point_class klass = point_class::corner;
    std::int64_t q_tilde = 1;

    // Fitted eighth root of unity of the local expansion (corners only).
    std::optional<complex> e_fit;
    double fit_residual = 0.0;

    // Estimates of c_+/q_tilde and |c_-|/q_tilde, both in [1,4]. The paper
    // only brackets these constants; 2.5 is the default midpoint and
    // fit_c_ratio refines them from the second-order term.
    double c_ratio_plus = 2.5;
    double c_ratio_minus = 2.5;

    // Conservative worst-case validity radius |h| < 1/(16 pi q_tilde^2).
    double validity_radius() const;

    time_point tp() const { return time_point::rational(p, q); }
};

// One evaluation of a local expansion: value, the exponent of h in the
// residual bound, and the radius it is valid in.
struct asymptotic_term {
    complex value;
    double order = 2.5;
    double validity_radius = 0.0;
};

// Classify x = p/q (coprime, q > 0).
rational_point classify(std::int64_t p, std::int64_t q);

// Quadratic Gauss sum sum_{k=0}^{q-1} e^{2 pi i (p k^2 + m k)/q} by direct
// summation with exact integer phase reduction.
complex gauss_sum(std::int64_t p, std::int64_t m, std::int64_t q);

// Fit the eighth root of unity from right-side secant directions on the
// geometric offset ladder h = q_tilde^{-2} * {1e-4 ... 1e-8}; snaps the
// median direction to the nearest multiple of pi/4 and records the
// residual. Stores the result in pt and returns it.
complex fit_eighth_root(rational_point& pt, const eval_config& cfg = {});

// Refine c_+/q_tilde and c_-/q_tilde by least squares on the second-order
// term of the corner expansion. Requires e_fit.
void fit_c_ratio(rational_point& pt, const eval_config& cfg = {});

// Two-term corner expansion at offset h (order-5/2 residual), with the
// sqrt branch sqrt(-1) = -i for h < 0.
asymptotic_term corner_asymptotic(const rational_point& pt, double h, const eval_config& cfg = {});

// Leading spiral term at offset h (order-5/2 residual). If e_fit is absent
// the modulus is still correct; the overall eighth-root phase defaults to 1.
asymptotic_term spiral_asymptotic(const rational_point& pt, double h, const eval_config& cfg = {});

// b(h) = q_tilde^2 h / (1 + 4 pi c q_tilde h), c the side-appropriate
// constant (c_+ > 0 for h >= 0, c_- < 0 for h < 0).
double b_map(double h, double c, std::int64_t q_tilde);

} // namespace rndf
