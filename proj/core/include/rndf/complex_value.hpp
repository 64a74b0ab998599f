#pragma once

#include <cmath>
#include <complex>

#include "rndf/errors.hpp"

namespace rndf {

// Points of the complex plane C ~ R^2, the codomain of phi and friends.
using complex = std::complex<double>;

inline bool is_finite(complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// API-boundary guard: no NaN/Inf escapes an evaluator.
inline complex checked(complex z, const char* who) {
    if (!is_finite(z)) throw numeric_error(std::string(who) + ": non-finite result");
    return z;
}

// Signed angular distance from a to b on the circle, result in (-pi, pi].
inline double angle_between(complex a, complex b) {
    double d = std::arg(b) - std::arg(a);
    if (d > M_PI) d -= 2.0 * M_PI;
    if (d <= -M_PI) d += 2.0 * M_PI;
    return d;
}

inline double circular_distance(complex a, complex b) {
    return std::abs(angle_between(a, b));
}

} // namespace rndf
