#pragma once

#include <cmath>
#include <cstdint>

#include "rndf/complex_value.hpp"
#include "rndf/detail/dd.hpp"

namespace rndf::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// A point of the unit circle parameter [0,1), stored as value/2^128.
// Addition wraps mod 1 exactly, which is what makes the quadratic phase
// recurrences below exact: representing x once costs <= 2^-129, and no
// further error accumulates no matter how many terms are summed.
struct frac128 {
    u128 f = 0;

    frac128 operator+(frac128 o) const { return {static_cast<u128>(f + o.f)}; }
    frac128 operator-(frac128 o) const { return {static_cast<u128>(f - o.f)}; }

    // frac(n * x) for the represented x, exact mod 1.
    frac128 times(u64 n) const { return {static_cast<u128>(f * n)}; }

    double to_unit() const {
        return static_cast<double>(static_cast<u64>(f >> 64)) * 0x1p-64;
    }

    static frac128 from_double(double x);
    static frac128 from_dd(dd x);
};

// Generates frac(k^2 * x) for k = k0, k0+stride, k0+2*stride, ... using the
// exact wrapping recurrence theta_{k+s} = theta_k + (2ks+s^2) x.
struct quad_phase {
    u128 theta;
    u128 delta;
    u128 ddelta;

    quad_phase(frac128 x, u64 k0, u64 stride) {
        theta = x.times(k0 * k0).f;
        delta = x.times(2 * k0 * stride + stride * stride).f;
        ddelta = x.times(2 * stride * stride).f;
    }

    // Phase for the current k; then advances to k+stride.
    inline double next_unit() {
        double u = static_cast<double>(static_cast<u64>(theta >> 64)) * 0x1p-64;
        theta += delta;
        delta += ddelta;
        return u;
    }
};

struct sin_cos {
    double s;
    double c;
};

// sin/cos of 2*pi*u for u in [0,1). Absolute error < 1e-15.
sin_cos sincos2pi(double u);

// sum_{j<count} e^{sign*2*pi*i*theta_j} / k_j^2,  k_j = k0 + j*stride.
complex exp_sum_k2(frac128 x, bool negate_phase, u64 k0, u64 stride, u64 count);

// Exact-reduction variant for x = p/q: phases (k^2 p mod q)/q.
complex exp_sum_k2_rational(std::int64_t p, std::int64_t q, bool negate_phase, u64 count);

// sum_{k<=count} [e^{-2*pi*i*k^2*x2} - e^{-2*pi*i*k^2*x1}] / k^2.
complex exp_diff_sum_k2(frac128 x1, frac128 x2, u64 count);

// sum_{k<=count} (e^{-2*pi*i*k^2*x} - 1) / k^4.
complex exp_sum_k4_minus1(frac128 x, u64 count);

} // namespace rndf::detail
