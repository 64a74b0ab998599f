#pragma once

#include <cmath>

namespace rndf::detail {

// Double-double arithmetic (Dekker/Knuth error-free transforms). Used only
// to carry ~32 significant digits through argument preprocessing; the series
// kernels themselves reduce phases in 128-bit fixed point.
struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline dd dd_add(dd a, double b) { return dd_add(a, dd{b, 0.0}); }

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd{-b.hi, -b.lo}); }

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, lo);
}

inline dd dd_mul(dd a, double b) { return dd_mul(a, dd{b, 0.0}); }

inline dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    double q3 = r.hi / b.hi;
    return dd_add(quick_two_sum(q1, q2), q3);
}

inline dd dd_div(double a, dd b) { return dd_div(dd{a, 0.0}, b); }

inline double dd_to_double(dd a) { return a.hi + a.lo; }

// 2*pi to double-double precision.
inline constexpr dd dd_two_pi{6.283185307179586477e+00, 2.4492935982947063545e-16};

} // namespace rndf::detail
