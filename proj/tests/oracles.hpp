#pragma once

// Brute-force long-double oracles, kept deliberately independent of the
// library's kernels: libm trig, fmodl reduction, naive summation. Expensive
// but trustworthy; used to pin expected values.

#include <cmath>
#include <complex>
#include <cstdint>

namespace oracle {

inline constexpr long double pi_l = 3.14159265358979323846264338327950288L;

// Partial sum of phi(t) over |k| <= n with the non-oscillatory part of the
// tail completed in closed form (zeta(2) minus the harmonic prefix).
inline std::complex<double> phi(double t, std::int64_t n) {
    const long double xr = 4.0L * pi_l * pi_l * static_cast<long double>(t);
    long double re = 0.0L, im = 0.0L, h2 = 0.0L;
    for (std::int64_t k = 1; k <= n; ++k) {
        long double kk = static_cast<long double>(k) * static_cast<long double>(k);
        long double th = fmodl(kk * xr, 2.0L * pi_l);
        long double c = cosl(th), s = sinl(th);
        long double w = 1.0L / (2.0L * pi_l * pi_l * kk);
        // (e^{-i theta} - 1)/(-2 pi^2 k^2)
        re += (1.0L - c) * w;
        im += s * w;
        h2 += 1.0L / kk;
    }
    long double zeta2 = pi_l * pi_l / 6.0L;
    re += (zeta2 - h2) / (2.0L * pi_l * pi_l);
    return {static_cast<double>(re), static_cast<double>(im + static_cast<long double>(t))};
}

// Partial sum of phi_D(x) over n <= terms.
inline std::complex<double> phi_d(double x, std::int64_t terms) {
    const long double xl = static_cast<long double>(x);
    long double re = 0.0L, im = 0.0L;
    for (std::int64_t n = 1; n <= terms; ++n) {
        long double nn = static_cast<long double>(n) * static_cast<long double>(n);
        long double th = fmodl(pi_l * nn * xl, 2.0L * pi_l);
        // e^{i th}/(i pi n^2) = (sin th - i cos th)/(pi n^2) * ... careful:
        // 1/i = -i, so e^{i th}/(i pi n^2) = (sin th + ... ) compute directly:
        long double c = cosl(th), s = sinl(th);
        re += s / (pi_l * nn);
        im += -c / (pi_l * nn);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

// Partial sum of R(x) over n <= terms.
inline double R(double x, std::int64_t terms) {
    const long double xl = static_cast<long double>(x);
    long double acc = 0.0L;
    for (std::int64_t n = 1; n <= terms; ++n) {
        long double nn = static_cast<long double>(n) * static_cast<long double>(n);
        long double th = fmodl(nn * xl, 2.0L * pi_l);
        acc += sinl(th) / nn;
    }
    return static_cast<double>(acc);
}

// Partial sums of Y and Z.
inline std::complex<double> Y(double h, std::int64_t terms) {
    const long double w = 1.0L / (4.0L * static_cast<long double>(h));
    long double re = 0.0L, im = 0.0L;
    for (std::int64_t k = 1; k <= terms; ++k) {
        long double kk = static_cast<long double>(k) * static_cast<long double>(k);
        long double th = fmodl(kk * w, 2.0L * pi_l);
        re += cosl(th) / kk;
        im += sinl(th) / kk;
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

inline std::complex<double> Z(double h, std::int64_t terms) {
    const long double w = 1.0L / (16.0L * static_cast<long double>(h));
    long double re = 0.0L, im = 0.0L;
    for (std::int64_t k = 1; k <= terms; k += 2) {
        long double kk = static_cast<long double>(k) * static_cast<long double>(k);
        long double th = fmodl(kk * w, 2.0L * pi_l);
        re += cosl(th) / kk;
        im += -sinl(th) / kk;
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

// Quadratic Gauss sum by direct libm summation.
inline std::complex<double> gauss_sum(long long p, long long m, long long q) {
    long double re = 0.0L, im = 0.0L;
    for (long long k = 0; k < q; ++k) {
        long double th = 2.0L * pi_l * fmodl((static_cast<long double>(p) * k * k + static_cast<long double>(m) * k) / q, 1.0L);
        re += cosl(th);
        im += sinl(th);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

} // namespace oracle
