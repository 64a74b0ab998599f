#include "rndf/detail/phase.hpp"

#include <array>

namespace rndf::detail {

namespace {

// Taylor coefficients of sin(2*pi*v) and cos(2*pi*v), |v| <= 1/4. At that
// radius the dropped sin term is (pi/2)^23/23! < 2e-18, so the polynomials
// are exact to well under a double ulp; coefficients are formed in long
// double so each carries at most one rounding.
struct poly_tables {
    std::array<double, 11> s{};
    std::array<double, 12> c{};
    poly_tables() {
        const long double two_pi = 6.283185307179586476925286766559L;
        long double num = two_pi;       // (2pi)^(2m+1)
        long double fact = 1.0L;        // (2m+1)!
        for (int m = 0; m < 11; ++m) {
            if (m > 0) {
                num *= two_pi * two_pi;
                fact *= static_cast<long double>(2 * m) * (2 * m + 1);
            }
            s[static_cast<std::size_t>(m)] =
                static_cast<double>((m % 2 ? -1.0L : 1.0L) * num / fact);
        }
        num = 1.0L;
        fact = 1.0L;
        for (int m = 0; m < 12; ++m) {
            if (m > 0) {
                num *= two_pi * two_pi;
                fact *= static_cast<long double>(2 * m - 1) * (2 * m);
            }
            c[static_cast<std::size_t>(m)] =
                static_cast<double>((m % 2 ? -1.0L : 1.0L) * num / fact);
        }
    }
};

const poly_tables tbl;

// Branchless half-period reduction: u -> v in [-1/4,1/4] with a +-1 sign.
// Everything is a double op, so the block vectorizes end to end.
inline void sincos2pi_block(const double* u, double* s, double* c, int n) {
    const auto& S = tbl.s;
    const auto& C = tbl.c;
    for (int i = 0; i < n; ++i) {
        double t = u[i] + u[i];
        double jf = std::floor(t + 0.5);
        double v = 0.5 * (t - jf);
        double parity = jf - 2.0 * std::floor(0.5 * jf);
        double sign = 1.0 - (parity + parity);
        double w = v * v;
        double sp = S[10];
        sp = S[9] + w * sp;
        sp = S[8] + w * sp;
        sp = S[7] + w * sp;
        sp = S[6] + w * sp;
        sp = S[5] + w * sp;
        sp = S[4] + w * sp;
        sp = S[3] + w * sp;
        sp = S[2] + w * sp;
        sp = S[1] + w * sp;
        sp = S[0] + w * sp;
        double cp = C[11];
        cp = C[10] + w * cp;
        cp = C[9] + w * cp;
        cp = C[8] + w * cp;
        cp = C[7] + w * cp;
        cp = C[6] + w * cp;
        cp = C[5] + w * cp;
        cp = C[4] + w * cp;
        cp = C[3] + w * cp;
        cp = C[2] + w * cp;
        cp = C[1] + w * cp;
        s[i] = sign * v * sp;
        c[i] = sign * (C[0] + w * cp);
    }
}

// Neumaier compensated add for the block flushes.
inline void comp_add(double& sum, double& comp, double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
        comp += (sum - t) + x;
    else
        comp += (x - t) + sum;
    sum = t;
}

constexpr int k_chunk = 16;
constexpr u64 k_block = 4096; // flush cadence: keeps the certified rounding
                              // error of a block under k_block*eps*block_sum

struct block_acc {
    double re = 0.0, im = 0.0;       // running block totals
    double mre = 0.0, mim = 0.0;     // Neumaier master
    double cre = 0.0, cim = 0.0;
    u64 since_flush = 0;

    inline void flush() {
        comp_add(mre, cre, re);
        comp_add(mim, cim, im);
        re = im = 0.0;
        since_flush = 0;
    }
    inline void maybe_flush(u64 added) {
        since_flush += added;
        if (since_flush >= k_block) flush();
    }
    complex total() {
        flush();
        return {mre + cre, mim + cim};
    }
};

} // namespace

sin_cos sincos2pi(double u) {
    double s, c;
    sincos2pi_block(&u, &s, &c, 1);
    return {s, c};
}

frac128 frac128::from_double(double x) {
    // For negative x, complement in fixed point: frac(x) = 1 - frac(-x) and
    // two's-complement negation is exact mod 1. For x >= 0 the subtraction
    // x - floor(x) is exact (the true difference is representable).
    if (x < 0.0) return {static_cast<u128>(0) - from_double(-x).f};
    double r = x - std::floor(x);
    if (r >= 1.0) r = 0.0;
    // r has 53 significant bits, so r*2^128 = hi*2^64 + lo exactly
    // (up to a single rounding at 2^-128 for subnormal-scale r).
    double scaled = r * 0x1p64;
    double hi = std::floor(scaled);
    double rem = scaled - hi;
    u64 h = static_cast<u64>(hi);
    u64 l = static_cast<u64>(rem * 0x1p64);
    return {(static_cast<u128>(h) << 64) | l};
}

frac128 frac128::from_dd(dd x) {
    frac128 a = from_double(x.hi);
    frac128 b = from_double(x.lo); // negative lo wraps correctly mod 1
    return a + b;
}

complex exp_sum_k2(frac128 x, bool negate_phase, u64 k0, u64 stride, u64 count) {
    quad_phase ph(x, k0, stride);
    block_acc acc;
    double u[k_chunk], s[k_chunk], c[k_chunk], w[k_chunk];
    u64 k = k0;
    u64 left = count;
    while (left > 0) {
        int n = static_cast<int>(left < k_chunk ? left : k_chunk);
        for (int i = 0; i < n; ++i) u[i] = ph.next_unit();
        sincos2pi_block(u, s, c, n);
        for (int i = 0; i < n; ++i) {
            double dk = static_cast<double>(k + static_cast<u64>(i) * stride);
            w[i] = 1.0 / (dk * dk);
        }
        double re = 0.0, im = 0.0;
        for (int i = 0; i < n; ++i) {
            re += c[i] * w[i];
            im += s[i] * w[i];
        }
        acc.re += re;
        acc.im += im;
        acc.maybe_flush(static_cast<u64>(n));
        k += static_cast<u64>(n) * stride;
        left -= static_cast<u64>(n);
    }
    complex r = acc.total();
    return negate_phase ? std::conj(r) : r;
}

complex exp_sum_k2_rational(std::int64_t p, std::int64_t q, bool negate_phase, u64 count) {
    // Exact integer residues r_k = k^2 p mod q; phases r_k / q.
    const u64 uq = static_cast<u64>(q);
    u64 pm = static_cast<u64>(((p % q) + q) % q);
    u64 r = pm % uq;            // k = 1
    u64 d = (3 * pm) % uq;      // r_{k+1} = r_k + (2k+1) p
    const u64 step2 = (2 * pm) % uq;
    const double inv_q = 1.0 / static_cast<double>(q);
    block_acc acc;
    double u[k_chunk], s[k_chunk], c[k_chunk], w[k_chunk];
    u64 k = 1;
    u64 left = count;
    while (left > 0) {
        int n = static_cast<int>(left < k_chunk ? left : k_chunk);
        for (int i = 0; i < n; ++i) {
            u[i] = static_cast<double>(r) * inv_q;
            r += d;
            if (r >= uq) r -= uq;
            d += step2;
            if (d >= uq) d -= uq;
        }
        sincos2pi_block(u, s, c, n);
        for (int i = 0; i < n; ++i) {
            double dk = static_cast<double>(k + static_cast<u64>(i));
            w[i] = 1.0 / (dk * dk);
        }
        double re = 0.0, im = 0.0;
        for (int i = 0; i < n; ++i) {
            re += c[i] * w[i];
            im += s[i] * w[i];
        }
        acc.re += re;
        acc.im += im;
        acc.maybe_flush(static_cast<u64>(n));
        k += static_cast<u64>(n);
        left -= static_cast<u64>(n);
    }
    complex res = acc.total();
    return negate_phase ? std::conj(res) : res;
}

complex exp_diff_sum_k2(frac128 x1, frac128 x2, u64 count) {
    quad_phase p1(x1, 1, 1);
    quad_phase p2(x2, 1, 1);
    block_acc acc;
    double u1[k_chunk], u2[k_chunk], s1[k_chunk], c1[k_chunk], s2[k_chunk], c2[k_chunk],
        w[k_chunk];
    u64 k = 1;
    u64 left = count;
    while (left > 0) {
        int n = static_cast<int>(left < k_chunk ? left : k_chunk);
        for (int i = 0; i < n; ++i) {
            u1[i] = p1.next_unit();
            u2[i] = p2.next_unit();
        }
        sincos2pi_block(u1, s1, c1, n);
        sincos2pi_block(u2, s2, c2, n);
        for (int i = 0; i < n; ++i) {
            double dk = static_cast<double>(k + static_cast<u64>(i));
            w[i] = 1.0 / (dk * dk);
        }
        double re = 0.0, im = 0.0;
        for (int i = 0; i < n; ++i) {
            re += (c2[i] - c1[i]) * w[i];
            im += (s1[i] - s2[i]) * w[i]; // conjugated phases: e^{-i...}
        }
        acc.re += re;
        acc.im += im;
        acc.maybe_flush(static_cast<u64>(n));
        k += static_cast<u64>(n);
        left -= static_cast<u64>(n);
    }
    return acc.total();
}

complex exp_sum_k4_minus1(frac128 x, u64 count) {
    quad_phase ph(x, 1, 1);
    block_acc acc;
    for (u64 k = 1; k <= count; ++k) {
        double u = ph.next_unit();
        sin_cos sc = sincos2pi(u);
        double dk = static_cast<double>(k);
        double k2 = dk * dk;
        double w = 1.0 / (k2 * k2);
        acc.re += (sc.c - 1.0) * w;
        acc.im += -sc.s * w;
        acc.maybe_flush(1);
    }
    return acc.total();
}

} // namespace rndf::detail
