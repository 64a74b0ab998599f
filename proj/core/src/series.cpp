#include "rndf/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rndf/errors.hpp"

namespace rndf {

using detail::dd;
using detail::frac128;
using detail::u64;

namespace {

constexpr double k_pi = 3.14159265358979323846;
constexpr double k_pi_sq = k_pi * k_pi;
constexpr double k_zeta2 = k_pi_sq / 6.0;

// Smallest N with coeff/N <= tol.
std::int64_t tail_length(double coeff, double tol, const eval_config& cfg, const char* who) {
    cfg.validate();
    if (!(tol > 0.0)) throw std::invalid_argument(std::string(who) + ": tol must be > 0");
    double n0 = coeff / tol;
    if (n0 > 9.0e18) throw capacity_error(std::string(who) + ": required terms overflow");
    std::int64_t n = static_cast<std::int64_t>(std::ceil(n0));
    if (n < 1) n = 1;
    while (coeff / static_cast<double>(n) > tol) ++n;
    while (n > 1 && coeff / static_cast<double>(n - 1) <= tol) --n;
    if (n > cfg.max_terms)
        throw capacity_error(std::string(who) + ": needs " + std::to_string(n) +
                             " terms, max_terms = " + std::to_string(cfg.max_terms));
    return n;
}

bool use_rational_path(const time_point& t) {
    if (!t.is_rational()) return false;
    return t.q() <= (std::int64_t{1} << 31) && std::llabs(t.p()) <= (std::int64_t{1} << 31);
}

} // namespace

std::int64_t truncation_length(double tol, const eval_config& cfg) {
    return tail_length(1.0 / k_pi_sq, tol, cfg, "truncation_length");
}

complex eval_phi(const time_point& t, const eval_config& cfg) {
    const std::int64_t n = truncation_length(cfg.tol, cfg);
    complex s;
    if (use_rational_path(t))
        s = detail::exp_sum_k2_rational(t.p(), t.q(), true, static_cast<u64>(n));
    else
        s = detail::exp_sum_k2(t.x_frac(), true, 1, 1, static_cast<u64>(n));
    // The -1 halves of the dropped tail sum exactly to zeta(2) - H2_N; only
    // the oscillatory half is truncated, with |tail| <= 1/(2 pi^2 N).
    complex value = complex{0.0, t.t()} + (k_zeta2 - s) / (2.0 * k_pi_sq);
    return checked(value, "eval_phi");
}

complex eval_phi_d(const time_point& x, const eval_config& cfg) {
    const std::int64_t n = tail_length(1.0 / k_pi, cfg.tol, cfg, "eval_phi_d");
    complex s;
    if (x.is_rational() && x.q() <= (std::int64_t{1} << 30) &&
        std::llabs(x.p()) <= (std::int64_t{1} << 31)) {
        // e^{i pi n^2 x} = e^{2 pi i n^2 (x/2)} with x/2 = p/(2q) exact.
        s = detail::exp_sum_k2_rational(x.p(), 2 * x.q(), false, static_cast<u64>(n));
    } else {
        s = detail::exp_sum_k2(frac128::from_dd(detail::dd_mul(x.x_dd(), 0.5)), false, 1, 1,
                               static_cast<u64>(n));
    }
    return checked(complex{0.0, -1.0} * s / k_pi, "eval_phi_d");
}

double eval_R(double x, const eval_config& cfg) {
    const std::int64_t n = tail_length(1.0, cfg.tol, cfg, "eval_R");
    dd w = detail::dd_div(dd{x, 0.0}, detail::dd_two_pi);
    complex s = detail::exp_sum_k2(frac128::from_dd(w), false, 1, 1, static_cast<u64>(n));
    double value = s.imag();
    if (!std::isfinite(value)) throw numeric_error("eval_R: non-finite result");
    return value;
}

complex eval_Y(double h, const eval_config& cfg) {
    if (h == 0.0 || !std::isfinite(h)) throw domain_error("eval_Y: h must be finite and nonzero");
    const std::int64_t n = tail_length(1.0, cfg.tol, cfg, "eval_Y");
    dd w = detail::dd_div(1.0, detail::dd_mul(detail::dd_mul(detail::dd_two_pi, 4.0), h));
    complex s = detail::exp_sum_k2(frac128::from_dd(w), false, 1, 1, static_cast<u64>(n));
    return checked(s, "eval_Y");
}

complex eval_Z(double h, const eval_config& cfg) {
    if (h == 0.0 || !std::isfinite(h)) throw domain_error("eval_Z: h must be finite and nonzero");
    const std::int64_t n = tail_length(1.0, cfg.tol, cfg, "eval_Z");
    dd w = detail::dd_div(1.0, detail::dd_mul(detail::dd_mul(detail::dd_two_pi, 16.0), h));
    const u64 odd_count = static_cast<u64>((n + 1) / 2);
    complex s = detail::exp_sum_k2(frac128::from_dd(w), true, 1, 2, odd_count);
    return checked(s, "eval_Z");
}

complex phi_increment(const time_point& t, double h, const eval_config& cfg) {
    return phi_increment_x(t, detail::dd_mul(detail::dd_two_pi, h), cfg);
}

complex phi_increment_x(const time_point& t, dd eps_x, const eval_config& cfg) {
    const std::int64_t n = truncation_length(cfg.tol, cfg);
    frac128 f1 = t.x_frac();
    frac128 f2 = f1 + frac128::from_dd(eps_x);
    complex d = detail::exp_diff_sum_k2(f1, f2, static_cast<u64>(n));
    double h = detail::dd_to_double(detail::dd_div(eps_x, detail::dd_two_pi));
    return checked(complex{0.0, h} - d / (2.0 * k_pi_sq), "phi_increment");
}

complex phi_antiderivative(double t, const eval_config& cfg) {
    cfg.validate();
    const double pi4 = k_pi_sq * k_pi_sq;
    double n0 = std::cbrt(1.0 / (12.0 * pi4 * cfg.tol));
    std::int64_t n = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(n0)));
    while (1.0 / (12.0 * pi4 * std::pow(static_cast<double>(n), 3)) > cfg.tol) ++n;
    if (n > cfg.max_terms) throw capacity_error("phi_antiderivative: term budget exceeded");
    frac128 f = frac128::from_dd(detail::dd_mul(detail::dd_two_pi, t));
    complex s = detail::exp_sum_k4_minus1(f, static_cast<u64>(n));
    complex value = t / 12.0 + complex{0.0, 0.5 * t * t} + complex{0.0, -1.0} * s / (8.0 * pi4);
    return checked(value, "phi_antiderivative");
}

namespace {

// Iterative radix-2 FFT with e^{-2 pi i / M} twiddles.
void fft_neg(std::vector<complex>& a) {
    const std::size_t m = a.size();
    for (std::size_t i = 1, j = 0; i < m; ++i) {
        std::size_t bit = m >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<complex> tw(m / 2);
    for (std::size_t i = 0; i < m / 2; ++i) {
        auto sc = detail::sincos2pi(static_cast<double>(i) / static_cast<double>(m));
        tw[i] = {sc.c, -sc.s};
    }
    for (std::size_t len = 2; len <= m; len <<= 1) {
        std::size_t step = m / len;
        for (std::size_t i = 0; i < m; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                complex u = a[i + j];
                complex v = a[i + j + len / 2] * tw[j * step];
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

} // namespace

std::vector<complex> phi_period_grid(std::size_t n, const eval_config& cfg) {
    if (n < 3 || ((n - 1) & (n - 2)) != 0)
        throw std::invalid_argument("phi_period_grid: n-1 must be a power of two");
    const std::size_t d = n - 1;
    const std::int64_t terms = truncation_length(cfg.tol, cfg);

    std::vector<complex> bucket(d, complex{0.0, 0.0});
    u64 r = 1 % d;                 // k^2 mod d, k = 1
    u64 dr = 3 % d;                // increment (2k+1) mod d
    for (std::int64_t k = 1; k <= terms; ++k) {
        double dk = static_cast<double>(k);
        bucket[r] += 1.0 / (dk * dk);
        r += dr;
        if (r >= d) r -= d;
        dr += 2;
        if (dr >= d) dr -= d;
    }
    fft_neg(bucket); // bucket[j] = sum_k e^{-2 pi i k^2 j / d} / k^2

    const double period = 1.0 / detail::dd_to_double(detail::dd_two_pi);
    std::vector<complex> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        double tj = period * (static_cast<double>(j) / static_cast<double>(d));
        complex s = bucket[j % d];
        out[j] = complex{0.0, tj} + (k_zeta2 - s) / (2.0 * k_pi_sq);
    }
    return out;
}

} // namespace rndf
