#include "rndf/scaling_limits.hpp"

#include <algorithm>
#include <cmath>

#include "rndf/errors.hpp"
#include "rndf/quadrature.hpp"
#include "rndf/series.hpp"

namespace rndf {

namespace {

constexpr double k_pi = 3.14159265358979323846;
const complex k_front = std::sqrt(k_pi) * complex{1.0, -1.0} / std::sqrt(2.0);

void check_c(double c, const char* who) {
    if (!(c >= 1.0 && c <= 4.0))
        throw std::invalid_argument(std::string(who) + ": c must lie in [1,4]");
}

} // namespace

void scale_params::validate() const {
    check_c(c, "scale_params");
    if (m < 1) throw std::invalid_argument("scale_params: m must be positive");
    if (!(mu >= 1.0 && mu <= 2.0)) throw std::invalid_argument("scale_params: mu must be in [1,2]");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("scale_params: alpha must be in [0,1)");
}

double beta_map(double s, double c) {
    check_c(c, "beta_map");
    if (!(s >= 0.0)) throw std::invalid_argument("beta_map: s must be >= 0");
    return s / (1.0 + 4.0 * k_pi * c * s);
}

namespace {

// Integral INT_0^beta phi(r) (1 - 4 pi c r)^{-5/2} dr through one exact
// integration by parts:
//   PHI(beta) (1-4 pi c beta)^{-5/2} - 10 pi c INT_0^beta PHI(r)(1-..)^{-7/2}.
complex weighted_phi_integral(double beta, double c, double abs_tol, const eval_config& cfg) {
    double wp5 = std::pow(1.0 - 4.0 * k_pi * c * beta, -2.5);
    eval_config anti = cfg.with_tol(std::clamp(abs_tol / (4.0 * wp5), 1e-14, 1e-8));
    complex lead = phi_antiderivative(beta, anti) * wp5;
    auto integrand = [&](double r) {
        return phi_antiderivative(r, anti) * std::pow(1.0 - 4.0 * k_pi * c * r, -3.5);
    };
    quad_result q = adaptive_gk15(integrand, 0.0, beta, abs_tol / (20.0 * k_pi * c));
    return lead - 10.0 * k_pi * c * q.value;
}

} // namespace

complex h_closed(double s, double c, const eval_config& cfg) {
    check_c(c, "h_closed");
    if (!(s > 0.0)) throw std::invalid_argument("h_closed: s must be > 0");
    cfg.validate();
    double beta = beta_map(s, c);
    double g = 1.0 + 4.0 * k_pi * c * s; // = (1 - 4 pi c beta)^{-1}, exactly
    double w3 = std::pow(g, 1.5);
    // error budget: phi eval, antiderivative lead, and quadrature each get
    // a third of cfg.tol after the sqrt(pi) prefactor
    double budget = cfg.tol / (3.0 * std::sqrt(k_pi));
    complex phi_b = eval_phi(time_point::from_t(beta), cfg.with_tol(std::clamp(budget / w3, 1e-10, 1e-6)));
    complex integral = weighted_phi_integral(beta, c, budget / (6.0 * k_pi * c), cfg);
    return k_front * (phi_b * w3 - 6.0 * k_pi * c * integral);
}

complex h_series(double s, double c, const eval_config& cfg) {
    check_c(c, "h_series");
    if (!(s > 0.0 && s <= 0.1)) throw std::invalid_argument("h_series: s must be in (0, 0.1]");
    double beta = beta_map(s, c);
    double scale = 4.0 * std::pow(s, 1.5);
    complex y = eval_Y(beta, cfg.with_tol(std::clamp(cfg.tol / scale, 1e-10, 1e-4)));
    return std::sqrt(s) + complex{0.0, 4.0} * y * std::pow(s, 1.5);
}

complex h_closed_diff(double s1, double s2, double c, const eval_config& cfg) {
    check_c(c, "h_closed_diff");
    if (!(s1 > 0.0 && s2 > 0.0))
        throw std::invalid_argument("h_closed_diff: s must be > 0");
    if (s1 == s2) return {0.0, 0.0};
    if (std::max(s1, s2) > 2.0 * std::min(s1, s2))
        return h_closed(s1, c, cfg.with_tol(cfg.tol / 2.0)) -
               h_closed(s2, c, cfg.with_tol(cfg.tol / 2.0));
    cfg.validate();

    // The phi(beta2)-weighted pieces of the two closed forms cancel exactly
    // (the weight antiderivative is what built the closed form), leaving
    //   H(s1)-H(s2) = k_front [ dphi * w1
    //                           - 6 pi c INT (phi(r)-phi(beta2)) W5(r) dr ].
    // With s1/s2 within a factor of two, ds = s1 - s2 is exact (Sterbenz)
    // and everything is cancellation-free.
    double ds = s1 - s2;
    double g1 = 1.0 + 4.0 * k_pi * c * s1;
    double g2 = 1.0 + 4.0 * k_pi * c * s2;
    double beta2 = beta_map(s2, c);
    detail::dd dbeta =
        detail::dd_div(detail::dd{ds, 0.0}, detail::dd_mul(detail::dd{g1, 0.0}, g2));
    double db = detail::dd_to_double(dbeta);
    double w1 = std::pow(g1, 1.5);

    double budget = cfg.tol / std::sqrt(k_pi);
    complex dphi = phi_increment_x(time_point::from_t(beta2),
                                   detail::dd_mul(detail::dd_two_pi, dbeta),
                                   cfg.with_tol(std::clamp(0.75 * budget / w1, 1e-10, 1e-6)));

    complex icorr{0.0, 0.0};
    if (db != 0.0) {
        double w5max = std::pow(std::max(g1, g2), 2.5);
        double quad_tol = 0.25 * budget / (6.0 * k_pi * c);
        double tol_inc = std::clamp(quad_tol / (4.0 * std::abs(db) * w5max), 1e-10, 1e-5);
        auto correction = [&](double r) {
            return phi_increment(time_point::from_t(beta2), r - beta2, cfg.with_tol(tol_inc)) *
                   std::pow(1.0 - 4.0 * k_pi * c * r, -2.5);
        };
        quad_result q = adaptive_gk15(correction, beta2, beta2 + db, quad_tol, 1 << 14, 8);
        icorr = q.value;
    }
    return k_front * (dphi * w1 - 6.0 * k_pi * c * icorr);
}

corner_grid_points corner_grid(double c, std::int64_t m) {
    check_c(c, "corner_grid");
    double denom = 4.0 * static_cast<double>(m) - 2.0 * c;
    if (denom <= 0.0) throw domain_error("corner_grid: degenerate denominator 4m - 2c <= 0");
    corner_grid_points out;
    out.s_m = 1.0 / (2.0 * k_pi * denom);
    out.s_tilde_m = 1.0 / (4.0 * k_pi * (2.0 * static_cast<double>(m) + 1.0 - c));
    out.s_cm = out.s_m;
    return out;
}

double grid_index_s(double c, double m_real) {
    double denom = 4.0 * m_real - 2.0 * c;
    if (denom <= 0.0) throw domain_error("grid_index_s: degenerate denominator");
    return 1.0 / (2.0 * k_pi * denom);
}

window_location locate_window(double K, double c) {
    check_c(c, "locate_window");
    if (!(K > 0.0 && K < 1.0)) throw range_error("locate_window: K must lie in (0,1)");
    std::int64_t m_min = static_cast<std::int64_t>(std::floor(c / 2.0)) + 1;
    double target = K / (2.0 * k_pi);
    if (target > grid_index_s(c, static_cast<double>(m_min)))
        throw range_error("locate_window: K too large for the grid");
    double pos = (1.0 / K + 2.0 * c) / 4.0;
    std::int64_t m = static_cast<std::int64_t>(std::floor(pos));
    // FP guard: enforce s_{m+1} < K/(2 pi) <= s_m exactly as stated
    while (target > grid_index_s(c, static_cast<double>(m))) --m;
    while (target <= grid_index_s(c, static_cast<double>(m + 1))) ++m;
    window_location out;
    out.m = m;
    out.alpha = std::clamp(pos - static_cast<double>(m), 0.0, 1.0 - 1e-16);
    return out;
}

complex g_rescaled(double s, double mu, double c, std::int64_t m, const eval_config& cfg) {
    check_c(c, "g_rescaled");
    if (!(mu >= 1.0 && mu <= 2.0)) throw std::invalid_argument("g_rescaled: mu must be in [1,2]");
    if (m < 1) throw std::invalid_argument("g_rescaled: m must be positive");
    double s_hi = grid_index_s(c, static_cast<double>(m));
    double s_lo = grid_index_s(c, static_cast<double>(m + 1));
    double s_ref = grid_index_s(c, static_cast<double>(m) + mu);
    if (s == s_ref) return {0.0, 0.0};
    if (!(s > s_lo && s <= s_hi))
        throw range_error("g_rescaled: s outside the window (s_{m+1}, s_m]");
    double scale = std::pow(s_ref, -1.5);
    complex diff = h_closed_diff(s, s_ref, c, cfg.with_tol(cfg.tol / scale));
    return scale * diff;
}

} // namespace rndf
