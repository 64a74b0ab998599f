#include "rndf/rational_points.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "rndf/errors.hpp"
#include "rndf/series.hpp"

namespace rndf {

namespace {

constexpr double k_pi = 3.14159265358979323846;

// sqrt(h) with the paper's branch sqrt(-1) = -i for h < 0.
complex branch_sqrt(double h) {
    double r = std::sqrt(std::abs(h));
    return h >= 0.0 ? complex{r, 0.0} : complex{0.0, -r};
}

// Adaptive working tolerance for a secant increment of expected size inc.
eval_config probe_cfg(const eval_config& base, double inc_est, double angle_err) {
    double tol = std::clamp(angle_err * inc_est, 1e-12, base.tol);
    eval_config c = base;
    c.tol = tol;
    return c;
}

double circ_mod(double a) {
    while (a > k_pi) a -= 2.0 * k_pi;
    while (a <= -k_pi) a += 2.0 * k_pi;
    return a;
}

} // namespace

double rational_point::validity_radius() const {
    return 1.0 / (16.0 * k_pi * static_cast<double>(q_tilde) * static_cast<double>(q_tilde));
}

rational_point classify(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::invalid_argument("classify: q must be positive");
    if (p < 0) throw std::invalid_argument("classify: p must be non-negative");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("classify: p/q must be coprime");
    rational_point pt;
    pt.p = p;
    pt.q = q;
    pt.klass = (q % 4 == 2) ? point_class::spiral : point_class::corner;
    pt.q_tilde = (q % 2 == 1) ? q : q / 2;
    return pt;
}

complex gauss_sum(std::int64_t p, std::int64_t m, std::int64_t q) {
    if (q < 1) throw std::invalid_argument("gauss_sum: q must be >= 1");
    const std::int64_t pm = ((p % q) + q) % q;
    const std::int64_t mm = ((m % q) + q) % q;
    double re = 0.0, im = 0.0;
    const double inv_q = 1.0 / static_cast<double>(q);
    for (std::int64_t k = 0; k < q; ++k) {
        using i128 = __int128;
        i128 r = (static_cast<i128>(pm) * k * k + static_cast<i128>(mm) * k) % q;
        auto sc = detail::sincos2pi(static_cast<double>(static_cast<std::int64_t>(r)) * inv_q);
        re += sc.c;
        im += sc.s;
    }
    return {re, im};
}

complex fit_eighth_root(rational_point& pt, const eval_config& cfg) {
    if (pt.klass != point_class::corner)
        throw class_error("fit_eighth_root: spiral points carry no corner expansion");
    const double qt = static_cast<double>(pt.q_tilde);
    const time_point base = pt.tp();

    std::vector<double> psi;
    for (int j = 0; j <= 4; ++j) {
        double h = std::pow(10.0, -4.0 - j) / (qt * qt);
        double inc_est = std::sqrt(h / (k_pi * qt));
        complex inc = phi_increment(base, h, probe_cfg(cfg, inc_est, 5e-3));
        if (std::abs(inc) == 0.0) continue;
        psi.push_back(circ_mod(std::arg(inc) - k_pi / 4.0));
    }
    if (psi.size() < 3) throw numeric_error("fit_eighth_root: degenerate increments");

    // median, unwrapped around the first sample
    for (std::size_t i = 1; i < psi.size(); ++i) psi[i] = psi[0] + circ_mod(psi[i] - psi[0]);
    std::vector<double> sorted = psi;
    std::sort(sorted.begin(), sorted.end());
    double med = sorted[sorted.size() / 2];

    double snapped = std::round(med / (k_pi / 4.0)) * (k_pi / 4.0);
    double residual = std::abs(circ_mod(med - snapped));
    if (residual > 0.2) throw numeric_error("fit_eighth_root: no convergence to an eighth root");

    auto sc = detail::sincos2pi(circ_mod(snapped) / (2.0 * k_pi));
    pt.e_fit = complex{sc.c, sc.s};
    pt.fit_residual = residual;
    return *pt.e_fit;
}

double b_map(double h, double c, std::int64_t q_tilde) {
    const double qt = static_cast<double>(q_tilde);
    double denom = 1.0 + 4.0 * k_pi * c * qt * h;
    if (std::abs(denom) < 1e-12) throw domain_error("b_map: pole of the Moebius map");
    return qt * qt * h / denom;
}

namespace {

// First expansion term e (1+i)/sqrt(2 pi) sqrt(h)/sqrt(q~).
complex corner_term1(const rational_point& pt, double h) {
    const double qt = static_cast<double>(pt.q_tilde);
    return *pt.e_fit * complex{1.0, 1.0} / std::sqrt(2.0 * k_pi) * branch_sqrt(h) / std::sqrt(qt);
}

// Second term -4 e (1-i)/sqrt(2 pi) Y(b(h)) q~^{3/2} h^{3/2}.
complex corner_term2(const rational_point& pt, double h, double c_ratio, const eval_config& cfg) {
    const double qt = static_cast<double>(pt.q_tilde);
    double c = (h >= 0.0 ? c_ratio : -c_ratio) * qt;
    double b = b_map(h, c, pt.q_tilde);
    // Y's contribution is scaled down by the h^{3/2} prefactor; relax its
    // tolerance accordingly (it costs 1/tol terms).
    double prefac = 4.0 * std::sqrt(2.0 / k_pi) * std::pow(qt * std::abs(h), 1.5);
    double tol_y = std::clamp(cfg.tol / std::max(prefac, 1e-300), 1e-10, 1e-4);
    complex y = eval_Y(b, cfg.with_tol(tol_y));
    complex h32 = branch_sqrt(h) * branch_sqrt(h) * branch_sqrt(h);
    return -4.0 * *pt.e_fit * complex{1.0, -1.0} / std::sqrt(2.0 * k_pi) * y *
           std::pow(qt, 1.5) * h32;
}

void require_in_validity(const rational_point& pt, double h, const char* who) {
    if (h == 0.0 || !std::isfinite(h) || std::abs(h) >= pt.validity_radius())
        throw validity_error(std::string(who) + ": offset outside validity radius");
}

} // namespace

asymptotic_term corner_asymptotic(const rational_point& pt, double h, const eval_config& cfg) {
    if (pt.klass != point_class::corner)
        throw class_error("corner_asymptotic: point is not a corner");
    require_in_validity(pt, h, "corner_asymptotic");
    if (!pt.e_fit)
        throw std::invalid_argument("corner_asymptotic: e_fit not available (run fit_eighth_root)");
    double c_ratio = h >= 0.0 ? pt.c_ratio_plus : pt.c_ratio_minus;
    asymptotic_term out;
    out.value = corner_term1(pt, h) + corner_term2(pt, h, c_ratio, cfg);
    out.order = 2.5;
    out.validity_radius = pt.validity_radius();
    return out;
}

asymptotic_term spiral_asymptotic(const rational_point& pt, double h, const eval_config& cfg) {
    if (pt.klass != point_class::spiral)
        throw class_error("spiral_asymptotic: point is not a spiral");
    require_in_validity(pt, h, "spiral_asymptotic");
    const double qt = static_cast<double>(pt.q_tilde);
    complex e = pt.e_fit.value_or(complex{1.0, 0.0});
    double c_ratio = h >= 0.0 ? pt.c_ratio_plus : pt.c_ratio_minus;
    double c = (h >= 0.0 ? c_ratio : -c_ratio) * qt;
    double b = b_map(h, c, pt.q_tilde);
    double prefac = 16.0 * std::sqrt(2.0 / k_pi) * std::pow(qt * std::abs(h), 1.5);
    double tol_z = std::clamp(cfg.tol / std::max(prefac, 1e-300), 1e-10, 1e-4);
    complex z = eval_Z(b, cfg.with_tol(tol_z));
    complex h32 = branch_sqrt(h) * branch_sqrt(h) * branch_sqrt(h);
    asymptotic_term out;
    out.value = -16.0 * e * complex{1.0, -1.0} / std::sqrt(2.0 * k_pi) * z * std::pow(qt, 1.5) * h32;
    out.order = 2.5;
    out.validity_radius = pt.validity_radius();
    return out;
}

void fit_c_ratio(rational_point& pt, const eval_config& cfg) {
    if (pt.klass != point_class::corner)
        throw class_error("fit_c_ratio: spiral points carry no corner expansion");
    if (!pt.e_fit) fit_eighth_root(pt, cfg);
    const double qt = static_cast<double>(pt.q_tilde);
    const time_point base = pt.tp();

    for (int side = 0; side < 2; ++side) {
        double sign = side == 0 ? 1.0 : -1.0;
        // Offsets in the upper part of the validity range, where the
        // second-order term stands out against the order-5/2 residual.
        std::vector<double> hs;
        std::vector<complex> measured;
        for (int j = 0; j < 6; ++j) {
            double h = sign * pt.validity_radius() * 0.45 * std::pow(0.56, j);
            double scale = 4.0 * std::sqrt(2.0 / k_pi) * std::pow(qt * std::abs(h), 1.5);
            complex inc = phi_increment(base, h, probe_cfg(cfg, scale, 1e-3));
            hs.push_back(h);
            measured.push_back(inc - corner_term1(pt, h));
        }
        auto sse = [&](double c_ratio) {
            double acc = 0.0;
            for (std::size_t j = 0; j < hs.size(); ++j) {
                complex model = corner_term2(pt, hs[j], c_ratio, cfg.with_tol(1e-8));
                double scale = std::pow(qt * std::abs(hs[j]), 1.5);
                acc += std::norm((measured[j] - model) / scale);
            }
            return acc;
        };
        // coarse grid scan, then golden-section refinement
        double best_c = 2.5, best = sse(2.5);
        for (double c = 1.0; c <= 4.0; c += 0.02) {
            double v = sse(c);
            if (v < best) {
                best = v;
                best_c = c;
            }
        }
        double lo = std::max(1.0, best_c - 0.02), hi = std::min(4.0, best_c + 0.02);
        const double gr = 0.61803398874989484820;
        double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
        double fa = sse(a), fb = sse(b);
        for (int it = 0; it < 40; ++it) {
            if (fa < fb) {
                hi = b;
                b = a;
                fb = fa;
                a = hi - gr * (hi - lo);
                fa = sse(a);
            } else {
                lo = a;
                a = b;
                fa = fb;
                b = lo + gr * (hi - lo);
                fb = sse(b);
            }
        }
        double c_est = 0.5 * (lo + hi);
        (side == 0 ? pt.c_ratio_plus : pt.c_ratio_minus) = c_est;
    }
}

} // namespace rndf
