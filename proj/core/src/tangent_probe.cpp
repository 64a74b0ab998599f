#include "rndf/tangent_probe.hpp"

#include <algorithm>
#include <cmath>

#include "rndf/errors.hpp"
#include "rndf/rational_points.hpp"
#include "rndf/scaling_limits.hpp"
#include "rndf/series.hpp"
#include "rndf/support.hpp"

namespace rndf {

namespace {

constexpr double k_pi = 3.14159265358979323846;
constexpr double k_two_pi = 2.0 * k_pi;

double max_pairwise_angle(const std::vector<complex>& dirs, std::size_t from) {
    double worst = 0.0;
    for (std::size_t i = from; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
            worst = std::max(worst, circular_distance(dirs[i], dirs[j]));
    return worst;
}

double largest_gap(const std::vector<complex>& dirs) {
    if (dirs.size() < 2) return k_two_pi;
    std::vector<double> args;
    args.reserve(dirs.size());
    for (complex d : dirs) args.push_back(std::arg(d));
    std::sort(args.begin(), args.end());
    double gap = args.front() + k_two_pi - args.back();
    for (std::size_t i = 1; i < args.size(); ++i) gap = std::max(gap, args[i] - args[i - 1]);
    return gap;
}

// normalized mean direction of the tail
std::optional<complex> mean_direction(const std::vector<complex>& dirs, std::size_t from) {
    complex acc{0.0, 0.0};
    for (std::size_t i = from; i < dirs.size(); ++i) acc += dirs[i];
    double n = std::abs(acc);
    if (n == 0.0) return std::nullopt;
    return acc / n;
}

// One adaptively-tolerant direction: a cheap first look, a tighter pass when
// the increment might be a zero-increment signal, and one refinement so the
// direction error lands near target_err.
std::optional<complex> one_direction(const increment_fn& f, double r, const eval_config& cfg,
                                     double target_err) {
    double floor_tol = std::clamp(cfg.tol, 2e-10, 1e-8);
    double tol = std::max(cfg.tol, 1e-6); // cheap first look
    complex inc = f(r, cfg.with_tol(tol));
    double mag = std::abs(inc);
    if (mag <= 10.0 * tol && tol > floor_tol) {
        tol = floor_tol;
        inc = f(r, cfg.with_tol(tol));
        mag = std::abs(inc);
    }
    if (mag <= 10.0 * tol) return std::nullopt;
    double want = std::clamp(target_err * mag / 3.0, 2e-10, tol);
    if (want < tol) {
        inc = f(r, cfg.with_tol(want));
        mag = std::abs(inc);
        if (mag <= 10.0 * want) return std::nullopt;
    }
    return inc / mag;
}

probe_report collect(const increment_fn& f, const std::vector<double>& offsets,
                     approach_side side, const eval_config& cfg, double target_err) {
    probe_report rep;
    double sgn = side == approach_side::right ? 1.0 : -1.0;
    // the dispersion verdict reads the tail, so only tail offsets need the
    // tight direction tolerance
    std::size_t n = offsets.size();
    std::size_t tail_start = n - std::min(n, std::max<std::size_t>(3, n / 3));
    for (std::size_t i = 0; i < n; ++i) {
        double err = i >= tail_start ? target_err : 10.0 * target_err;
        auto d = one_direction(f, sgn * offsets[i], cfg, err);
        if (!d) {
            ++rep.skipped;
            continue;
        }
        rep.directions.push_back(*d);
    }
    if (rep.directions.empty() && !offsets.empty())
        throw degenerate_error("probe: every offset produced a zero increment");
    std::size_t tail_from =
        rep.directions.size() - std::min(rep.directions.size(),
                                         std::max<std::size_t>(3, rep.directions.size() / 3));
    rep.dispersion = max_pairwise_angle(rep.directions, tail_from);
    rep.max_gap = largest_gap(rep.directions);
    if (rep.dispersion < 1e-2) rep.limit_candidate = mean_direction(rep.directions, tail_from);
    return rep;
}

} // namespace

cone make_cone(complex vertex, complex direction, double half_aperture, bool double_sided) {
    double n = std::abs(direction);
    if (n == 0.0) throw std::invalid_argument("make_cone: direction must be nonzero");
    if (!(half_aperture > 0.0 && half_aperture < k_pi))
        throw std::invalid_argument("make_cone: half aperture must lie in (0, pi)");
    return cone{vertex, direction / n, half_aperture, double_sided};
}

bool cone_member(const cone& c, complex z) {
    complex u = z - c.vertex;
    double n = std::abs(u);
    if (n == 0.0) return true;
    double along = (u.real() * c.direction.real() + u.imag() * c.direction.imag()) / n;
    double cos_ap = std::cos(c.half_aperture);
    if (c.double_sided) return std::abs(along) >= cos_ap - 1e-12;
    return along >= cos_ap - 1e-12;
}

void offset_schedule::validate() const {
    if (!(start > 0.0)) throw std::invalid_argument("offset_schedule: start must be > 0");
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("offset_schedule: ratio must lie in (0,1)");
    if (count < 1) throw std::invalid_argument("offset_schedule: count must be >= 1");
}

std::vector<double> offset_schedule::offsets() const {
    validate();
    std::vector<double> out(static_cast<std::size_t>(count));
    double r = start;
    for (auto& o : out) {
        o = r;
        r *= ratio;
    }
    return out;
}

increment_fn phi_increment_at(const time_point& t) {
    return [t](double r, const eval_config& cfg) { return phi_increment(t, r, cfg); };
}

std::optional<complex> secant_direction(const time_point& t, double r, approach_side side,
                                        const eval_config& cfg) {
    if (!(r > 0.0)) throw std::invalid_argument("secant_direction: r must be > 0");
    double sgn = side == approach_side::right ? 1.0 : -1.0;
    complex inc = phi_increment(t, sgn * r, cfg);
    double mag = std::abs(inc);
    if (mag <= 10.0 * cfg.tol) return std::nullopt;
    return inc / mag;
}

probe_report probe_limit(const time_point& t, const offset_schedule& sched,
                         const eval_config& cfg) {
    return probe_limit(phi_increment_at(t), sched, cfg);
}

probe_report probe_limit(const increment_fn& f, const offset_schedule& sched,
                         const eval_config& cfg) {
    return collect(f, sched.offsets(), sched.side, cfg, 1e-3);
}

probe_report angular_coverage(const time_point& t, const offset_schedule& sched,
                              const eval_config& cfg) {
    if (sched.count < 100)
        throw std::invalid_argument("angular_coverage: schedule count must be >= 100");
    return collect(phi_increment_at(t), sched.offsets(), sched.side, cfg, 2e-2);
}

probe_report angular_coverage(const increment_fn& f, const std::vector<double>& offsets,
                              approach_side side, const eval_config& cfg) {
    if (offsets.size() < 100)
        throw std::invalid_argument("angular_coverage: need at least 100 offsets");
    return collect(f, offsets, side, cfg, 2e-2);
}

std::vector<double> spiral_sweep_offsets(std::int64_t q_tilde, int count) {
    if (count < 1) throw std::invalid_argument("spiral_sweep_offsets: count must be >= 1");
    const double period = 32.0 * k_pi * static_cast<double>(q_tilde * q_tilde);
    // Z(q~^2/u) is periodic in u with the above period: sweeping u across
    // one period realizes every direction. Two depth bands (u ~ P and
    // u ~ 8P) witness the sweep repeating as the offsets shrink.
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    int shallow = (4 * count) / 5;
    int deep = count - shallow;
    for (int j = 0; j < shallow; ++j)
        out.push_back(1.0 / (period * (1.0 + (j + 0.5) / shallow)));
    for (int j = 0; j < deep; ++j)
        out.push_back(1.0 / (period * 8.0 * (1.0 + (j + 0.5) / deep)));
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

probe_report merge_reports(const probe_report& a, const probe_report& b) {
    probe_report out;
    out.directions = a.directions;
    out.directions.insert(out.directions.end(), b.directions.begin(), b.directions.end());
    out.skipped = a.skipped + b.skipped;
    out.dispersion = max_pairwise_angle(out.directions, 0);
    out.max_gap = largest_gap(out.directions);
    return out;
}

std::string to_string(verdict_kind v) {
    switch (v) {
        case verdict_kind::corner_mismatch: return "CornerMismatch";
        case verdict_kind::spiral_sweep: return "SpiralSweep";
        case verdict_kind::irrational_arc: return "IrrationalArc";
    }
    return "?";
}

namespace {

certificate corner_certificate(const rational_point& pt, const eval_config& cfg) {
    const double qt2 = static_cast<double>(pt.q_tilde) * static_cast<double>(pt.q_tilde);
    offset_schedule sched;
    sched.start = 1e-4 / qt2;
    sched.count = 9;
    time_point base = pt.tp();

    sched.side = approach_side::right;
    probe_report right = probe_limit(base, sched, cfg);
    sched.side = approach_side::left;
    probe_report left = probe_limit(base, sched, cfg);
    if (!right.limit_candidate || !left.limit_candidate)
        throw inconclusive_error("corner probe: side limits did not stabilize");

    double diff = circular_distance(*right.limit_candidate, *left.limit_candidate);
    // a tangent needs diametrically opposite side limits; rule it out only
    // when the mismatch clears pi by a margin far above the dispersion
    if (std::abs(diff - k_pi) <= 0.1)
        throw inconclusive_error("corner probe: side limits too close to opposite");
    if (std::abs(diff - k_pi / 2.0) > 2e-2)
        throw inconclusive_error("corner probe: side-limit angle not the expected pi/2");

    certificate cert;
    cert.verdict = verdict_kind::corner_mismatch;
    cert.angle_diff = diff;
    cert.right_dir = *right.limit_candidate;
    cert.left_dir = *left.limit_candidate;
    cert.dispersion_right = right.dispersion;
    cert.dispersion_left = left.dispersion;
    rational_point fitted = pt;
    cert.e_fit = fit_eighth_root(fitted, cfg);
    return cert;
}

certificate spiral_certificate(const rational_point& pt, const eval_config& cfg) {
    auto offsets = spiral_sweep_offsets(pt.q_tilde, 500);
    increment_fn f = phi_increment_at(pt.tp());
    probe_report right = angular_coverage(f, offsets, approach_side::right, cfg);
    probe_report left = angular_coverage(f, offsets, approach_side::left, cfg);
    if (right.max_gap >= 0.5 || left.max_gap >= 0.5)
        throw inconclusive_error("spiral probe: angular coverage too sparse");
    certificate cert;
    cert.verdict = verdict_kind::spiral_sweep;
    cert.max_gap_right = right.max_gap;
    cert.max_gap_left = left.max_gap;
    return cert;
}

// As many certified partial quotients as the digits allow, up to cap.
cf_expansion expand_as_far_as_possible(const time_point& t, int cap) {
    cf_expansion best;
    best.terminated = false;
    for (int n = 1; n <= cap; ++n) {
        try {
            best = cf_expand(t, n);
        } catch (const precision_exhausted&) {
            break;
        }
        if (best.terminated) break;
    }
    return best;
}

struct irrational_probe_plan {
    convergent conv;
    std::vector<double> s_values;
    std::string regime;
    std::int64_t window_m = 0;
};

irrational_probe_plan plan_irrational(const time_point& t, const eval_config& cfg) {
    const double c_grid = 2.5;
    auto cf = expand_as_far_as_possible(t, 48);
    if (cf.partial_quotients.empty() || cf.terminated)
        throw inconclusive_error("irrational probe: target resolves to a rational at the "
                                 "available precision");
    auto all = convergents(cf, t);
    auto odd = odd_denominator_subsequence(all);
    // single-side subsequence: prefer the side with the deepest feasible run
    std::vector<convergent> usable;
    for (const auto& cv : odd) {
        if (cv.exact || !cv.fits_int64()) continue;
        if (cv.q_int64() < 3) continue;
        if (!(cv.K > 1e-12 && cv.K < 1.0)) continue;
        usable.push_back(cv);
    }
    if (usable.empty()) throw inconclusive_error("irrational probe: no usable odd convergents");

    // deepest convergent whose increments stay resolvable: direction scale
    // ~ q^{-3/2} |dH|; require the probe tolerance to stay above ~2e-10.
    // Probing one convergent keeps us on its (single-side, odd-q)
    // subsequence by construction.
    (void)cfg;
    for (auto it = usable.rbegin(); it != usable.rend(); ++it) {
        const auto& cv = *it;
        double q = static_cast<double>(cv.q_int64());
        double s_target = cv.K / k_two_pi;
        irrational_probe_plan plan;
        plan.conv = cv;
        bool small_window = false;
        std::int64_t m = 0;
        try {
            auto w = locate_window(cv.K, c_grid);
            m = w.m;
            small_window = m >= 4;
        } catch (const range_error&) {
            small_window = false;
        }
        if (small_window) {
            plan.regime = "K-small";
            plan.window_m = m;
            for (int j = 1; j <= 12; ++j)
                plan.s_values.push_back(
                    grid_index_s(c_grid, static_cast<double>(m) + 1.0 + j / 13.0));
            // predicted increment scale via the copy size (|G| ~ 8)
            double s_ref = grid_index_s(c_grid, static_cast<double>(m) + 1.5);
            double dh_est = 8.0 * std::pow(s_ref, 1.5);
            double inc_est = 0.564 * std::pow(q, -1.5) * dh_est;
            if (3e-3 * inc_est < 2e-10) continue; // too deep to resolve: back off
        } else {
            plan.regime = "K-positive";
            // probe points between t_n and t_rho across the whole admissible
            // window: the chord direction arg(H(K/2pi) - H(Q/2pi)) sweeps a
            // wide arc as Q climbs toward K
            for (double f : {0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.83, 0.90, 0.94, 0.97})
                plan.s_values.push_back(s_target * f);
            double dh_est = 0.3 * std::sqrt(0.03 * s_target);
            double inc_est = 0.564 * std::pow(q, -1.5) * dh_est;
            if (3e-3 * inc_est < 2e-10) continue;
        }
        return plan;
    }
    throw inconclusive_error("irrational probe: no convergent resolvable at working precision");
}

certificate irrational_certificate(const time_point& t, const eval_config& cfg) {
    auto plan = plan_irrational(t, cfg);
    const auto& cv = plan.conv;
    const double q = static_cast<double>(cv.q_int64());
    const double side_sign = cv.side == approach_side::left ? 1.0 : -1.0;
    const double s_target = cv.K / k_two_pi;

    std::vector<complex> dirs(plan.s_values.size(), complex{0.0, 0.0});
    run_parallel(plan.s_values.size(), [&](std::size_t i) {
        double s = plan.s_values[i];
        // probe point t_n + side * s/q^2; offset from t itself is
        // side * (s - K/(2 pi))/q^2 in t units
        double eps_t = side_sign * (s - s_target) / (q * q);
        double dh_est = std::min(std::abs(std::sqrt(s_target) - std::sqrt(s)) +
                                     6.6 * (std::pow(s_target, 1.5) + std::pow(s, 1.5)),
                                 0.3 * std::sqrt(std::abs(s_target - s)));
        double inc_est = 0.564 * std::pow(q, -1.5) * dh_est;
        eval_config probe = cfg.with_tol(std::clamp(3e-3 * inc_est, 1e-10, 1e-8));
        complex inc = phi_increment(t, eps_t, probe);
        double mag = std::abs(inc);
        if (mag > 10.0 * probe.tol) dirs[i] = inc / mag;
    });
    dirs.erase(std::remove(dirs.begin(), dirs.end(), complex{0.0, 0.0}), dirs.end());
    // distinct directions: dedupe within 1e-3 rad
    std::vector<complex> distinct;
    for (complex d : dirs) {
        bool fresh = true;
        for (complex e : distinct)
            if (circular_distance(d, e) < 1e-3) fresh = false;
        if (fresh) distinct.push_back(d);
    }
    double arc = k_two_pi - largest_gap(distinct);
    if (distinct.size() < 10 || arc < 0.3)
        throw inconclusive_error("irrational probe: accumulation arc not resolved (" +
                                 std::to_string(distinct.size()) + " directions, arc " +
                                 std::to_string(arc) + ")");
    certificate cert;
    cert.verdict = verdict_kind::irrational_arc;
    cert.arc_width = arc;
    cert.n_directions = static_cast<int>(distinct.size());
    cert.q_used = cv.q_int64();
    cert.K_used = cv.K;
    cert.window_m = plan.window_m;
    cert.regime = plan.regime;
    return cert;
}

} // namespace

certificate no_tangent_certificate(const time_point& t, const eval_config& cfg) {
    cfg.validate();
    if (t.is_rational()) {
        std::int64_t q = t.q();
        std::int64_t p = ((t.p() % q) + q) % q; // reduce by quasi-periodicity
        rational_point pt = classify(p, q);
        if (pt.klass == point_class::corner) return corner_certificate(pt, cfg);
        return spiral_certificate(pt, cfg);
    }
    if (!t.digits().empty()) return irrational_certificate(t, cfg);
    // A bare double is an exact dyadic rational; classify it if it is small
    // enough to probe, otherwise refuse.
    auto cf = expand_as_far_as_possible(t, 48);
    if (cf.terminated) {
        auto cv = convergents(cf, t);
        if (!cv.empty() && cv.back().fits_int64() && cv.back().q_int64() <= 1000000) {
            std::int64_t q = cv.back().q_int64();
            std::int64_t p = ((cv.back().p_int64() % q) + q) % q;
            rational_point pt = classify(p, q);
            if (pt.klass == point_class::corner) return corner_certificate(pt, cfg);
            return spiral_certificate(pt, cfg);
        }
    }
    throw inconclusive_error("no_tangent_certificate: double input resolves to an impractically "
                             "deep rational; pass digits for irrational targets");
}

namespace {

double hull_diameter(std::vector<complex> pts) {
    if (pts.size() < 2) return 0.0;
    std::sort(pts.begin(), pts.end(), [](complex a, complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return 0.0;
    auto cross = [](complex o, complex a, complex b) {
        return (a.real() - o.real()) * (b.imag() - o.imag()) -
               (a.imag() - o.imag()) * (b.real() - o.real());
    };
    std::vector<complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k > 1 ? k - 1 : k);
    double best = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j)
            best = std::max(best, std::abs(hull[i] - hull[j]));
    return best;
}

} // namespace

double segment_content(const std::function<complex(double)>& f, double a, double b,
                       int n_samples) {
    if (!(a < b)) throw std::invalid_argument("segment_content: need a < b");
    if (n_samples < 2) throw std::invalid_argument("segment_content: need n_samples >= 2");
    int n = n_samples;
    double prev = -1.0;
    for (int round = 0; round < 8; ++round) {
        std::vector<complex> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pts.push_back(f(a + (b - a) * static_cast<double>(i) / (n - 1)));
        double d = hull_diameter(pts);
        if (prev >= 0.0 && std::abs(d - prev) < 1e-4) return d;
        prev = d;
        if (n > (1 << 21)) break;
        n = 2 * n - 1;
    }
    return prev;
}

double segment_content_phi(double a, double b, int n_samples, const eval_config& cfg) {
    eval_config sample = cfg.with_tol(std::max(cfg.tol, 1e-7));
    return segment_content(
        [&](double t) { return eval_phi(time_point::from_t(t), sample); }, a, b, n_samples);
}

content_bracket ball_content_bounds(const time_point& t, double r, const eval_config& cfg) {
    if (!(r > 0.0)) throw std::invalid_argument("ball_content_bounds: r must be > 0");
    // tight tolerance only where the boundary crossing is pinned down;
    // interior samples just need diameter-level accuracy
    eval_config e = cfg.with_tol(std::clamp(1e-5 * r, 1e-9, cfg.tol));
    eval_config coarse = cfg.with_tol(std::clamp(1e-3 * r, 1e-9, cfg.tol));
    const complex center = eval_phi(t, e);
    const double period = 1.0 / k_two_pi;

    // find an escaping parameter on either side
    auto escape = [&](double sgn) -> std::optional<double> {
        double s = std::min(period, std::max(1e-12, 2.0 * r * r));
        for (int i = 0; i < 200; ++i) {
            if (std::abs(phi_increment(t, sgn * s, coarse)) > r * (1.0 + 5e-3)) return s;
            s *= 1.5;
            if (s > period) return std::nullopt;
        }
        return std::nullopt;
    };
    auto esc_r = escape(1.0);
    auto esc_l = escape(-1.0);
    if (!esc_r && !esc_l)
        throw inconclusive_error("ball_content_bounds: no sampled parameter escapes the ball");

    std::vector<complex> inside{center};
    auto gather = [&](double sgn, std::optional<double> esc) {
        if (!esc) return;
        // bisect the first crossing
        double lo = 0.0, hi = *esc;
        for (int i = 0; i < 34; ++i) {
            double mid = 0.5 * (lo + hi);
            if (std::abs(phi_increment(t, sgn * mid, e)) > r)
                hi = mid;
            else
                lo = mid;
        }
        inside.push_back(center + phi_increment(t, sgn * lo, e));
        for (int i = 1; i <= 128; ++i) {
            double s = lo * static_cast<double>(i) / 128.0;
            complex z = center + phi_increment(t, sgn * s, coarse);
            if (std::abs(z - center) <= r) inside.push_back(z);
        }
    };
    gather(1.0, esc_r);
    gather(-1.0, esc_l);

    content_bracket out;
    out.lo = r;
    out.hi = 2.0 * r;
    out.estimate = hull_diameter(inside);
    return out;
}

} // namespace rndf
