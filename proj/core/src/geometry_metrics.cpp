#include "rndf/geometry_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "rndf/errors.hpp"
#include "rndf/series.hpp"
#include "rndf/support.hpp"
#include "rndf/time_point.hpp"

namespace rndf {

namespace {

constexpr double k_two_pi = 6.283185307179586476925286766559;

bool is_pow2(std::size_t v) { return v >= 2 && (v & (v - 1)) == 0; }

} // namespace

void polyline::validate() const {
    if (params.size() != points.size())
        throw std::invalid_argument("polyline: params/points length mismatch");
    for (std::size_t i = 1; i < params.size(); ++i)
        if (!(params[i] > params[i - 1]))
            throw std::invalid_argument("polyline: params must be strictly increasing");
}

polyline sample_curve(double a, double b, std::size_t n, const eval_config& cfg) {
    if (!(a < b)) throw std::invalid_argument("sample_curve: need a < b");
    if (n < 2) throw std::invalid_argument("sample_curve: need n >= 2");
    cfg.validate();

    polyline poly;
    poly.params.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        poly.params[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);

    const double period = 1.0 / k_two_pi;
    // FFT fast path: [0, period] or [0, 2*period] with pow2 panels per period
    for (int periods = 1; periods <= 2; ++periods) {
        if (a != 0.0 || cfg.tol < 1e-9) continue;
        std::size_t segs = n - 1;
        if (segs % static_cast<std::size_t>(periods) != 0) continue;
        std::size_t per = segs / static_cast<std::size_t>(periods);
        if (!is_pow2(per)) continue;
        if (std::abs(b - periods * period) > 1e-15) continue;
        auto grid = phi_period_grid(per + 1, cfg);
        poly.points.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            // phi(t) = i t + P(x) with P one-periodic in x = 2 pi t:
            // reconstruct from the first-period value at the same phase
            std::size_t j = i % per;
            double t_first = period * static_cast<double>(j) / static_cast<double>(per);
            poly.points[i] = grid[j] + complex{0.0, poly.params[i] - t_first};
        }
        return poly;
    }

    poly.points.resize(n);
    run_parallel(n, [&](std::size_t i) {
        poly.points[i] = eval_phi(time_point::from_t(poly.params[i]), cfg);
    });
    return poly;
}

namespace {

std::uint64_t pack_cell(double re, double im, double eps) {
    auto fold = [&](double v) {
        double c = std::floor(v / eps);
        return static_cast<std::uint64_t>(static_cast<std::int64_t>(c) + (1LL << 31)) &
               0xffffffffULL;
    };
    return (fold(re) << 32) | fold(im);
}

} // namespace

std::int64_t box_count(const polyline& poly, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("box_count: eps must be > 0");
    poly.validate();
    std::vector<std::uint64_t> cells;
    cells.reserve(poly.points.size() / 4 + 16);
    std::uint64_t prev = ~0ULL;
    for (complex z : poly.points) {
        std::uint64_t c = pack_cell(z.real(), z.imag(), eps);
        if (c != prev) cells.push_back(c);
        prev = c;
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return static_cast<std::int64_t>(cells.size());
}

dimension_fit dimension_estimate(const polyline& poly, double eps_lo, double eps_hi, int levels) {
    if (!(eps_lo > 0.0 && eps_lo < eps_hi))
        throw std::invalid_argument("dimension_estimate: need 0 < eps_lo < eps_hi");
    if (levels < 2) throw std::invalid_argument("dimension_estimate: need >= 2 levels");
    poly.validate();
    double max_gap = 0.0;
    for (std::size_t i = 1; i < poly.points.size(); ++i)
        max_gap = std::max(max_gap, std::abs(poly.points[i] - poly.points[i - 1]));
    if (max_gap >= eps_lo / 4.0)
        throw resolution_error("dimension_estimate: polyline gaps exceed eps_lo/4 (max gap " +
                               std::to_string(max_gap) + ")");

    dimension_fit fit;
    std::vector<double> xs, ys;
    for (int i = 0; i < levels; ++i) {
        double f = levels == 1 ? 0.0 : static_cast<double>(i) / (levels - 1);
        double eps = eps_hi * std::pow(eps_lo / eps_hi, f);
        std::int64_t nboxes = box_count(poly, eps);
        fit.eps_ladder.push_back(eps);
        fit.counts.push_back(nboxes);
        xs.push_back(std::log(1.0 / eps));
        ys.push_back(std::log(static_cast<double>(nboxes)));
    }
    double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double r = ys[i] - (intercept + fit.slope * xs[i]);
        ss_res += r * r;
    }
    double var = xs.size() > 2 ? ss_res / (n - 2.0) : 0.0;
    fit.std_error = std::sqrt(var * n / denom);
    return fit;
}

polyline segment_polyline(std::size_t n) {
    polyline p;
    p.params.resize(n);
    p.points.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(n - 1);
        p.params[i] = t;
        p.points[i] = complex{t, 0.0};
    }
    return p;
}

polyline filled_square_polyline(std::size_t side) {
    polyline p;
    std::size_t n = side * side;
    p.params.reserve(n);
    p.points.reserve(n);
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) {
            std::size_t cc = (r % 2 == 0) ? c : side - 1 - c; // boustrophedon
            p.params.push_back(static_cast<double>(p.params.size()));
            // cell-centered samples keep dyadic grids free of edge cells
            p.points.emplace_back((static_cast<double>(cc) + 0.5) / static_cast<double>(side),
                                  (static_cast<double>(r) + 0.5) / static_cast<double>(side));
        }
    }
    return p;
}

polyline koch_polyline(int level) {
    if (level < 0 || level > 12) throw std::invalid_argument("koch_polyline: level out of range");
    std::vector<complex> pts{complex{0.0, 0.0}, complex{1.0, 0.0}};
    const complex rot_p = std::polar(1.0, M_PI / 3.0);
    const complex rot_m = std::polar(1.0, -M_PI / 3.0);
    for (int l = 0; l < level; ++l) {
        std::vector<complex> next;
        next.reserve((pts.size() - 1) * 4 + 1);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            complex a = pts[i], b = pts[i + 1];
            complex d = (b - a) / 3.0;
            next.push_back(a);
            next.push_back(a + d);
            next.push_back(a + d + d * rot_p);
            next.push_back(a + 2.0 * d);
        }
        next.push_back(pts.back());
        pts = std::move(next);
        (void)rot_m;
    }
    polyline p;
    p.points = std::move(pts);
    p.params.resize(p.points.size());
    for (std::size_t i = 0; i < p.params.size(); ++i)
        p.params[i] = static_cast<double>(i);
    return p;
}

} // namespace rndf
