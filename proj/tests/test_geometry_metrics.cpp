#include "doctest.h"

#include <cmath>

#include "rndf/errors.hpp"
#include "rndf/geometry_metrics.hpp"
#include "rndf/series.hpp"

using namespace rndf;

namespace {
constexpr double pi = 3.14159265358979323846;
const double period = 1.0 / (2.0 * pi);
}

TEST_CASE("sample_curve basics") {
    auto two = sample_curve(0.0, 0.5, 2, eval_config{}.with_tol(1e-6));
    REQUIRE(two.points.size() == 2);
    CHECK(two.params[0] == 0.0);
    CHECK(two.params[1] == 0.5);
    CHECK(std::abs(two.points[0]) <= 1e-6);

    // refinement nesting: params at n are a subset of params at 2n-1
    auto coarse = sample_curve(0.1, 0.3, 9, eval_config{}.with_tol(1e-5));
    auto fine = sample_curve(0.1, 0.3, 17, eval_config{}.with_tol(1e-5));
    for (std::size_t i = 0; i < coarse.params.size(); ++i)
        CHECK(coarse.params[i] == fine.params[2 * i]);

    // max consecutive gap decreases under refinement
    auto gap = [](const polyline& p) {
        double g = 0.0;
        for (std::size_t i = 1; i < p.points.size(); ++i)
            g = std::max(g, std::abs(p.points[i] - p.points[i - 1]));
        return g;
    };
    double g1 = gap(sample_curve(0.0, period, (1 << 10) + 1, eval_config{}.with_tol(1e-7)));
    double g2 = gap(sample_curve(0.0, period, (1 << 12) + 1, eval_config{}.with_tol(1e-7)));
    double g3 = gap(sample_curve(0.0, period, (1 << 14) + 1, eval_config{}.with_tol(1e-7)));
    CHECK(g2 < g1);
    CHECK(g3 < g2);

    CHECK_THROWS_AS(sample_curve(1.0, 0.0, 8, eval_config{}), std::invalid_argument);
    CHECK_THROWS_AS(sample_curve(0.0, 1.0, 1, eval_config{}), std::invalid_argument);
}

TEST_CASE("sample_curve fast path matches pointwise evaluation") {
    eval_config cfg = eval_config{}.with_tol(1e-8);
    std::size_t n = (1 << 8) + 1;
    auto fast = sample_curve(0.0, period, n, cfg);
    for (std::size_t i : {std::size_t{3}, std::size_t{128}, std::size_t{256}}) {
        complex direct = eval_phi(time_point::from_t(fast.params[i]), cfg);
        CHECK(std::abs(fast.points[i] - direct) <= 1e-7);
    }
    // two-period span
    auto two = sample_curve(0.0, 2.0 * period, 2 * (1 << 8) + 1, cfg);
    complex direct = eval_phi(time_point::from_t(two.params[300]), cfg);
    CHECK(std::abs(two.points[300] - direct) <= 1e-7);
}

TEST_CASE("box_count on elementary sets") {
    polyline dot;
    dot.params = {0.0};
    dot.points = {complex{0.37, 0.41}};
    CHECK(box_count(dot, 0.1) == 1);
    CHECK(box_count(dot, 10.0) == 1);

    auto seg = segment_polyline(4096);
    std::int64_t boxes = box_count(seg, 0.1);
    CHECK(boxes >= 10);
    CHECK(boxes <= 11);

    // dyadic coarsening with the fixed anchor is monotone
    auto curve = sample_curve(0.0, period, (1 << 12) + 1, eval_config{}.with_tol(1e-7));
    double eps = 1.0 / 1024.0;
    std::int64_t prev = box_count(curve, eps);
    for (int i = 0; i < 4; ++i) {
        eps *= 2.0;
        std::int64_t next = box_count(curve, eps);
        CHECK(next <= prev);
        prev = next;
    }
    CHECK_THROWS_AS(box_count(curve, 0.0), std::invalid_argument);
}

TEST_CASE("dimension_estimate calibration: segment, square, Koch") {
    auto seg = segment_polyline(1 << 16);
    auto fit = dimension_estimate(seg, 1e-3, 1e-1, 17);
    CHECK(std::abs(fit.slope - 1.0) <= 0.05);
    CHECK(fit.std_error < 0.05);

    auto square = filled_square_polyline(1024);
    auto fit2 = dimension_estimate(square, 1.0 / 128.0, 1.0 / 8.0, 9);
    CHECK(std::abs(fit2.slope - 2.0) <= 0.05);

    auto koch = koch_polyline(9);
    auto fit3 = dimension_estimate(koch, 4e-4, 2e-2, 14);
    CHECK(std::abs(fit3.slope - std::log(4.0) / std::log(3.0)) <= 0.07);

    // resolution discipline: gaps must be finer than eps_lo/4
    auto coarse = segment_polyline(64);
    CHECK_THROWS_AS(dimension_estimate(coarse, 1e-3, 1e-1, 8), resolution_error);
}

TEST_CASE("periodic tiling: second-period boxes match after translation") {
    eval_config cfg = eval_config{}.with_tol(1e-9);
    std::size_t per = 1 << 14;
    auto both = sample_curve(0.0, 2.0 * period, 2 * per + 1, cfg);
    polyline first, second;
    for (std::size_t i = 0; i <= per; ++i) {
        first.params.push_back(both.params[i]);
        first.points.push_back(both.points[i]);
        second.params.push_back(both.params[per + i]);
        second.points.push_back(both.points[per + i] - complex{0.0, period});
    }
    double eps = 1.0 / 1024.0;
    CHECK(box_count(first, eps) == box_count(second, eps));
}

TEST_CASE("phi dimension estimate sits inside the theoretical bracket") {
    // light version of the acceptance run: fewer points, coarser ladder
    std::size_t n = (1 << 20) + 1;
    auto curve = sample_curve(0.0, period, n, eval_config{}.with_tol(1e-8));
    auto fit = dimension_estimate(curve, 2e-3, 2e-2, 9);
    CHECK(fit.slope >= 1.0);
    CHECK(fit.slope <= 1.45);
}
