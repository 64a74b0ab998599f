#include "doctest.h"

#include <cmath>
#include <random>

#include "rndf/errors.hpp"
#include "rndf/series.hpp"
#include "rndf/tangent_probe.hpp"

using namespace rndf;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("cone membership") {
    cone c = make_cone(complex{0.0, 0.0}, complex{1.0, 0.0}, pi / 4.0, false);
    CHECK(cone_member(c, complex{0.0, 0.0})); // vertex
    CHECK(cone_member(c, complex{1.0, 0.0}));
    // boundary ray at exactly the half aperture
    CHECK(cone_member(c, complex{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}));
    CHECK(!cone_member(c, complex{0.0, 1.0}));
    CHECK(!cone_member(c, complex{-1.0, 0.0})); // opposite ray excluded
    cone d = make_cone(complex{0.0, 0.0}, complex{1.0, 0.0}, pi / 4.0, true);
    CHECK(cone_member(d, complex{-1.0, 0.0})); // double cone includes it
    // monotone in aperture, and single subset of double
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0), ap(0.05, 2.9);
    for (int i = 0; i < 3000; ++i) {
        complex z{u(rng), u(rng)};
        double a1 = ap(rng), a2 = ap(rng);
        if (a1 > a2) std::swap(a1, a2);
        cone narrow = make_cone(complex{0.1, -0.2}, complex{0.6, 0.8}, a1, false);
        cone wide = narrow;
        wide.half_aperture = a2;
        if (cone_member(narrow, z)) CHECK(cone_member(wide, z));
        cone dbl = narrow;
        dbl.double_sided = true;
        if (cone_member(narrow, z)) CHECK(cone_member(dbl, z));
    }
    CHECK_THROWS_AS(make_cone(complex{0, 0}, complex{0, 0}, 1.0, false), std::invalid_argument);
    CHECK_THROWS_AS(make_cone(complex{0, 0}, complex{1, 0}, 3.5, false), std::invalid_argument);
}

TEST_CASE("secant directions at the origin match the corner structure") {
    eval_config cfg = eval_config{}.with_tol(1e-9);
    auto right = secant_direction(time_point::rational(0, 1), 1e-8, approach_side::right, cfg);
    REQUIRE(right.has_value());
    CHECK(circular_distance(*right, complex{1.0, 1.0} / std::sqrt(2.0)) <= 1e-3);
    auto left = secant_direction(time_point::rational(0, 1), 1e-8, approach_side::left, cfg);
    REQUIRE(left.has_value());
    CHECK(circular_distance(*left, complex{1.0, -1.0} / std::sqrt(2.0)) <= 1e-3);
    CHECK(std::abs(std::abs(*right) - 1.0) <= 1e-12);
}

TEST_CASE("probe_limit stabilizes at corners and not at spirals") {
    offset_schedule sched;
    sched.start = 1e-4 / 9.0;
    sched.count = 9;
    sched.side = approach_side::right;
    probe_report corner = probe_limit(time_point::rational(1, 3), sched);
    REQUIRE(corner.limit_candidate.has_value());
    CHECK(corner.dispersion < 1e-2);

    offset_schedule sp;
    sp.start = 1e-3;
    sp.ratio = 0.5;
    sp.count = 24;
    probe_report spiral = probe_limit(time_point::rational(1, 2), sp);
    CHECK(!spiral.limit_candidate.has_value());
    CHECK(spiral.dispersion > 1.0);
}

TEST_CASE("probe_limit on a constant curve signals degeneracy") {
    increment_fn constant = [](double, const eval_config&) { return complex{0.0, 0.0}; };
    offset_schedule sched;
    CHECK_THROWS_AS(probe_limit(constant, sched), degenerate_error);
}

TEST_CASE("angular coverage at spirals fills the circle") {
    auto offsets = spiral_sweep_offsets(1, 500);
    CHECK(offsets.size() == 500);
    for (std::size_t i = 1; i < offsets.size(); ++i) CHECK(offsets[i] < offsets[i - 1]);
    probe_report rep =
        angular_coverage(phi_increment_at(time_point::rational(1, 2)), offsets,
                         approach_side::right, eval_config{});
    CHECK(rep.max_gap < 0.5);
    // corner: directions cluster, so the circle stays mostly uncovered
    offset_schedule sched;
    sched.start = 1e-4;
    sched.ratio = 0.93;
    sched.count = 120;
    probe_report cl = angular_coverage(time_point::rational(1, 3), sched, eval_config{});
    CHECK(cl.max_gap > pi);
    CHECK_THROWS_AS(angular_coverage(time_point::rational(1, 3),
                                     offset_schedule{1e-4, 0.5, 9, approach_side::right},
                                     eval_config{}),
                    std::invalid_argument);
}

TEST_CASE("coverage is monotone under schedule growth") {
    increment_fn f = phi_increment_at(time_point::rational(1, 2));
    auto o100 = spiral_sweep_offsets(1, 100);
    auto o200 = spiral_sweep_offsets(1, 200);
    probe_report a = angular_coverage(f, o100, approach_side::right, eval_config{});
    probe_report b = angular_coverage(f, o200, approach_side::right, eval_config{});
    CHECK(b.max_gap <= a.max_gap + 1e-9);
    // merged reports aggregate deterministically
    probe_report m = merge_reports(a, b);
    CHECK(m.max_gap <= std::min(a.max_gap, b.max_gap) + 1e-12);
    CHECK(m.directions.size() == a.directions.size() + b.directions.size());
}

TEST_CASE("no_tangent_certificate: corner point") {
    certificate cert = no_tangent_certificate(time_point::rational(1, 8));
    CHECK(cert.verdict == verdict_kind::corner_mismatch);
    CHECK(std::abs(cert.angle_diff - pi / 2.0) <= 2e-2);
    CHECK(std::abs(std::pow(cert.e_fit, 8) - complex{1.0, 0.0}) <= 1e-9);
}

TEST_CASE("no_tangent_certificate: spiral point") {
    certificate cert = no_tangent_certificate(time_point::rational(1, 2));
    CHECK(cert.verdict == verdict_kind::spiral_sweep);
    CHECK(cert.max_gap_right < 0.5);
    CHECK(cert.max_gap_left < 0.5);
}

TEST_CASE("no_tangent_certificate: irrational point") {
    certificate cert = no_tangent_certificate(time_point::named("pi-3"));
    CHECK(cert.verdict == verdict_kind::irrational_arc);
    CHECK(cert.arc_width >= 0.3);
    CHECK(cert.n_directions >= 10);
    CHECK(cert.q_used >= 7);
    CHECK(!cert.regime.empty());
}

TEST_CASE("segment_content of simple curves") {
    auto line = [](double x) { return complex{x, 0.0}; };
    CHECK(segment_content(line, 0.0, 1.0, 64) == doctest::Approx(1.0).epsilon(1e-9));
    auto circle = [](double x) { return std::polar(1.0, 2.0 * pi * x); };
    CHECK(segment_content(circle, 0.0, 1.0, 128) == doctest::Approx(2.0).epsilon(1e-4));
    // shrinking arc: content -> 0
    double prev = 1e9;
    for (double eps : {1e-2, 1e-4, 1e-6}) {
        double d = segment_content_phi(0.02, 0.02 + eps, 32, eval_config{});
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 2e-3);
    CHECK_THROWS_AS(segment_content(line, 1.0, 0.0, 16), std::invalid_argument);
}

TEST_CASE("ball content bracket") {
    eval_config cfg;
    content_bracket b = ball_content_bounds(time_point::from_t(0.013), 0.01, cfg);
    CHECK(b.lo == 0.01);
    CHECK(b.hi == 0.02);
    CHECK(b.estimate >= b.lo * (1.0 - 3e-5));
    CHECK(b.estimate <= b.hi * (1.0 + 3e-5));
    // estimate/(2r) sits in [1/2, 1]
    CHECK(b.estimate / b.hi >= 0.5 - 1e-9);
    CHECK(b.estimate / b.hi <= 1.0 + 1e-9);
    // radius beyond the curve diameter: nothing escapes
    CHECK_THROWS_AS(ball_content_bounds(time_point::from_t(0.013), 10.0, cfg), inconclusive_error);
}

TEST_CASE("diameter subadditivity for touching sets") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int round = 0; round < 200; ++round) {
        std::vector<complex> a, b;
        complex shared{u(rng), u(rng)};
        a.push_back(shared);
        b.push_back(shared);
        for (int i = 0; i < 12; ++i) {
            a.emplace_back(u(rng), u(rng));
            b.emplace_back(u(rng), u(rng));
        }
        auto diam = [](const std::vector<complex>& v) {
            double best = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j)
                    best = std::max(best, std::abs(v[i] - v[j]));
            return best;
        };
        std::vector<complex> both = a;
        both.insert(both.end(), b.begin(), b.end());
        CHECK(diam(both) <= diam(a) + diam(b) + 1e-12);
    }
}
