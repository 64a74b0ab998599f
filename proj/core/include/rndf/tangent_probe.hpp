#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rndf/complex_value.hpp"
#include "rndf/continued_fractions.hpp"
#include "rndf/eval_config.hpp"
#include "rndf/time_point.hpp"

namespace rndf {

// Closed cone with vertex, unit direction and half aperture; double_sided
// selects the double cone (both V and -V).
struct cone {
    complex vertex{0.0, 0.0};
    complex direction{1.0, 0.0};
    double half_aperture = 0.7853981633974483;
    bool double_sided = false;
};

cone make_cone(complex vertex, complex direction, double half_aperture, bool double_sided);

// Closed membership (boundary included, vertex included).
bool cone_member(const cone& c, complex z);

// Strictly decreasing geometric offsets start * ratio^j, j = 0..count-1.
struct offset_schedule {
    double start = 1e-4;
    double ratio = 0.5623413251903491; // 10^{-1/4}
    int count = 9;
    approach_side side = approach_side::right;

    void validate() const;
    std::vector<double> offsets() const;
};

struct probe_report {
    std::vector<complex> directions;
    std::optional<complex> limit_candidate;
    double dispersion = 0.0;             // max pairwise angle over the tail
    double max_gap = 6.283185307179586;  // largest angular gap on the circle
    int skipped = 0;                     // zero-increment offsets dropped
};

// f(t0 + r) - f(t0) for a signed offset r in t units. Lets the probes run
// against stub curves in tests; the default binds phi through the series.
using increment_fn = std::function<complex(double r, const eval_config&)>;

increment_fn phi_increment_at(const time_point& t);

// Normalized secant (f(t +- r) - f(t))/|...|; empty when the increment is a
// zero-increment signal (|inc| <= 10 * cfg.tol).
std::optional<complex> secant_direction(const time_point& t, double r, approach_side side,
                                        const eval_config& cfg = {});

// Collect secant directions along a shrinking schedule. The limit candidate
// is set iff the tail dispersion stays below 1e-2 rad.
probe_report probe_limit(const time_point& t, const offset_schedule& sched,
                         const eval_config& cfg = {});
probe_report probe_limit(const increment_fn& f, const offset_schedule& sched,
                         const eval_config& cfg = {});

// Angular coverage of the direction set (schedule count >= 100).
probe_report angular_coverage(const time_point& t, const offset_schedule& sched,
                              const eval_config& cfg = {});
probe_report angular_coverage(const increment_fn& f, const std::vector<double>& offsets,
                              approach_side side, const eval_config& cfg = {});

// Harmonic sweep offsets 1/u_n with u_n stepping golden-ratio fractions of
// the spiral period 32 pi q_tilde^2; realizes directions all around the
// circle while shrinking to zero.
std::vector<double> spiral_sweep_offsets(std::int64_t q_tilde, int count);

// Deterministic order-independent merge of two direction sets.
probe_report merge_reports(const probe_report& a, const probe_report& b);

enum class verdict_kind { corner_mismatch, spiral_sweep, irrational_arc };

std::string to_string(verdict_kind v);

struct certificate {
    verdict_kind verdict = verdict_kind::corner_mismatch;
    // corner evidence
    double angle_diff = 0.0;
    complex right_dir{0.0, 0.0};
    complex left_dir{0.0, 0.0};
    double dispersion_right = 0.0;
    double dispersion_left = 0.0;
    complex e_fit{0.0, 0.0};
    // spiral evidence
    double max_gap_right = 0.0;
    double max_gap_left = 0.0;
    // irrational evidence
    double arc_width = 0.0;
    int n_directions = 0;
    std::int64_t q_used = 0;
    double K_used = 0.0;
    std::int64_t window_m = 0;
    std::string regime; // "K-positive" or "K-small" for irrationals
};

// Numerically certify that no tangent exists at t: corners by the pi/2
// side-limit mismatch (a tangent needs diametrically opposite side limits),
// spirals by full angular sweeps, irrationals by an accumulation arc probed
// through odd-denominator convergents. Throws inconclusive_error rather
// than ever emitting a false certificate.
certificate no_tangent_certificate(const time_point& t, const eval_config& cfg = {});

// 1-Hausdorff content of a curve arc = its diameter; computed from point
// samples with internal refinement until doubling moves the result by less
// than 1e-4.
double segment_content(const std::function<complex(double)>& f, double a, double b,
                       int n_samples);
double segment_content_phi(double a, double b, int n_samples, const eval_config& cfg = {});

struct content_bracket {
    double lo = 0.0;       // r
    double hi = 0.0;       // 2r
    double estimate = 0.0; // sampled arc diameter, inside [lo, hi]
};

// Certified bracket r <= content <= 2r for the curve inside B(phi(t), r),
// with an empirical diameter estimate; requires some parameter to escape
// the ball (inconclusive_error otherwise).
content_bracket ball_content_bounds(const time_point& t, double r, const eval_config& cfg = {});

} // namespace rndf
