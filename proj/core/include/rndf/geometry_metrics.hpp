#pragma once

#include <cstdint>
#include <vector>

#include "rndf/complex_value.hpp"
#include "rndf/eval_config.hpp"

namespace rndf {

struct polyline {
    std::vector<double> params;  // strictly increasing
    std::vector<complex> points; // same length
    void validate() const;
};

// n uniform samples of phi over [a,b] (parameter in t units). Sampling over
// one or two whole periods with a power-of-two subdivision goes through the
// bucketed FFT; anything else is evaluated pointwise across worker threads.
polyline sample_curve(double a, double b, std::size_t n, const eval_config& cfg = {});

// Occupied cells of the eps-grid anchored at the origin.
std::int64_t box_count(const polyline& poly, double eps);

struct dimension_fit {
    double slope = 0.0;
    double std_error = 0.0;
    std::vector<double> eps_ladder;
    std::vector<std::int64_t> counts;
};

// Least-squares slope of log N(eps) against log(1/eps) over a geometric
// ladder of `levels` scales in [eps_lo, eps_hi]. Refuses polylines whose
// consecutive point gaps exceed eps_lo/4.
dimension_fit dimension_estimate(const polyline& poly, double eps_lo, double eps_hi, int levels);

// Calibration curves of known dimension.
polyline segment_polyline(std::size_t n);                  // dimension 1
polyline filled_square_polyline(std::size_t side);         // dimension 2
polyline koch_polyline(int level);                         // dimension log4/log3

} // namespace rndf
