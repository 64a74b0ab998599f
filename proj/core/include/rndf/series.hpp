#pragma once

#include <cstdint>
#include <vector>

#include "rndf/complex_value.hpp"
#include "rndf/eval_config.hpp"
#include "rndf/time_point.hpp"

namespace rndf {

// Smallest N whose analytic tail bound 1/(pi^2 N) for the phi series is at
// most tol; throws capacity_error if N would exceed cfg.max_terms.
std::int64_t truncation_length(double tol, const eval_config& cfg = {});

// phi(t) = sum_{k in Z} (e^{-4 pi^2 i k^2 t} - 1) / (-4 pi^2 k^2), with the
// k = 0 term defined as i*t (its k -> 0 limit; see the linking identity
// with the Duistermaat series, which pins this convention). Absolute error
// <= cfg.tol.
complex eval_phi(const time_point& t, const eval_config& cfg = {});

// phi_D(x) = sum_{n>=1} e^{i pi n^2 x} / (i pi n^2). Absolute error <= cfg.tol.
complex eval_phi_d(const time_point& x, const eval_config& cfg = {});

// R(x) = sum_{n>=1} sin(n^2 x) / n^2. Absolute error <= cfg.tol.
double eval_R(double x, const eval_config& cfg = {});

// Y(h) = sum_{k>=1} e^{i k^2/(4h)} / k^2, h != 0.
complex eval_Y(double h, const eval_config& cfg = {});

// Z(h) = sum_{k>=1 odd} e^{-i k^2/(16h)} / k^2, h != 0.
complex eval_Z(double h, const eval_config& cfg = {});

// phi(t + h) - phi(t), summed as a single difference series so the result
// carries absolute error <= cfg.tol without subtractive cancellation.
complex phi_increment(const time_point& t, double h, const eval_config& cfg = {});

// Same, with the offset given in x units (eps = 2 pi h) at double-double
// precision; used by probes at parameter scales below 1e-16.
complex phi_increment_x(const time_point& t, detail::dd eps_x, const eval_config& cfg = {});

// Antiderivative PHI(t) = integral_0^t phi(u) du. The termwise-integrated
// series decays like k^-4, so this is cheap at any tolerance.
complex phi_antiderivative(double t, const eval_config& cfg = {});

// phi sampled on the uniform grid t_j = j / (2 pi (n-1)), j = 0..n-1, in one
// shot: the k^2 phases are bucketed mod n-1 and transformed with an FFT.
// Requires n-1 to be a power of two.
std::vector<complex> phi_period_grid(std::size_t n, const eval_config& cfg = {});

} // namespace rndf
