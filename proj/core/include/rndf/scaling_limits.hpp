#pragma once

#include <cstdint>

#include "rndf/complex_value.hpp"
#include "rndf/eval_config.hpp"

namespace rndf {

// Parameters of the rescaled local limits: c stands for the ratio c_n/q_n
// (or its limit a) in [1,4]; m indexes the corner grid; mu in [1,2] and
// alpha in [0,1) locate points inside a window.
struct scale_params {
    double c = 2.5;
    std::int64_t m = 1;
    double mu = 1.5;
    double alpha = 0.5;
    void validate() const;
};

struct window_location {
    std::int64_t m = 1;
    double alpha = 0.0;
};

// beta(s) = s / (1 + 4 pi c s); maps [0,inf) into [0, 1/(4 pi)).
double beta_map(double s, double c);

// The rescaled local limit H_c(s) through its closed form
//   sqrt(pi) (1-i)/sqrt(2) [ phi(beta)/(1-4 pi c beta)^{3/2}
//                            - 6 pi c INT_0^beta phi(r)/(1-4 pi c r)^{5/2} dr ],
// quadrature error <= cfg.tol. The integral is pushed through one exact
// integration by parts so the quadrature sees the C^{3/2} antiderivative of
// phi instead of phi itself.
complex h_closed(double s, double c, const eval_config& cfg = {});

// H_c(s1) - H_c(s2) without subtractive cancellation (s1, s2 within a
// factor of two of each other); absolute error <= cfg.tol.
complex h_closed_diff(double s1, double s2, double c, const eval_config& cfg = {});

// Two-term small-s form sqrt(s) + 4i Y(beta(s)) s^{3/2}, s in (0, 0.1].
complex h_series(double s, double c, const eval_config& cfg = {});

struct corner_grid_points {
    double s_m;       // 1/(4 beta) = 2 pi m
    double s_tilde_m; // 1/(4 beta) = (2m+1) pi
    double s_cm;      // corner of the m-th copy (equals s_m here)
};

// Grid of distinguished s values for the given c and index m.
corner_grid_points corner_grid(double c, std::int64_t m);

// s_{m+x} for a real window index x >= 0 (same formula as s_m).
double grid_index_s(double c, double m_real);

// Unique m with s_{m+1} < K/(2 pi) <= s_m, plus the fractional position
// alpha in [0,1) with K/(2 pi) = s_{m+alpha}.
window_location locate_window(double K, double c);

// Second rescaling G_{m,mu}(s) = s_{m+mu}^{-3/2} [H_c(s) - H_c(s_{m+mu})]
// for s in the window (s_{m+1}, s_m]; s exactly equal to s_{m+mu} returns 0.
complex g_rescaled(double s, double mu, double c, std::int64_t m, const eval_config& cfg = {});

} // namespace rndf
