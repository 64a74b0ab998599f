// Temporary development driver; replaced by the real CLI.
#include <chrono>
#include <cstdio>

#include "rndf/series.hpp"

using namespace rndf;

int main() {
    eval_config cfg;
    cfg.tol = 1e-9;

    auto t0 = std::chrono::steady_clock::now();
    complex phi01 = eval_phi(time_point::from_t(0.1), cfg);
    auto t1 = std::chrono::steady_clock::now();
    std::printf("phi(0.1)      = %.15f %+.15fi   [%.3f s, N=%lld]\n", phi01.real(), phi01.imag(),
                std::chrono::duration<double>(t1 - t0).count(),
                static_cast<long long>(truncation_length(cfg.tol)));

    complex phid0 = eval_phi_d(time_point::from_x(0.0), cfg);
    std::printf("phi_D(0)      = %.15f %+.15fi (expect -i pi/6 = -0.523598775598299i)\n",
                phid0.real(), phid0.imag());

    complex phi_x1 = eval_phi(time_point::rational(1, 1), cfg);
    std::printf("phi(x=1)      = %.15f %+.15fi (expect i/(2pi) = 0.159154943091895i)\n",
                phi_x1.real(), phi_x1.imag());

    double r_half_pi = eval_R(M_PI / 2, cfg.with_tol(1e-8));
    std::printf("R(pi/2)       = %.15f (expect pi^2/8 = 1.233700550136170)\n", r_half_pi);

    // Linking identity at x = 0.37
    double x = 0.37;
    complex lhs = eval_phi(time_point::from_t(x), cfg);
    complex pd = eval_phi_d(time_point::from_x_dd(detail::dd_mul(detail::dd_two_pi, -2.0 * x)), cfg);
    complex rhs = complex{0.0, -1.0} / (2.0 * M_PI) * pd + complex{0.0, x} + 1.0 / 12.0;
    std::printf("link residual = %.3e (budget 3e-9)\n", std::abs(lhs - rhs));

    // Periodicity
    complex a = eval_phi(time_point::from_t(0.0123), cfg);
    complex b = eval_phi(time_point::from_t(0.0123 + 1.0 / (2.0 * M_PI)), cfg);
    std::printf("period resid  = %.3e\n", std::abs(b - a - complex{0.0, 1.0 / (2.0 * M_PI)}));

    // Y at 1/(4h) = 2 pi m -> pi^2/6; at (2m+1) pi -> -pi^2/12
    complex y1 = eval_Y(1.0 / (8.0 * M_PI * 3.0), cfg.with_tol(1e-6));
    complex y2 = eval_Y(1.0 / (4.0 * M_PI * 7.0), cfg.with_tol(1e-6));
    std::printf("Y grid        = %.9f%+.9fi (expect 1.644934) / %.9f%+.9fi (expect -0.822467)\n",
                y1.real(), y1.imag(), y2.real(), y2.imag());

    // Z at 1/(16h) = 2 pi m -> pi^2/8 ; h = 1/(16 pi) -> -pi^2/8
    complex z1 = eval_Z(1.0 / (32.0 * M_PI * 5.0), cfg.with_tol(1e-6));
    complex z2 = eval_Z(1.0 / (16.0 * M_PI), cfg.with_tol(1e-6));
    std::printf("Z grid        = %.9f%+.9fi (expect 1.233701) / %.9f%+.9fi (expect -1.233701)\n",
                z1.real(), z1.imag(), z2.real(), z2.imag());

    // Increment vs direct difference at a corner point
    auto tp = time_point::rational(1, 3);
    complex inc = phi_increment(tp, 1e-5, cfg);
    complex d2 = eval_phi(time_point::from_x_dd(detail::dd_add(tp.x_dd(), detail::dd_mul(detail::dd_two_pi, 1e-5))), cfg);
    complex d1 = eval_phi(tp, cfg);
    std::printf("inc check     = %.3e  inc=%.10f%+.10fi\n", std::abs(inc - (d2 - d1)), inc.real(),
                inc.imag());

    // Spiral shift identity at t_{1,2}
    double h = 0.004321;
    complex l2 = phi_increment(time_point::rational(1, 2), h, cfg);
    complex r4 = eval_phi(time_point::from_t(4 * h), cfg) / 2.0 - eval_phi(time_point::from_t(h), cfg);
    std::printf("spiral ident  = %.3e\n", std::abs(l2 - r4));

    // Timing: increment at tol 1e-9 (the probe workhorse)
    auto t2 = std::chrono::steady_clock::now();
    complex probe = phi_increment(time_point::rational(1, 19), 1e-8, cfg.with_tol(1e-9));
    auto t3 = std::chrono::steady_clock::now();
    std::printf("probe inc     = |%.3e| in %.3f s (N=%lld)\n", std::abs(probe),
                std::chrono::duration<double>(t3 - t2).count(),
                static_cast<long long>(truncation_length(1e-9)));

    // Grid consistency: FFT path vs direct
    auto grid = phi_period_grid((1 << 12) + 1, cfg.with_tol(1e-8));
    std::size_t j = 1234;
    complex direct = eval_phi(time_point::rational(static_cast<long long>(j), 1 << 12), cfg.with_tol(1e-8));
    std::printf("grid check    = %.3e  (n=%zu)\n", std::abs(grid[j] - direct), grid.size());
    return 0;
}
