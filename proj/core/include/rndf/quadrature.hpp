#pragma once

#include <functional>

#include "rndf/complex_value.hpp"

namespace rndf {

struct quad_result {
    complex value;
    double err_est = 0.0;
    int panels = 0;
};

// Adaptive Gauss-Kronrod 15(7) with a minimum uniform split. The error
// estimate per panel is the G7/K15 discrepancy; panels are refined worst
// first until the summed estimate clears abs_tol.
quad_result adaptive_gk15(const std::function<complex(double)>& f, double a, double b,
                          double abs_tol, int max_panels = 1 << 17, int min_panels = 64);

} // namespace rndf
