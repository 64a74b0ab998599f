#pragma once

#include <cstdint>
#include <stdexcept>

namespace rndf {

// Accuracy contract for the series evaluators. `tol` is an absolute
// truncation-error target backed by an analytic tail bound, not a heuristic.
struct eval_config {
    double tol = 1e-8;
    std::int64_t max_terms = 2'000'000'000;
    int precision_digits = 34;

    void validate() const {
        if (!(tol > 0.0)) throw std::invalid_argument("eval_config: tol must be > 0");
        if (max_terms < 1) throw std::invalid_argument("eval_config: max_terms must be >= 1");
        if (precision_digits < 16)
            throw std::invalid_argument("eval_config: precision_digits must be >= 16");
    }

    eval_config with_tol(double t) const {
        eval_config c = *this;
        c.tol = t;
        return c;
    }
};

} // namespace rndf
