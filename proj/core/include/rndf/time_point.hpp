#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rndf/detail/dd.hpp"
#include "rndf/detail/phase.hpp"

namespace rndf {

// A point on the curve parameter line. Internally everything is carried in
// the rescaled variable x = 2*pi*t, where rational points are exact and the
// series phases reduce exactly. Three kinds:
//   rational       x = p/q, exact integers
//   decimal        x given as a double / double-double / digit string
//   named constant one of the checked-in 200-digit literals
class time_point {
public:
    enum class kind { rational, decimal, named };

    static time_point from_t(double t);
    static time_point from_x(double x);
    static time_point from_x_dd(detail::dd x);
    static time_point rational(std::int64_t p, std::int64_t q); // x = p/q, q > 0
    static time_point named(std::string_view name);             // "pi-3", "sqrt2-1", "golden-1"
    static time_point decimal(std::string_view x_digits);       // "0.1415926..."

    kind which() const { return kind_; }
    bool is_rational() const { return kind_ == kind::rational; }

    std::int64_t p() const; // rational kind only
    std::int64_t q() const;

    double x() const { return detail::dd_to_double(x_); }
    double t() const;
    detail::dd x_dd() const { return x_; }
    detail::frac128 x_frac() const { return frac_; }

    // Decimal digits of x when available (named constants and digit-string
    // inputs); used by the continued-fraction expander for certified
    // quotients. Empty for plain double inputs.
    const std::string& digits() const { return digits_; }

    // The same point shifted by eps in x units (decimal kind).
    time_point shifted_x(detail::dd eps) const;

private:
    kind kind_ = kind::decimal;
    std::int64_t p_ = 0;
    std::int64_t q_ = 1;
    detail::dd x_{};
    detail::frac128 frac_{};
    std::string digits_;
};

// Checked-in 200-digit decimal literals for the named constants (values of
// the rescaled variable x). Generated once with an independent
// high-precision tool.
std::string_view named_constant_digits(std::string_view name);

} // namespace rndf
