#include "rndf/time_point.hpp"

#include <stdexcept>

namespace rndf {

namespace {

// 200 decimal digits each, precomputed offline with mpmath and checked in.
constexpr std::string_view k_pi_minus_3 =
    "0."
    "14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706"
    "79821480865132823066470938446095505822317253594081284811174502841027019385211055596446229489549303"
    "81";

constexpr std::string_view k_sqrt2_minus_1 =
    "0."
    "41421356237309504880168872420969807856967187537694807317667973799073247846210703885038753432764157"
    "27350138462309122970249248360558507372126441214970999358314132226659275055927557999505011527820605"
    "71";

constexpr std::string_view k_golden_minus_1 =
    "0."
    "61803398874989484820458683436563811772030917980576286213544862270526046281890244970720720418939113"
    "74847540880753868917521266338622235369317931800607667263544333890865959395829056383226613199282902"
    "68";

} // namespace

std::string_view named_constant_digits(std::string_view name) {
    if (name == "pi-3") return k_pi_minus_3;
    if (name == "sqrt2-1") return k_sqrt2_minus_1;
    if (name == "golden-1") return k_golden_minus_1;
    throw std::invalid_argument("unknown named constant: " + std::string(name));
}

} // namespace rndf
