#include "rndf/time_point.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace rndf {

using boost::multiprecision::cpp_int;
using detail::dd;
using detail::frac128;
using detail::u128;
using detail::u64;

namespace {

frac128 frac_from_u128_int(const cpp_int& v) {
    // v already reduced mod 2^128, non-negative
    u128 f = 0;
    cpp_int t = v;
    for (int i = 0; i < 2; ++i) {
        u64 word = static_cast<u64>(t & 0xffffffffffffffffULL);
        f |= static_cast<u128>(word) << (64 * i);
        t >>= 64;
    }
    return {f};
}

// x = num/den in [0,1): floor(num * 2^128 / den) as a frac128.
frac128 frac_from_ratio(cpp_int num, const cpp_int& den) {
    num %= den;
    if (num < 0) num += den;
    cpp_int scaled = (num << 128) / den;
    return frac_from_u128_int(scaled);
}

dd dd_from_frac(frac128 f, double int_part) {
    dd acc{int_part, 0.0};
    for (int i = 0; i < 4; ++i) {
        int shift = 96 - 32 * i;
        u64 chunk = static_cast<u64>((f.f >> shift) & 0xffffffffULL);
        acc = detail::dd_add(acc, std::ldexp(static_cast<double>(chunk), -(32 * (i + 1))));
    }
    return acc;
}

} // namespace

time_point time_point::from_t(double t) {
    return from_x_dd(detail::dd_mul(detail::dd_two_pi, t));
}

time_point time_point::from_x(double x) { return from_x_dd(dd{x, 0.0}); }

time_point time_point::from_x_dd(dd x) {
    time_point tp;
    tp.kind_ = kind::decimal;
    tp.x_ = x;
    tp.frac_ = frac128::from_dd(x);
    return tp;
}

time_point time_point::rational(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::invalid_argument("time_point::rational: q must be positive");
    std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    time_point tp;
    tp.kind_ = kind::rational;
    tp.p_ = p;
    tp.q_ = q;
    tp.frac_ = frac_from_ratio(cpp_int(p), cpp_int(q));
    double int_part = std::floor(static_cast<double>(p) / static_cast<double>(q));
    tp.x_ = dd_from_frac(tp.frac_, int_part);
    return tp;
}

time_point time_point::named(std::string_view name) {
    time_point tp = decimal(named_constant_digits(name));
    tp.kind_ = kind::named;
    return tp;
}

time_point time_point::decimal(std::string_view s) {
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::string int_digits, frac_digits;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i)
        int_digits.push_back(s[i]);
    if (i < s.size() && s[i] == '.') {
        ++i;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i)
            frac_digits.push_back(s[i]);
    }
    if (i != s.size() || (int_digits.empty() && frac_digits.empty()))
        throw std::invalid_argument("time_point::decimal: malformed number '" + std::string(s) + "'");

    cpp_int ipart(int_digits.empty() ? "0" : int_digits);
    cpp_int scale = 1;
    cpp_int fpart = 0;
    for (char c : frac_digits) {
        fpart = fpart * 10 + (c - '0');
        scale *= 10;
    }
    cpp_int num = ipart * scale + fpart;
    if (neg) num = -num;

    time_point tp;
    tp.kind_ = kind::decimal;
    tp.frac_ = frac_from_ratio(num, scale);
    double int_part = std::floor(static_cast<double>(num) / static_cast<double>(scale));
    tp.x_ = dd_from_frac(tp.frac_, int_part);
    std::string canon = neg ? "-" : "";
    canon += (int_digits.empty() ? "0" : int_digits);
    canon += ".";
    canon += frac_digits;
    tp.digits_ = canon;
    return tp;
}

std::int64_t time_point::p() const {
    if (kind_ != kind::rational) throw std::logic_error("time_point: not a rational point");
    return p_;
}

std::int64_t time_point::q() const {
    if (kind_ != kind::rational) throw std::logic_error("time_point: not a rational point");
    return q_;
}

double time_point::t() const {
    return detail::dd_to_double(detail::dd_div(x_, detail::dd_two_pi));
}

time_point time_point::shifted_x(dd eps) const {
    time_point tp;
    tp.kind_ = kind::decimal;
    tp.x_ = detail::dd_add(x_, eps);
    tp.frac_ = frac_ + frac128::from_dd(eps);
    return tp;
}

} // namespace rndf
