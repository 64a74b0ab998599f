#include "rndf/continued_fractions.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

#include "rndf/errors.hpp"

namespace rndf {

namespace {

struct rat {
    big_int num;
    big_int den; // > 0

    void normalize_sign() {
        if (den < 0) {
            den = -den;
            num = -num;
        }
    }
};

big_int floor_div(const big_int& a, const big_int& b) {
    big_int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

int cmp(const rat& a, const rat& b) {
    big_int lhs = a.num * b.den;
    big_int rhs = b.num * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

// Exact rational from a double (doubles are dyadic rationals).
rat rat_from_double(double x) {
    if (x == 0.0) return {0, 1};
    int e = 0;
    double m = std::frexp(x, &e); // x = m * 2^e, |m| in [0.5, 1)
    big_int num = static_cast<std::int64_t>(std::ldexp(m, 53));
    e -= 53;
    rat r{num, 1};
    if (e >= 0)
        r.num <<= e;
    else
        r.den <<= -e;
    return r;
}

rat rat_add(const rat& a, const rat& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

// Ratio of two big integers as a double, safe for operands far beyond the
// double exponent range.
double rat_to_double(const rat& r) {
    if (r.num == 0) return 0.0;
    bool neg = r.num < 0;
    big_int a = neg ? big_int(-r.num) : r.num;
    big_int scaled = (a << 96) / r.den;
    double v = static_cast<double>(scaled) * 0x1p-96;
    return neg ? -v : v;
}

// The exact value interval [lo, hi] represented by a time point.
void value_interval(const time_point& x, rat& lo, rat& hi) {
    switch (x.which()) {
        case time_point::kind::rational: {
            rat v{x.p(), x.q()};
            lo = v;
            hi = v;
            return;
        }
        case time_point::kind::named:
        case time_point::kind::decimal: {
            const std::string& d = x.digits();
            if (d.empty()) {
                // Plain double input: exact dyadic value.
                rat v = rat_add(rat_from_double(x.x_dd().hi), rat_from_double(x.x_dd().lo));
                lo = v;
                hi = v;
                return;
            }
            // digits are canonical: [-]intpart.fracpart
            bool neg = d[0] == '-';
            std::size_t start = neg ? 1 : 0;
            std::size_t dot = d.find('.');
            big_int ip(d.substr(start, dot - start));
            big_int fp = 0;
            big_int scale = 1;
            for (std::size_t i = dot + 1; i < d.size(); ++i) {
                fp = fp * 10 + (d[i] - '0');
                scale *= 10;
            }
            big_int num = ip * scale + fp;
            if (neg) num = -num;
            lo = {num - 1, scale}; // +-1 ulp of the last digit
            hi = {num + 1, scale};
            return;
        }
    }
    throw std::logic_error("value_interval: unreachable");
}

} // namespace

bool convergent::fits_int64() const {
    static const big_int lim = (big_int(1) << 62);
    return abs(p) < lim && q < lim;
}

std::int64_t convergent::p_int64() const {
    if (!fits_int64()) throw range_error("convergent: p/q exceeds int64");
    return static_cast<std::int64_t>(p);
}

std::int64_t convergent::q_int64() const {
    if (!fits_int64()) throw range_error("convergent: p/q exceeds int64");
    return static_cast<std::int64_t>(q);
}

cf_expansion cf_expand(const time_point& x, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("cf_expand: n_terms must be >= 1");
    rat lo, hi;
    value_interval(x, lo, hi);
    if (cmp(lo, {0, 1}) < 0 || cmp(hi, {1, 1}) > 0) {
        // x must lie in [0,1]; the +-ulp envelope of a decimal endpoint may
        // poke out by one ulp, which is fine.
        rat l2 = lo, h2 = hi;
        if (cmp(h2, {0, 1}) < 0 || cmp(l2, {1, 1}) > 0)
            throw std::invalid_argument("cf_expand: x must lie in [0,1]");
    }

    cf_expansion out;
    rat a = lo, b = hi; // invariant: a <= value <= b
    for (int n = 0; n <= n_terms; ++n) {
        big_int fa = floor_div(a.num, a.den);
        big_int fb = floor_div(b.num, b.den);
        if (fa != fb)
            throw precision_exhausted("cf_expand: digits cannot certify partial quotient " +
                                      std::to_string(n));
        if (fa > std::numeric_limits<std::int64_t>::max() / 4)
            throw precision_exhausted("cf_expand: partial quotient overflow");
        std::int64_t an = static_cast<std::int64_t>(fa);
        if (n == 0)
            out.a0 = an;
        else
            out.partial_quotients.push_back(an);
        if (static_cast<int>(out.partial_quotients.size()) == n_terms) break;

        // fractional parts
        rat fa_lo{a.num - fa * a.den, a.den};
        rat fa_hi{b.num - fa * b.den, b.den};
        bool lo_zero = fa_lo.num == 0;
        bool hi_zero = fa_hi.num == 0;
        if (lo_zero && hi_zero) {
            out.terminated = true;
            break;
        }
        if (lo_zero || hi_zero) {
            // One endpoint hits an integer exactly: the expansion cannot be
            // certified past this point unless the value itself is exact.
            if (cmp(a, b) == 0) {
                out.terminated = true;
                break;
            }
            throw precision_exhausted("cf_expand: interval touches a quotient boundary");
        }
        // reciprocal swaps the endpoints
        rat na{fa_hi.den, fa_hi.num};
        rat nb{fa_lo.den, fa_lo.num};
        na.normalize_sign();
        nb.normalize_sign();
        a = na;
        b = nb;
    }
    return out;
}

std::vector<convergent> convergents(const cf_expansion& cf, const time_point& x) {
    rat lo, hi;
    value_interval(x, lo, hi);

    std::vector<convergent> out;
    big_int p_prev = 1, q_prev = 0; // p_{-1}, q_{-1}
    big_int p_cur = cf.a0, q_cur = 1;
    std::size_t count = cf.partial_quotients.size() + 1;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n > 0) {
            big_int an = cf.partial_quotients[n - 1];
            big_int p_next = an * p_cur + p_prev;
            big_int q_next = an * q_cur + q_prev;
            p_prev = p_cur;
            q_prev = q_cur;
            p_cur = p_next;
            q_cur = q_next;
        }
        convergent cv;
        cv.p = p_cur;
        cv.q = q_cur;
        cv.q_odd = (q_cur & 1) != 0;

        // err = rho - p/q as an exact interval [e_lo, e_hi]
        rat e_lo{lo.num * q_cur - p_cur * lo.den, lo.den * q_cur};
        rat e_hi{hi.num * q_cur - p_cur * hi.den, hi.den * q_cur};
        bool pos = e_lo.num > 0;
        bool neg = e_hi.num < 0;
        if (e_lo.num == 0 && e_hi.num == 0) {
            cv.exact = true;
            cv.K = 0.0;
            cv.side = approach_side::left;
        } else if (!neg && !pos) {
            // interval straddles zero: only possible for the last convergent
            // of a decimal whose digits were exhausted
            throw precision_exhausted("convergents: digits cannot certify the side");
        } else {
            cv.side = pos ? approach_side::left : approach_side::right;
            // K = q^2 |err| at the interval midpoint
            rat mid{e_lo.num * e_hi.den + e_hi.num * e_lo.den, e_lo.den * e_hi.den * 2};
            cv.K = std::abs(rat_to_double(rat{mid.num * q_cur * q_cur, mid.den}));
        }
        out.push_back(std::move(cv));
    }
    return out;
}

std::vector<convergent> odd_denominator_subsequence(const std::vector<convergent>& v) {
    std::vector<convergent> out;
    for (const auto& c : v)
        if (c.q_odd) out.push_back(c);
    return out;
}

std::vector<convergent> side_filtered(const std::vector<convergent>& v, approach_side s) {
    std::vector<convergent> out;
    for (const auto& c : v)
        if (!c.exact && c.side == s) out.push_back(c);
    return out;
}

} // namespace rndf
