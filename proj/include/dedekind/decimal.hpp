#pragma once

// Exact decimal rendering.
//
// All strings are derived with integer arithmetic only: to print k digits of
// (p/q)^(1/n) we compare n-th powers of candidate integers against p*10^(n*k)/q,
// so the printed digits are exact for truncation and correctly rounded for
// half-away-from-zero.  No floating point is involved anywhere.

#include "dedekind/rational.hpp"

#include <limits>

namespace dedekind {

enum class Round {
    trunc,     // toward zero
    half_away  // ties away from zero
};

inline Int pow10(unsigned k) {
    Int r(1);
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

// floor(n^(1/k)) by Newton iteration; exact for all n >= 0.
inline Int iroot_floor(const Int& n, unsigned k) {
    if (k == 0) throw std::domain_error("iroot_floor: zeroth root");
    if (n < 0) throw std::domain_error("iroot_floor: negative radicand");
    if (n == 0 || n == 1 || k == 1) return n;
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    Int x = Int(1) << (bits / k + 1);  // strictly above the true root
    while (true) {
        Int y = ((k - 1) * x + n / ipow(x, k - 1)) / k;
        if (y >= x) break;
        x = y;
    }
    while (ipow(x, k) > n) --x;
    while (ipow(x + 1, k) <= n) ++x;
    return x;
}

inline Int isqrt_floor(const Int& n) { return iroot_floor(n, 2); }

namespace detail {

// Digit string for the nonnegative integer `scaled`, interpreted as a fixed
// point value with `places` digits after the point.
inline std::string assemble(const Int& scaled, unsigned places, bool negative) {
    std::string digits = scaled.str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out;
    if (negative && scaled != 0) out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

// max { m >= 0 : m^root * den <= num * 10^(root*places) }, i.e. the truncated
// scaled root floor((num/den)^(1/root) * 10^places).  Integer m^root <= real X
// iff m^root <= floor(X), so flooring the quotient first is exact.
inline Int scaled_root_floor(const Int& num, const Int& den, unsigned root, unsigned places) {
    return iroot_floor(num * pow10(places * root) / den, root);
}

}  // namespace detail

// value = (num/den)^(1/root), num/den >= 0, rendered with `places` digits.
inline std::string format_root(const Rational& value_pow, unsigned root, unsigned places,
                               Round mode) {
    const Int& p = numerator(value_pow);
    const Int& q = denominator(value_pow);
    if (p < 0) throw std::domain_error("format_root: negative radicand");
    Int scaled;
    if (mode == Round::trunc) {
        scaled = detail::scaled_root_floor(p, q, root, places);
    } else {
        // round(v) = floor((floor(2v) + 1) / 2)
        Int twice = iroot_floor((Int(1) << root) * p * pow10(places * root) / q, root);
        scaled = (twice + 1) / 2;
    }
    return detail::assemble(scaled, places, false);
}

inline std::string format_fixed(const Rational& x, unsigned places, Round mode) {
    const bool neg = x < 0;
    const Int p = neg ? Int(-numerator(x)) : numerator(x);
    const Int& q = denominator(x);
    Int scaled;
    if (mode == Round::trunc) {
        scaled = p * pow10(places) / q;
    } else {
        scaled = (2 * p * pow10(places) + q) / (2 * q);
    }
    return detail::assemble(scaled, places, neg);
}

// True when x has a terminating decimal expansion of at most `places` digits.
inline bool fits_places(const Rational& x, unsigned places) {
    return numerator(x) * pow10(places) % denominator(x) == 0;
}

inline std::string strip_zeros(std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

namespace detail {

// Number of zeros between the decimal point and the first significant digit
// of (num/den)^(1/root), for values in (0, 1).  Zero for values >= 1.
inline unsigned leading_zeros(const Int& num, const Int& den, unsigned root) {
    if (num >= den) return 0;
    unsigned z = 0;
    while (num * ipow(pow10(z + 1), root) < den) ++z;
    return z;
}

inline std::string sig_root(const Rational& value_pow, unsigned root, unsigned sig) {
    const Int& p = numerator(value_pow);
    const Int& q = denominator(value_pow);
    if (p == 0) return "0";
    const Int int_part = detail::scaled_root_floor(p, q, root, 0);
    unsigned places;
    if (int_part > 0) {
        const unsigned int_digits = static_cast<unsigned>(int_part.str().size());
        if (int_digits > sig) {
            // Round at the sig-th significant digit, left of the point.
            const unsigned shift = int_digits - sig;
            Int twice = iroot_floor((Int(1) << root) * p / (q * ipow(pow10(shift), root)), root);
            Int m = (twice + 1) / 2;
            return m.str() + std::string(shift, '0');
        }
        places = sig - int_digits;
    } else {
        places = sig + leading_zeros(p, q, root);
    }
    return strip_zeros(format_root(value_pow, root, places, Round::half_away));
}

}  // namespace detail

// printf("%.Ng")-style rendering: `sig` significant digits, half-away ties,
// trailing zeros stripped.  Values here never need exponent notation.
inline std::string format_sig(const Rational& x, unsigned sig) {
    if (x < 0) return "-" + detail::sig_root(-x, 1, sig);
    return detail::sig_root(x, 1, sig);
}

inline std::string format_sig_root(const Rational& value_pow, unsigned root, unsigned sig) {
    return detail::sig_root(value_pow, root, sig);
}

}  // namespace dedekind
