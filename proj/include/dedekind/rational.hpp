#pragma once

// Exact arithmetic foundation: arbitrary-precision integers and rationals.
//
// Every quantity in this library is carried as an exact rational for as long
// as possible; decimal strings are produced only at the presentation layer
// (see decimal.hpp).  Rationals are kept normalized by the backing type:
// denominator > 0, gcd(num, den) = 1.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace dedekind {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

// Floor division with sign handling; quotient rounds toward -infinity.
inline Int floor_div(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("floor_div: zero divisor");
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

inline Int floor_rat(const Rational& x) {
    return floor_div(numerator(x), denominator(x));
}

// Fractional part {x} = x - floor(x), always in [0, 1).
inline Rational frac(const Rational& x) {
    return x - Rational(floor_rat(x));
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline Int ipow(Int base, unsigned exp) {
    Int acc(1);
    while (exp != 0) {
        if (exp & 1u) acc *= base;
        base *= base;
        exp >>= 1u;
    }
    return acc;
}

inline Rational pow_rat(const Rational& base, unsigned exp) {
    Rational acc(1);
    Rational b = base;
    unsigned e = exp;
    while (e != 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

// Serialization that round-trips losslessly: "p" when integral, else "p/q".
inline std::string to_exact_string(const Rational& x) {
    if (is_integer(x)) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("not a rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& part) {
        if (part.empty() || part == "-" || part == "+") throw bad();
        for (std::size_t i = 0; i < part.size(); ++i) {
            const char c = part[i];
            if (i == 0 && (c == '-' || c == '+')) continue;
            if (c < '0' || c > '9') throw bad();
        }
        return Int(part);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    const Int num = parse_int(text.substr(0, slash));
    const Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
}

}  // namespace dedekind
