#pragma once

// Classical Dedekind sums, floor moments, and their generalized products.
//
//   ((x))        = {x} - 1/2 for non-integer x, and 0 at integers
//   s(a, b)      = sum_{k mod b} ((k a / b)) ((k / b))
//   M_k(a; b)    = (1/a) sum_{m=0}^{a-1} floor(m b / a)^k
//   S_d(a; b)    = (1/a) sum_{m=0}^{a-1} prod_i floor(m b_i / a)
//
// a * M_k and a * S_d are integers; the *_scaled functions return them as
// such.  Dedekind reciprocity and the M_2 bridge identity both require
// gcd(a, b) = 1 and enforce it (the bridge genuinely fails off that domain:
// the right side evaluates to 11/32 for (a, b) = (4, 2) while M_2 = 1/2).

#include "dedekind/rational.hpp"

#include <limits>

namespace dedekind {

struct SumParams {
    Int a;
    std::vector<Int> b;

    void validate() const {
        if (a < 1) throw std::domain_error("modulus a must be >= 1");
        if (b.empty()) throw std::domain_error("need at least one multiplier");
        for (const Int& bi : b)
            if (bi < 1) throw std::domain_error("multipliers must be >= 1");
    }
};

inline Rational sawtooth(const Rational& x) {
    if (is_integer(x)) return Rational(0);
    return frac(x) - Rational(1, 2);
}

namespace detail {

inline unsigned bit_width(const Int& x) {
    return x <= 0 ? 0 : boost::multiprecision::msb(x) + 1;
}

inline bool fits_u64(const Int& x) {
    return x >= 0 && x <= Int(std::numeric_limits<unsigned long long>::max());
}

}  // namespace detail

// s(a, b).  Defined for a >= 0, b >= 1; coprimality is not required by the
// definition.  Each nonzero term is (2 r_k - b)(2 k - b) / (4 b^2) with
// r_k = k a mod b, skipped when r_k = 0.
inline Rational dedekind_sum(const Int& a, const Int& b) {
    if (b < 1) throw std::domain_error("dedekind_sum: modulus must be >= 1");
    if (a < 0) throw std::domain_error("dedekind_sum: a must be >= 0");
    const Int step = a % b;
    // Fast path: all intermediates bounded by b^2 * b < 2^126.
    if (detail::bit_width(b) * 3 + 2 <= 120) {
        const unsigned long long bb = b.convert_to<unsigned long long>();
        const unsigned long long st = step.convert_to<unsigned long long>();
        __int128 acc = 0;
        unsigned long long r = 0;
        for (unsigned long long k = 1; k < bb; ++k) {
            r += st;
            if (r >= bb) r -= bb;
            if (r == 0) continue;
            acc += (__int128)(2 * (long long)r - (long long)bb) *
                   (2 * (long long)k - (long long)bb);
        }
        return Rational(Int(acc), 4 * b * b);
    }
    Int acc = 0;
    Int r = 0;
    for (Int k = 1; k < b; ++k) {
        r += step;
        if (r >= b) r -= b;
        if (r == 0) continue;
        acc += (2 * r - b) * (2 * k - b);
    }
    return Rational(acc, 4 * b * b);
}

// Right side of Dedekind reciprocity:
//   s(a, b) + s(b, a) = -1/4 + (a/b + 1/(ab) + b/a) / 12
inline Rational reciprocity_rhs(const Int& a, const Int& b) {
    if (a < 1 || b < 1) throw std::domain_error("reciprocity_rhs: arguments must be >= 1");
    if (gcd(a, b) != 1) throw std::domain_error("reciprocity_rhs: gcd(a, b) must be 1");
    return Rational(a * a + b * b + 1, 12 * a * b) - Rational(1, 4);
}

// a * M_k(a; b) as an integer.  M_0 = 1 by the 0^0 = 1 convention.
inline Int moment_scaled(const Int& a, const Int& b, unsigned k) {
    if (a < 1 || b < 1) throw std::domain_error("moment_scaled: arguments must be >= 1");
    if (k == 0) return a;
    const unsigned wb = detail::bit_width(b);
    const unsigned wa = detail::bit_width(a);
    // Fast path: the scaled moment is at most a * b^k < 2^120.
    if (detail::fits_u64(a) && detail::fits_u64(b) && wb * k + wa <= 120) {
        const unsigned long long au = a.convert_to<unsigned long long>();
        const unsigned long long bu = b.convert_to<unsigned long long>();
        unsigned __int128 acc = 0;
        for (unsigned long long m = 1; m < au; ++m) {
            const unsigned long long f = (unsigned long long)((unsigned __int128)m * bu / au);
            unsigned __int128 t = 1;
            for (unsigned i = 0; i < k; ++i) t *= f;
            acc += t;
        }
        return Int(acc);
    }
    Int acc = 0;
    for (Int m = 1; m < a; ++m) acc += ipow(m * b / a, k);
    return acc;
}

inline Rational moment(const Int& a, const Int& b, unsigned k) {
    return Rational(moment_scaled(a, b, k), a);
}

// a * S_d(a; b_1..b_d) as an integer.
inline Int generalized_sum_scaled(const SumParams& p) {
    p.validate();
    // Fast path: the scaled sum is at most a * prod(b_i) < 2^120.
    unsigned wsum = detail::bit_width(p.a);
    for (const Int& bi : p.b) wsum += detail::bit_width(bi);
    bool small = detail::fits_u64(p.a) && wsum <= 120;
    for (const Int& bi : p.b) small = small && detail::fits_u64(bi);
    if (small) {
        const unsigned long long au = p.a.convert_to<unsigned long long>();
        std::vector<unsigned long long> bs;
        bs.reserve(p.b.size());
        for (const Int& bi : p.b) bs.push_back(bi.convert_to<unsigned long long>());
        unsigned __int128 acc = 0;
        for (unsigned long long m = 1; m < au; ++m) {
            unsigned __int128 t = 1;
            for (unsigned long long bu : bs) {
                t *= (unsigned long long)((unsigned __int128)m * bu / au);
                if (t == 0) break;
            }
            acc += t;
        }
        return Int(acc);
    }
    Int acc = 0;
    for (Int m = 1; m < p.a; ++m) {
        Int t = 1;
        for (const Int& bi : p.b) {
            t *= m * bi / p.a;
            if (t == 0) break;
        }
        acc += t;
    }
    return acc;
}

inline Rational generalized_sum(const SumParams& p) {
    return Rational(generalized_sum_scaled(p), p.a);
}

inline Rational generalized_sum(const Int& a, const std::vector<Int>& b) {
    return generalized_sum(SumParams{a, b});
}

// M_2 via the classical-sum bridge; valid exactly when gcd(a, b) = 1:
//   M_2(a; b) = (b^2+1)(a-1)(2a-1)/(6a^2) - (a-1)b/(2a) - (2b/a) s(b, a)
inline Rational moment_via_m2_bridge(const Int& a, const Int& b) {
    if (a < 1 || b < 1) throw std::domain_error("m2 bridge: arguments must be >= 1");
    if (gcd(a, b) != 1) throw std::domain_error("m2 bridge: gcd(a, b) must be 1");
    return Rational((b * b + 1) * (a - 1) * (2 * a - 1), 6 * a * a) -
           Rational((a - 1) * b, 2 * a) - Rational(2 * b, a) * dedekind_sum(b, a);
}

}  // namespace dedekind
