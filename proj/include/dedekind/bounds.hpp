#pragma once

// Bounds for the scaled second moment a * M_2(a; b).
//
// Splitting the defining sum along the indicator decomposition
// f_{a;b} = floor(a/b) + I_{a;b} gives
//
//   a * M_2(a; b) = floor(a/b) * (b-1)b(2b-1)/6 + D_2(a; b)
//
// with the residual moment D_2(a; b) = sum_j j^2 I_{a;b}(j).  Because
// I_{a;b} = f_{l;b} for l = a mod b, the residual collapses to
// D_2 = sum_{m=1}^{l-1} floor(m b / l)^2 = l * M_2(l; b): it depends on a
// only through l.  The report assembles:
//
//   flb1  floor lower bound: residual >= floor(b/l)^2 (l-1)l(2l-1)/6
//   flb2  refined floor bound, from the split floor(mb/l) = m floor(b/l)
//         + floor(m (b mod l) / l); exact for b mod l <= 2, else a lower bound
//   fub   floor upper bound: residual <= floor(b^2 (l-1)(2l-1) / (6l))
//   rlb / rub  reciprocity bounds, from |s(b, l)| <= s(1, l) inside the
//         M_2 bridge; they need gcd(a, b) = 1 and are omitted otherwise.
//         At l = 1 both collapse to the exact value (s(1, 1) = 0).

#include "dedekind/core_sums.hpp"
#include "dedekind/decimal.hpp"
#include "dedekind/frequency.hpp"

#include <array>
#include <optional>
#include <utility>

namespace dedekind {

struct ResidualMoment {
    Int a, b, l;
    Int value;  // D_2(a; b)
};

// D_2 by both routes (indicator sum and reduced second moment); they agree
// identically, and the computation cross-checks rather than trusting one.
inline ResidualMoment d2(const Int& a, const Int& b) {
    if (b < 1 || b > a) throw std::domain_error("d2: requires 1 <= b <= a");
    const Int l = a % b;
    const IndicatorVector iv = indicator(a, b);
    Int via_indicator = 0;
    for (std::size_t j = 0; j < iv.bits.size(); ++j)
        if (iv.bits[j]) via_indicator += Int(j) * Int(j);
    const Int via_reduced = l >= 1 ? moment_scaled(l, b, 2) : Int(0);
    if (via_indicator != via_reduced)
        throw std::logic_error("d2: indicator route disagrees with reduced-moment route");
    return ResidualMoment{a, b, l, via_reduced};
}

// Closed forms of D_2 for l = a mod b in 0..5, polynomial in floor(b/l) with
// cases by b mod l.
inline Int d2_closed_form(const Int& l, const Int& b) {
    if (l < 0 || l > 5) throw std::domain_error("d2_closed_form: l must be in 0..5");
    if (b <= l || b < 2) throw std::domain_error("d2_closed_form: requires b > l, b >= 2");
    if (l <= 1) return 0;
    const Int t = b / l;
    const Int r = b % l;
    switch (l.convert_to<int>()) {
        case 2:
            return t * t;
        case 3:
            if (r == 2) return 5 * t * t + 4 * t + 1;
            return 5 * t * t;
        case 4:
            if (r == 2) return 14 * t * t + 10 * t + 2;
            if (r == 3) return 14 * t * t + 16 * t + 5;
            return 14 * t * t;
        default:  // l = 5
            if (r == 2) return 30 * t * t + 14 * t + 2;
            if (r == 3) return 30 * t * t + 26 * t + 6;
            if (r == 4) return 30 * t * t + 40 * t + 14;
            return 30 * t * t;
    }
}

struct RefinedResidual {
    Int value;
    bool exact;  // true for k = b mod l in {0, 1, 2}; lower bound for k >= 3
    Int k;
};

// Refined residual via floor(m b / l) = m floor(b/l) + floor(m k / l) with
// k = b mod l.  For k <= 1 the second term vanishes; for k = 2 it is a step
// function and the expansion is exact; for k >= 3, floor(mk/l) >= floor(2m/l)
// termwise, so the k = 2 expression is a lower bound.
inline RefinedResidual d2_refined(const Int& a, const Int& b) {
    if (b < 1 || b > a) throw std::domain_error("d2_refined: requires 1 <= b <= a");
    const Int l = a % b;
    if (l <= 1) return RefinedResidual{Int(0), true, Int(0)};
    const Int q = b / l;
    const Int k = b % l;
    const Int base = q * q * (l - 1) * l * (2 * l - 1) / 6;
    if (k <= 1) return RefinedResidual{base, true, k};
    Int extra;
    if (l % 2 == 0) {
        extra = q * ((l - 1) * l - l * (l - 2) / 4) + l / 2;
    } else {
        const Int h = l / 2;
        extra = q * ((l - 1) * l - h * (1 + h)) + h;
    }
    return RefinedResidual{base + extra, k == 2, k};
}

struct BoundsReport {
    Int a, b, l;
    Int exact;  // a * M_2(a; b)
    Int flb1, flb2, fub;
    bool flb2_exact;
    std::optional<Rational> rlb, rub;  // present iff gcd(a, b) = 1
};

inline BoundsReport bounds_report(const Int& a, const Int& b) {
    if (b < 2 || b > a) throw std::domain_error("bounds_report: requires 2 <= b <= a");
    BoundsReport r;
    r.a = a;
    r.b = b;
    r.l = a % b;
    r.exact = moment_scaled(a, b, 2);
    const Int base = (a / b) * (b - 1) * b * (2 * b - 1) / 6;
    r.flb1 = base + (r.l >= 2 ? (b / r.l) * (b / r.l) * (r.l - 1) * r.l * (2 * r.l - 1) / 6 : Int(0));
    const RefinedResidual ref = d2_refined(a, b);
    r.flb2 = base + ref.value;
    r.flb2_exact = ref.exact;
    r.fub = base + (r.l >= 2 ? b * b * (r.l - 1) * (2 * r.l - 1) / (6 * r.l) : Int(0));
    if (gcd(a, b) == 1) {
        // a*M_2 = (b^2+1)(a-1)(2a-1)/(6a) - (a-1)b/2 - 2b s(b, a), and
        // s(b, a) = R(a, b) - R(b, l) + s(b, l) with |s(b, l)| <= s(1, l).
        const Rational common =
            Rational((b * b + 1) * (a - 1) * (2 * a - 1), 6 * a) - Rational((a - 1) * b, 2);
        const Rational rr = reciprocity_rhs(a, b) - reciprocity_rhs(b, r.l);
        const Rational s1l = Rational((r.l - 1) * (r.l - 2), 12 * r.l);
        r.rlb = common - 2 * b * (rr + s1l);
        r.rub = common - 2 * b * (rr - s1l);
    }
    return r;
}

// Cell rendering for the report table: integers plain; short exact decimals
// (at most two places) verbatim; anything else rounded to one place.
inline std::string bound_cell(const Rational& x) {
    if (is_integer(x)) return numerator(x).str();
    if (fits_places(x, 2)) return strip_zeros(format_fixed(x, 2, Round::trunc));
    return format_fixed(x, 1, Round::half_away);
}

inline const std::string kBoundsCsvHeader = "a,b,exact,flb1,flb2,rlb,fub,rub";

// The fub value printed in the reference table: for l <= 3 the refined
// residual is always exact (b mod l <= 2 there), and the table prints that
// collapsed value instead of the floor-formula bound.
inline Int table_fub(const BoundsReport& r) { return r.l <= 3 ? r.flb2 : r.fub; }

inline std::string to_csv_row(const BoundsReport& r) {
    std::string out = r.a.str() + "," + r.b.str() + "," + r.exact.str() + "," + r.flb1.str() +
                      "," + r.flb2.str() + ",";
    if (r.rlb) out += bound_cell(*r.rlb);
    out += "," + table_fub(r).str() + ",";
    if (r.rub) out += bound_cell(*r.rub);
    return out;
}

// The 30 (a, b) rows of the built-in benchmark table.
inline const std::array<std::pair<int, int>, 30>& benchmark_pairs() {
    static const std::array<std::pair<int, int>, 30> rows = {{
        {5, 2},  {5, 3},  {5, 4},  {6, 2},  {6, 3},  {6, 4},  {6, 5},  {7, 2},
        {7, 3},  {7, 4},  {7, 5},  {7, 6},  {35, 7}, {39, 7}, {40, 7}, {41, 7},
        {10, 3}, {11, 3}, {21, 6}, {20, 6}, {11, 7}, {10, 9}, {11, 9}, {12, 9},
        {13, 9}, {14, 9}, {15, 9}, {16, 9}, {17, 9}, {24, 10},
    }};
    return rows;
}

}  // namespace dedekind
