#pragma once

// Upper bounds for S_d(a; b_1..b_d) by iterated Cauchy-Schwarz.
//
// Splitting the product inside S_d into two groups of sizes k and d-k and
// applying Cauchy-Schwarz leaves the same shape with squared factors, so the
// split recurses by halving until each group is a single coordinate, where
// (1/a) sum_m f_i(m)^{2^s} = M_{2^s}(a; b_i) terminates the recursion:
//
//   S_d <= prod_i M_{k_i}(a; b_i)^{e_i},   sum e_i = 1.
//
// A recipe records (order, exponent) factors per coordinate.  The symmetric
// variant applies the bound over all coordinate permutations and takes the
// geometric mean, which averages the exponent mass per order across
// coordinates.  Since the exponents sum to 1, the same bound holds verbatim
// between the scaled integers T = a S_d and U_k = a M_k, and raising to
// N = lcm of exponent denominators turns dominance into an exact integer
// comparison T^N <= prod U^(e N).

#include "dedekind/core_sums.hpp"
#include "dedekind/decimal.hpp"
#include "dedekind/frequency.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <vector>

namespace dedekind {

struct RecipeFactor {
    unsigned order;       // moment order k of M_k
    Rational exponent;    // positive, denominators are powers of two pre-averaging
};

struct BoundRecipe {
    int d = 0;
    std::vector<std::vector<RecipeFactor>> coords;  // one factor list per coordinate
    bool symmetric = false;
    std::string name;

    // lcm of all exponent denominators; the root of the assembled bound.
    unsigned common_root() const {
        Int l = 1;
        for (const auto& cs : coords)
            for (const auto& f : cs) l = lcm(l, denominator(f.exponent));
        return l.convert_to<unsigned>();
    }

    std::string display() const {
        const unsigned N = common_root();
        std::string out;
        if (symmetric) {
            out = "(prod";
            for (const auto& f : coords.front()) {
                const Int e = numerator(f.exponent) * N / denominator(f.exponent);
                out += " M" + std::to_string(f.order);
                if (e != 1) out += "^" + e.str();
            }
            out += ")^(1/" + std::to_string(N) + ")";
        } else {
            for (std::size_t i = 0; i < coords.size(); ++i) {
                for (const auto& f : coords[i]) {
                    if (!out.empty()) out += " ";
                    out += "M" + std::to_string(f.order) + "(b" + std::to_string(i + 1) + ")";
                    if (f.exponent != 1) {
                        if (is_integer(f.exponent))
                            out += "^" + numerator(f.exponent).str();
                        else
                            out += "^(" + numerator(f.exponent).str() + "/" +
                                   denominator(f.exponent).str() + ")";
                    }
                }
            }
        }
        return out;
    }
};

namespace detail {

// Factor lists for a group of `t` coordinates whose entries carry power `p`,
// contributing total exponent mass `scale`: halve until singletons.
inline std::vector<std::vector<RecipeFactor>> recipe_leaves(int t, unsigned p,
                                                            const Rational& scale) {
    if (t == 1) return {{RecipeFactor{p, scale}}};
    const int t1 = t / 2;
    auto left = recipe_leaves(t1, 2 * p, scale / 2);
    auto right = recipe_leaves(t - t1, 2 * p, scale / 2);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

}  // namespace detail

// The recipe from a top split into k and d-k coordinates followed by
// halving.  symmetric = true averages exponent mass per order over all
// coordinates.
inline BoundRecipe recipe_split(int d, int k, bool symmetric) {
    if (d < 2 || k < 1 || k >= d)
        throw std::domain_error("recipe_split: requires d >= 2, 1 <= k < d");
    BoundRecipe r;
    r.d = d;
    r.symmetric = symmetric;
    r.name = "split(" + std::to_string(d) + "," + std::to_string(k) + ")" +
             (symmetric ? "-sym" : "-asym");
    r.coords = detail::recipe_leaves(k, 2, Rational(1, 2));
    auto right = detail::recipe_leaves(d - k, 2, Rational(1, 2));
    r.coords.insert(r.coords.end(), right.begin(), right.end());
    if (symmetric) {
        std::map<unsigned, Rational> mass;
        for (const auto& cs : r.coords)
            for (const auto& f : cs) mass[f.order] += f.exponent;
        std::vector<RecipeFactor> per_coord;
        for (const auto& [order, m] : mass) per_coord.push_back(RecipeFactor{order, m / d});
        r.coords.assign(d, per_coord);
    }
    return r;
}

inline BoundRecipe default_recipe(int d) { return recipe_split(d, d / 2, true); }

// Representative recipes for dimension d: balanced and edge splits, each in
// both symmetric and per-coordinate form.
inline std::vector<BoundRecipe> recipes_for(int d) {
    std::vector<BoundRecipe> out;
    out.push_back(default_recipe(d));
    out.push_back(recipe_split(d, d / 2, false));
    if (d / 2 != 1) {
        out.push_back(recipe_split(d, 1, true));
        out.push_back(recipe_split(d, 1, false));
    }
    return out;
}

// The closed families d = base * 2^k, base in {1 (d a power of two), 3, 5},
// where halving stays balanced and the symmetric recipe involves at most two
// moment orders.
inline BoundRecipe family_recipe(int base, int k) {
    if ((base != 1 && base != 3 && base != 5) || k < 0)
        throw std::domain_error("family_recipe: base in {1,3,5}, k >= 0");
    const int d = base << k;
    if (d < 2) throw std::domain_error("family_recipe: dimension must be >= 2");
    BoundRecipe r = default_recipe(d);
    r.name = "family(" + std::to_string(base) + "," + std::to_string(k) + ")";
    return r;
}

// A value of the form powered^(1/root), kept exact.
struct RootedValue {
    Rational powered;
    unsigned root = 1;

    std::string decimal(unsigned places, Round mode = Round::trunc) const {
        return format_root(powered, root, places, mode);
    }
    std::string significant(unsigned sig) const { return format_sig_root(powered, root, sig); }
    double approx() const {
        return std::pow(powered.convert_to<double>(), 1.0 / static_cast<double>(root));
    }
};

namespace detail {

inline void check_recipe_args(const Int& a, const std::vector<Int>& bs, const BoundRecipe& r) {
    if (static_cast<int>(bs.size()) != r.d)
        throw std::domain_error("recipe arity does not match argument count");
    SumParams{a, bs}.validate();
}

}  // namespace detail

// prod_i M_{k}(a; b_i)^{e}: an upper bound for S_d(a; bs).  Degenerate
// coordinates (zero moment, i.e. b_i = 1 or a = 1) are rejected.
inline RootedValue upper_bound(const Int& a, const std::vector<Int>& bs, const BoundRecipe& r) {
    detail::check_recipe_args(a, bs, r);
    const unsigned N = r.common_root();
    Rational powered = 1;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (const auto& f : r.coords[i]) {
            const Rational m = moment(a, bs[i], f.order);
            if (m == 0)
                throw std::domain_error("upper_bound: zero moment at coordinate " +
                                        std::to_string(i + 1));
            const Int e = numerator(f.exponent) * N / denominator(f.exponent);
            powered *= pow_rat(m, e.convert_to<unsigned>());
        }
    }
    return RootedValue{powered, N};
}

// Same bound against the scaled sum T = a S_d: prod_i U_k(a; b_i)^(e).
inline RootedValue scaled_upper_bound(const Int& a, const std::vector<Int>& bs,
                                      const BoundRecipe& r) {
    detail::check_recipe_args(a, bs, r);
    const unsigned N = r.common_root();
    Rational powered = 1;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (const auto& f : r.coords[i]) {
            const Int u = moment_scaled(a, bs[i], f.order);
            if (u == 0)
                throw std::domain_error("scaled_upper_bound: zero moment at coordinate " +
                                        std::to_string(i + 1));
            const Int e = numerator(f.exponent) * N / denominator(f.exponent);
            powered *= Rational(ipow(u, e.convert_to<unsigned>()));
        }
    }
    return RootedValue{powered, N};
}

// Exact dominance: T^N <= prod U^(e N), entirely in integers.
inline bool bound_holds(const Int& a, const std::vector<Int>& bs, const BoundRecipe& r) {
    detail::check_recipe_args(a, bs, r);
    const unsigned N = r.common_root();
    const Int t = generalized_sum_scaled(SumParams{a, bs});
    Int rhs = 1;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (const auto& f : r.coords[i]) {
            const Int e = numerator(f.exponent) * N / denominator(f.exponent);
            rhs *= ipow(moment_scaled(a, bs[i], f.order), e.convert_to<unsigned>());
        }
    }
    return ipow(t, N) <= rhs;
}

// R_d = S_d / prod M^e under the balanced symmetric recipe, carried as
// (R_d)^N.  Generalizes the two-coordinate correlation ratio (d = 2 gives
// root 2 and the squared cosine).
inline RootedValue ratio_d(const Int& a, const std::vector<Int>& bs) {
    const BoundRecipe r = default_recipe(static_cast<int>(bs.size()));
    const RootedValue denom = scaled_upper_bound(a, bs, r);
    const Int t = generalized_sum_scaled(SumParams{a, bs});
    return RootedValue{Rational(ipow(t, denom.root)) / denom.powered, denom.root};
}

struct ConditionalReport {
    Rational s2;
    bool table_ok;     // S_2 recovered from the joint frequency table
    bool diagonal_ok;  // S_2(a; b, b) = M_2(a; b)
    Rational r2_sq;    // squared correlation ratio of the pair
};

// S_2(a; b, c) decomposed through the joint floor-value distribution:
// a S_2 = sum_{j,j'} j j' F(j, j'), with the diagonal collapse to M_2.
inline ConditionalReport conditional_decomposition(const Int& a, const Int& b, const Int& c) {
    ConditionalReport rep;
    rep.s2 = generalized_sum(a, {b, c});
    const FreqTable2D f = freq2d_direct(a, b, c);
    Int acc = 0;
    for (std::size_t j = 0; j < f.cells.size(); ++j)
        for (std::size_t jp = 0; jp < f.cells[j].size(); ++jp)
            if (f.cells[j][jp]) acc += Int(j) * Int(jp) * f.cells[j][jp];
    rep.table_ok = Rational(acc, a) == rep.s2;
    rep.diagonal_ok = generalized_sum(a, {b, b}) == moment(a, b, 2);
    rep.r2_sq = ratio_d(a, {b, c}).powered;
    return rep;
}

enum class MomentClass {
    zero_degenerate,          // all floor values vanish (b = 1 or a = 1)
    single_value_degenerate,  // one distinct nonzero floor value (e.g. b = 2)
    regular,
};

struct LogConvexityReport {
    MomentClass cls = MomentClass::regular;
    long long checked = 0;
    bool convexity_ok = true;  // M_{2r} M_{2r+2} >= M_{2r+1}^2, strict iff regular
    bool liapounov_ok = true;  // M_r^{r+1} <= M_{r+1}^r, strict iff not zero_degenerate
};

// Log-convexity of the moment sequence in r.  Equality cases follow the
// Cauchy-Schwarz equality condition: the convexity step degenerates exactly
// when the floor profile takes at most one nonzero value, the Liapounov step
// exactly when the profile (which always contains f(0) = 0) is identically
// zero.
inline LogConvexityReport log_convexity_check(const Int& a, const Int& b, int r_max) {
    if (a < 1 || b < 1 || r_max < 1)
        throw std::domain_error("log_convexity_check: requires a, b, r_max >= 1");
    LogConvexityReport rep;

    std::vector<Int> floors;
    for (Int m = 1; m < a; ++m) floors.push_back(m * b / a);
    std::vector<Int> distinct;
    for (const Int& f : floors)
        if (f != 0 && std::find(distinct.begin(), distinct.end(), f) == distinct.end())
            distinct.push_back(f);
    rep.cls = distinct.empty() ? MomentClass::zero_degenerate
              : distinct.size() == 1 ? MomentClass::single_value_degenerate
                                     : MomentClass::regular;

    const int k_max = 2 * r_max + 2;
    std::vector<Int> u(k_max + 1, 0);  // u[k] = a M_k
    for (const Int& f : floors) {
        if (f == 0) continue;
        Int p = 1;
        for (int k = 1; k <= k_max; ++k) {
            p *= f;
            u[k] += p;
        }
    }

    for (int r = 1; r <= r_max; ++r) {
        const Int lhs = u[2 * r] * u[2 * r + 2];
        const Int rhs = u[2 * r + 1] * u[2 * r + 1];
        ++rep.checked;
        if (rep.cls == MomentClass::regular ? !(lhs > rhs) : lhs != rhs)
            rep.convexity_ok = false;
    }
    for (int r = 1; r <= r_max; ++r) {
        const Int lhs = ipow(u[r], r + 1);
        const Int rhs = ipow(u[r + 1], r) * a;
        ++rep.checked;
        if (rep.cls == MomentClass::zero_degenerate ? lhs != rhs : !(lhs < rhs))
            rep.liapounov_ok = false;
    }
    return rep;
}

struct S5Row {
    Int a;
    std::vector<Int> b;
    Int scaled_sum;      // T = a S_5
    RootedValue bound;   // bound on T under the balanced symmetric recipe
    RootedValue ratio;   // R_5 = T / bound
};

inline std::vector<S5Row> s5_benchmark() {
    static const std::vector<std::pair<int, std::array<int, 5>>> data = {
        {31, {3, 5, 7, 11, 13}}, {21, {5, 7, 9, 11, 13}}, {23, {5, 9, 11, 13, 17}},
        {27, {5, 11, 13, 17, 21}}, {33, {7, 11, 13, 19, 23}},
    };
    std::vector<S5Row> rows;
    for (const auto& [a, bs] : data) {
        S5Row row;
        row.a = a;
        row.b.assign(bs.begin(), bs.end());
        row.scaled_sum = generalized_sum_scaled(SumParams{row.a, row.b});
        row.bound = scaled_upper_bound(row.a, row.b, default_recipe(5));
        row.ratio = ratio_d(row.a, row.b);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dedekind
