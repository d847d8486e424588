#pragma once

// Lattice frequency tables.
//
//   f_{a;b}(j)    = #{ m in [0, a) : floor(m b / a) = j },      j in [0, b)
//   f_{a;b,c}(j,k)= #{ m in [0, a) : floor(m b / a) = j and floor(m c / a) = k }
//
// For b <= a every count is floor(a/b) or floor(a/b) + 1; the excess bits
// form the indicator vector I_{a;b}.  Writing l = a mod b, the indicator
// coincides with the frequency vector of the reduced pair: I_{a;b} = f_{l;b}
// (each box [j a/b, (j+1) a/b) holds floor(a/b) + #(integers in
// [j l/b, (j+1) l/b)) lattice points).  bounds.hpp leans on this.
//
// Besides direct counting, both tables have reconstruction procedures:
// freq1d_appendix rebuilds f_{a;b} from floor differences plus a boundary
// correction pass, and freq2d_appendix rebuilds the joint table from its two
// marginals with a greedy northwest-corner fill.  m -> (floor(mb/a),
// floor(mc/a)) is a monotone staircase in both coordinates, which is exactly
// the coupling the northwest-corner rule reconstructs, so the greedy fill is
// expected to agree with direct counting; the test suite sweeps for
// mismatches and reports any as findings.

#include "dedekind/rational.hpp"

#include <algorithm>

namespace dedekind {

struct FreqTable1D {
    Int a, b;
    std::vector<long long> counts;  // size b, sums to a
};

struct FreqTable2D {
    Int a, b, c;
    std::vector<std::vector<long long>> cells;  // b rows, c columns, sums to a

    std::vector<long long> row_marginals() const {
        std::vector<long long> r(cells.size(), 0);
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (long long v : cells[i]) r[i] += v;
        return r;
    }
    std::vector<long long> col_marginals() const {
        std::vector<long long> r(cells.empty() ? 0 : cells[0].size(), 0);
        for (const auto& row : cells)
            for (std::size_t j = 0; j < row.size(); ++j) r[j] += row[j];
        return r;
    }
};

struct IndicatorVector {
    Int a, b;
    std::vector<int> bits;  // size b, each 0 or 1
};

namespace detail {

// Table construction is O(a) time and O(b) memory; keep both addressable.
inline long long table_arg(const Int& x, const char* what) {
    if (x < 1) throw std::domain_error(std::string(what) + " must be >= 1");
    if (x > (Int(1) << 40)) throw std::domain_error(std::string(what) + " too large for a table");
    return x.convert_to<long long>();
}

}  // namespace detail

inline FreqTable1D freq1d_direct(const Int& a, const Int& b) {
    const long long an = detail::table_arg(a, "a");
    const long long bn = detail::table_arg(b, "b");
    FreqTable1D t{a, b, std::vector<long long>(static_cast<std::size_t>(bn), 0)};
    for (long long m = 0; m < an; ++m)
        ++t.counts[static_cast<std::size_t>((__int128)m * bn / an)];
    return t;
}

// Reconstruction of f_{a;b} from floor differences (requires b <= a).
inline FreqTable1D freq1d_appendix(const Int& a, const Int& b) {
    const long long an = detail::table_arg(a, "a");
    const long long bn = detail::table_arg(b, "b");
    if (bn > an) throw std::domain_error("freq1d_appendix: requires b <= a");
    std::vector<long long> f(static_cast<std::size_t>(bn), 0);

    // STEP 0: integer ratio r = a/b enters via floor(i*r) = (i*a)/b; l = a mod b.
    const long long q = an / bn;
    const long long l = an % bn;

    if (l == 0) {
        // Every box [ja/b, (j+1)a/b) has integer endpoints and exactly a/b
        // lattice points; the STEP 1 seeds below assume l > 0 (they would
        // overfill f[0] by one and shortchange f[b-1]), so the exact-split
        // case is emitted directly.
        std::fill(f.begin(), f.end(), q);
        return FreqTable1D{a, b, std::move(f)};
    }

    // STEP 1: seed with floor differences.  For l > 0 the first box holds
    // floor(a/b) + 1 points and the last a - 1 - floor((b-1)a/b).
    auto fl = [&](long long i) { return (__int128)i * an / bn; };
    f[0] = q + 1;
    for (long long i = 1; i <= bn - 2; ++i)
        f[static_cast<std::size_t>(i)] = static_cast<long long>(fl(i + 1) - fl(i));
    if (bn >= 2)
        f[static_cast<std::size_t>(bn - 1)] = an - 1 - static_cast<long long>(fl(bn - 1));

    // STEP 2: boundary corrections.  When (i+1)a/b is an integer the floor
    // difference credits that lattice point to box i, but the half-open boxes
    // put it in box i+1; shift one unit right at every such interior boundary.
    // (b = 2 has no interior boundaries, hence the early exit in the listing.)
    if (bn > 2) {
        for (long long i = 1; i <= bn - 2; ++i)
            if ((__int128)(i + 1) * an % bn == 0) {
                --f[static_cast<std::size_t>(i)];
                ++f[static_cast<std::size_t>(i + 1)];
            }
    }
    return FreqTable1D{a, b, std::move(f)};
}

inline FreqTable2D freq2d_direct(const Int& a, const Int& b, const Int& c) {
    const long long an = detail::table_arg(a, "a");
    const long long bn = detail::table_arg(b, "b");
    const long long cn = detail::table_arg(c, "c");
    if ((__int128)bn * cn > (1 << 26)) throw std::domain_error("freq2d: table too large");
    FreqTable2D t{a, b, c,
                  std::vector<std::vector<long long>>(static_cast<std::size_t>(bn),
                                                      std::vector<long long>(static_cast<std::size_t>(cn), 0))};
    for (long long m = 0; m < an; ++m) {
        const auto j = static_cast<std::size_t>((__int128)m * bn / an);
        const auto k = static_cast<std::size_t>((__int128)m * cn / an);
        ++t.cells[j][k];
    }
    return t;
}

// Greedy reconstruction of the joint table from its marginals (requires
// b <= a and c <= a): row-major northwest-corner fill where each cell takes
// the smaller of its row and column remainders.
inline FreqTable2D freq2d_appendix(const Int& a, const Int& b, const Int& c) {
    const long long an = detail::table_arg(a, "a");
    const long long bn = detail::table_arg(b, "b");
    const long long cn = detail::table_arg(c, "c");
    if (bn > an || cn > an) throw std::domain_error("freq2d_appendix: requires b, c <= a");
    if ((__int128)bn * cn > (1 << 26)) throw std::domain_error("freq2d: table too large");

    // STEP 0: the two marginals and per-row/per-column running totals.
    const std::vector<long long> fb = freq1d_direct(a, b).counts;
    const std::vector<long long> fc = freq1d_direct(a, c).counts;
    std::vector<std::vector<long long>> cells(fb.size(), std::vector<long long>(fc.size(), 0));
    std::vector<long long> t1(fb.size(), 0);  // filled so far in row i
    std::vector<long long> t2(fc.size(), 0);  // filled so far in column j

    auto clamp0 = [](long long v) { return v < 0 ? 0LL : v; };

    // STEP 1: corner cell takes min of the two first marginals.
    cells[0][0] = std::min(fb[0], fc[0]);
    t1[0] = t2[0] = cells[0][0];

    // STEP 2: rest of column 0, capped by the column remainder f_c[0] - t2[0].
    // (The capacity reference is the first column's own marginal, mirroring
    // STEP 3's use of f_b[0] for row 0; the original listing's f_c[1] does
    // not refer to the column being filled.)
    for (std::size_t i = 1; i < fb.size(); ++i) {
        cells[i][0] = clamp0(std::min(fc[0] - t2[0], fb[i]));
        t2[0] += cells[i][0];
        t1[i] = cells[i][0];
    }

    // STEP 3: rest of row 0, capped by the row remainder f_b[0] - t1[0].
    for (std::size_t j = 1; j < fc.size(); ++j) {
        cells[0][j] = clamp0(std::min(fb[0] - t1[0], fc[j]));
        t1[0] += cells[0][j];
        t2[j] = cells[0][j];
    }

    // STEP 4: interior cells in row-major order; each takes the smaller of
    // the row and column remainders, clamped at zero.
    for (std::size_t i = 1; i < fb.size(); ++i)
        for (std::size_t j = 1; j < fc.size(); ++j) {
            const long long cty = clamp0(std::min(fb[i] - t1[i], fc[j]));
            const long long ctx = clamp0(std::min(fc[j] - t2[j], fb[i]));
            cells[i][j] = std::min(ctx, cty);
            t1[i] += cells[i][j];
            t2[j] += cells[i][j];
        }

    // STEP 5: marginals are not stored; serialization re-derives them.
    return FreqTable2D{a, b, c, std::move(cells)};
}

inline IndicatorVector indicator(const Int& a, const Int& b) {
    if (b > a) throw std::domain_error("indicator: requires b <= a");
    const FreqTable1D t = freq1d_direct(a, b);
    const long long q = (a / b).convert_to<long long>();
    IndicatorVector iv{a, b, std::vector<int>(t.counts.size(), 0)};
    for (std::size_t j = 0; j < t.counts.size(); ++j) {
        const long long bit = t.counts[j] - q;
        if (bit != 0 && bit != 1) throw std::logic_error("indicator: count out of range");
        iv.bits[j] = static_cast<int>(bit);
    }
    return iv;
}

// CSV serialization, one layout for both tables: k-indices across the header,
// j-indices down the first column, marginals in the final row/column, and the
// total a in the bottom-right corner.
inline std::string to_csv(const FreqTable1D& t) {
    std::string out = "j";
    for (std::size_t j = 0; j < t.counts.size(); ++j) out += "," + std::to_string(j);
    out += ",total\nf";
    for (long long v : t.counts) out += "," + std::to_string(v);
    out += "," + t.a.str() + "\n";
    return out;
}

inline std::string to_csv(const FreqTable2D& t) {
    const auto fb = t.row_marginals();
    const auto fc = t.col_marginals();
    std::string out = "j";
    for (std::size_t k = 0; k < fc.size(); ++k) out += "," + std::to_string(k);
    out += ",f\n";
    for (std::size_t j = 0; j < t.cells.size(); ++j) {
        out += std::to_string(j);
        for (long long v : t.cells[j]) out += "," + std::to_string(v);
        out += "," + std::to_string(fb[j]) + "\n";
    }
    out += "f";
    for (long long v : fc) out += "," + std::to_string(v);
    out += "," + t.a.str() + "\n";
    return out;
}

}  // namespace dedekind
