// Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
// failures.  Each criterion re-derives its expected values from scratch so a
// regression in any layer (arithmetic, tables, bounds, geometry, CLI-facing
// renderers) trips exactly the criteria that depend on it.

#include "dedekind/dedekind.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using dedekind::Int;
using dedekind::Rational;
using dedekind::Round;

int failures = 0;

void criterion(int number, const char* label, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double dt =
        std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() -
                                                                  t0)
            .count();
    const bool in_time = limit_seconds <= 0 || dt <= limit_seconds;
    const bool pass = ok && in_time;
    if (limit_seconds > 0)
        std::printf("%s criterion-%d %s (%.2fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", number,
                    label, dt, limit_seconds);
    else
        std::printf("%s criterion-%d %s (%.2fs)\n", pass ? "PASS" : "FAIL", number, label, dt);
    if (!pass) {
        ++failures;
        if (!ok && !detail.empty()) std::printf("  detail: %s\n", detail.c_str());
        if (!in_time) std::printf("  detail: over time limit\n");
    }
}

bool check(std::string& detail, bool cond, const std::string& what) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

// ------------------------------------------------------------------- 1 ----

bool crit_pair_sum(std::string& detail) {
    bool ok = check(detail, dedekind::generalized_sum_scaled({50, {13, 7}}) == 1236,
                    "a*S_2(50;13,7) != 1236");
    const auto t = dedekind::freq2d_direct(50, 13, 7);
    static const long long expect[13][7] = {
        {4, 0, 0, 0, 0, 0, 0}, {4, 0, 0, 0, 0, 0, 0}, {0, 4, 0, 0, 0, 0, 0},
        {0, 3, 1, 0, 0, 0, 0}, {0, 0, 4, 0, 0, 0, 0}, {0, 0, 2, 2, 0, 0, 0},
        {0, 0, 0, 3, 0, 0, 0}, {0, 0, 0, 2, 2, 0, 0}, {0, 0, 0, 0, 4, 0, 0},
        {0, 0, 0, 0, 1, 3, 0}, {0, 0, 0, 0, 0, 4, 0}, {0, 0, 0, 0, 0, 0, 4},
        {0, 0, 0, 0, 0, 0, 3},
    };
    ok = check(detail, t.cells.size() == 13, "joint table has wrong height") && ok;
    for (std::size_t j = 0; j < t.cells.size() && j < 13; ++j) {
        ok = check(detail, t.cells[j].size() == 7, "joint table has wrong width") && ok;
        for (std::size_t k = 0; k < t.cells[j].size() && k < 7; ++k)
            ok = check(detail, t.cells[j][k] == expect[j][k],
                       "cell (" + std::to_string(j) + "," + std::to_string(k) + ") off") &&
                 ok;
    }
    ok = check(detail,
               t.row_marginals() ==
                   std::vector<long long>{4, 4, 4, 4, 4, 4, 3, 4, 4, 4, 4, 4, 3},
               "row marginals off") &&
         ok;
    ok = check(detail, t.col_marginals() == std::vector<long long>{8, 7, 7, 7, 7, 7, 7},
               "column marginals off") &&
         ok;
    return ok;
}

// ------------------------------------------------------------------- 2 ----

bool crit_bounds_table(std::string& detail) {
    static const char* expect[30] = {
        "5,2,2,2,2,2,2,2",
        "5,3,6,6,6,6,6,6",
        "5,4,14,14,14,14,14,14",
        "6,2,3,3,3,,3,",
        "6,3,10,10,10,,10,",
        "6,4,18,18,18,,18,",
        "6,5,30,30,30,30,30,30",
        "7,2,3,3,3,3,3,3",
        "7,3,10,10,10,10,10,10",
        "7,4,19,19,19,19,19,19.9",
        "7,5,34,34,34,34,34,34",
        "7,6,55,55,55,55,55,55",
        "35,7,455,455,455,,455,",
        "39,7,490,469,481,486.5,497,490",
        "40,7,501,485,501,498.2,513,503.8",
        "41,7,510,510,510,510,529,517.8",
        "10,3,15,15,15,15,15,15",
        "11,3,16,16,16,16,16,16",
        "21,6,185,185,185,,185,",
        "20,6,174,174,174,,174,",
        "11,7,126,105,117,122.5,133,126",
        "10,9,204,204,204,204,204,204",
        "11,9,220,220,220,220,220,220",
        "12,9,249,249,249,,249,",
        "13,9,260,260,260,260,274,264.5",
        "14,9,288,234,250,280.8,301,288",
        "15,9,315,259,286,,327,",
        "16,9,328,295,328,322.9,354,335.7",
        "17,9,344,344,344,344,381,359.75",
        "24,10,648,626,648,,657,",
    };
    const auto& pairs = dedekind::benchmark_pairs();
    bool ok = check(detail, pairs.size() == 30, "benchmark list size");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto row = dedekind::to_csv_row(dedekind::bounds_report(pairs[i].first, pairs[i].second));
        ok = check(detail, row == expect[i], "row " + std::to_string(i + 1) + ": got " + row) && ok;
    }
    return ok;
}

// ------------------------------------------------------------------- 3 ----

bool crit_correlation_table(std::string& detail) {
    struct Cell {
        int a, b, c;
        const char* want;
    };
    static const Cell cells[10] = {
        {11, 2, 7, "0.9163"},  {11, 3, 7, "0.9800"},  {21, 2, 5, "0.9238"},
        {21, 3, 5, "0.9721"},  {18, 2, 11, "0.9297"}, {18, 3, 11, "0.9729"},
        {73, 2, 39, "0.9189"}, {73, 3, 39, "0.9695"}, {99, 2, 33, "0.9192"},
        {99, 3, 33, "0.9707"},
    };
    bool ok = true;
    for (const auto& c : cells) {
        const std::string got = dedekind::ratio2(c.a, c.b, c.c).decimal(4, Round::half_away);
        ok = check(detail,
                   got == c.want,
                   "R_2(" + std::to_string(c.a) + ";" + std::to_string(c.b) + "," +
                       std::to_string(c.c) + ") = " + got + ", want " + c.want) &&
             ok;
    }
    return ok;
}

// ------------------------------------------------------------------- 4 ----

bool crit_minimum_and_limits(std::string& detail) {
    Rational best_sq;
    Int best_a = 0, best_b = 0, best_c = 0;
    bool have = false;
    for (Int a = 3; a <= 35; ++a) {
        const auto m = dedekind::min_ratio(a);
        if (!have || m.value.signed_sq < best_sq) {
            best_sq = m.value.signed_sq;
            best_a = a;
            best_b = m.b;
            best_c = m.c;
            have = true;
        }
    }
    bool ok = check(detail, best_sq == Rational(3, 4), "minimum squared ratio != 3/4");
    ok = check(detail, best_a == 5 && best_b == 2 && best_c == 3,
               "minimum not attained at (5;2,3)") &&
         ok;

    ok = check(detail, dedekind::limit_ratio(2).decimal(6, Round::trunc) == "0.918558",
               "b=2 limit") &&
         ok;
    ok = check(detail, dedekind::limit_ratio(3).decimal(5, Round::trunc) == "0.96896",
               "b=3 limit") &&
         ok;
    ok = check(detail, dedekind::limit_ratio(4).decimal(4, Round::trunc) == "0.9836",
               "b=4 limit") &&
         ok;

    // Diagonal series: odd rows climb to the b=2 limit from below, even rows
    // descend from above.
    const auto rows = dedekind::figure_series(50);
    const Rational lim = dedekind::limit_ratio(2).signed_sq;
    ok = check(detail, rows.size() == 48, "diagonal series length") && ok;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const bool odd = rows[i].a % 2 == 1;
        ok = check(detail, odd ? rows[i].value.signed_sq < lim : rows[i].value.signed_sq > lim,
                   "series row a=" + rows[i].a.str() + " on the wrong side of the limit") &&
             ok;
        if (i >= 2)
            ok = check(detail,
                       odd ? rows[i - 2].value.signed_sq < rows[i].value.signed_sq
                           : rows[i - 2].value.signed_sq > rows[i].value.signed_sq,
                       "series not monotone at a=" + rows[i].a.str()) &&
                 ok;
    }
    return ok;
}

// ------------------------------------------------------------------- 5 ----

bool crit_five_dim(std::string& detail) {
    const auto rows = dedekind::s5_benchmark();
    bool ok = check(detail, rows.size() == 5, "benchmark size");
    static const long long t_pins[5] = {37628, 92638, 262884, 758752, 1714144};
    static const char* sum_pins[5] = {"1213.806", "4411.333", "11429.74", "28101.93",
                                      "51943.76"};
    static const char* bound_pins[5] = {"1321.321", "4668.719", "12050.58", "29617.94",
                                        "54384.26"};
    static const char* alt_pins[5] = {"1456.985", "5190.201", "13385.72", "33011.8",
                                      "60525.29"};
    static const char* ratio_pins[5] = {"0.9186", "0.9449", "0.9485", "0.9488", "0.9551"};
    const auto alt = dedekind::recipe_split(5, 1, true);
    const auto main_recipe = dedekind::default_recipe(5);
    for (std::size_t i = 0; i < rows.size() && i < 5; ++i) {
        const auto& r = rows[i];
        const std::string tag = "row " + std::to_string(i + 1) + " ";
        ok = check(detail, r.scaled_sum == t_pins[i], tag + "scaled sum") && ok;
        ok = check(detail, dedekind::format_sig(Rational(r.scaled_sum, r.a), 7) == sum_pins[i],
                   tag + "sum rendering") &&
             ok;
        ok = check(detail,
                   dedekind::upper_bound(r.a, r.b, main_recipe).significant(7) == bound_pins[i],
                   tag + "bound") &&
             ok;
        ok = check(detail, dedekind::upper_bound(r.a, r.b, alt).significant(7) == alt_pins[i],
                   tag + "alternate bound") &&
             ok;
        ok = check(detail, r.ratio.decimal(4, Round::half_away) == ratio_pins[i],
                   tag + "ratio") &&
             ok;
    }
    ok = check(detail,
               dedekind::ratio_d(7, {2, 3, 4, 5, 6}).decimal(4, Round::half_away) == "0.8567",
               "R_5(7;2,3,4,5,6) != 0.8567") &&
         ok;
    return ok;
}

// ------------------------------------------------------------------- 6 ----

// Fast dominance scan.  The exact comparison T^N <= prod U_k^(eN) is decided
// by a float log prefilter whose absolute error (~1e-11 in log2 units) is six
// orders below the 1e-6 decision band; anything inside the band falls back to
// exact integers.
struct FastFactor {
    int kidx;            // index into {2, 4, 8, 16}
    unsigned exponent;   // e * N
};

struct FastRecipe {
    unsigned N = 1;
    bool symmetric = true;
    std::vector<std::vector<FastFactor>> per_coord;
};

constexpr unsigned kOrders[4] = {2, 4, 8, 16};

int order_index(unsigned k) {
    for (int i = 0; i < 4; ++i)
        if (kOrders[i] == k) return i;
    throw std::logic_error("unexpected moment order");
}

FastRecipe compile_recipe(const dedekind::BoundRecipe& r) {
    FastRecipe out;
    out.N = r.common_root();
    out.symmetric = r.symmetric;
    for (const auto& cs : r.coords) {
        std::vector<FastFactor> fs;
        for (const auto& f : cs) {
            const Int e = numerator(f.exponent) * out.N / denominator(f.exponent);
            fs.push_back(FastFactor{order_index(f.order), e.convert_to<unsigned>()});
        }
        out.per_coord.push_back(std::move(fs));
    }
    return out;
}

bool crit_identity_sweeps(std::string& detail) {
    bool ok = true;

    // Reciprocity on every coprime pair up to 200.
    long long recip = 0;
    for (long long b = 2; b <= 200 && ok; ++b)
        for (long long a = 1; a < b; ++a) {
            if (dedekind::gcd(Int(a), Int(b)) != 1) continue;
            ++recip;
            if (dedekind::dedekind_sum(a, b) + dedekind::dedekind_sum(b, a) !=
                dedekind::reciprocity_rhs(a, b)) {
                ok = check(detail, false,
                           "reciprocity fails at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
                break;
            }
        }

    // Second-moment bridge on the same pairs (both orders).
    for (long long a = 1; a <= 200 && ok; ++a)
        for (long long b = 1; b <= a; ++b) {
            if (dedekind::gcd(Int(a), Int(b)) != 1) continue;
            if (dedekind::moment_via_m2_bridge(a, b) != dedekind::moment(a, b, 2)) {
                ok = check(detail, false,
                           "moment bridge fails at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
                break;
            }
        }

    // 1-D table reconstruction matches direct counting.
    for (long long a = 1; a <= 120 && ok; ++a)
        for (long long b = 1; b <= a; ++b)
            if (dedekind::freq1d_appendix(a, b).counts != dedekind::freq1d_direct(a, b).counts) {
                ok = check(detail, false,
                           "1-D tables disagree at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
                break;
            }

    // The pair sum both ways: weighted joint-table mass equals the direct
    // floor-product sum.
    for (long long a = 1; a <= 60 && ok; ++a)
        for (long long b = 1; b <= 20 && ok; ++b)
            for (long long c = 1; c <= 20; ++c) {
                const auto t = dedekind::freq2d_direct(a, b, c);
                Int weighted = 0;
                for (std::size_t j = 0; j < t.cells.size(); ++j)
                    for (std::size_t k = 0; k < t.cells[j].size(); ++k)
                        if (t.cells[j][k]) weighted += Int(j) * Int(k) * t.cells[j][k];
                if (weighted != dedekind::generalized_sum_scaled({a, {b, c}})) {
                    ok = check(detail, false,
                               "pair sum mismatch at (" + std::to_string(a) + ";" +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
                    break;
                }
            }

    // Dominance of every iterated bound over the sum, d = 3..6, entries up
    // to 20, a up to 40.
    long long tuples = 0, comparisons = 0, exact_fallbacks = 0;
    for (int a = 3; a <= 40 && ok; ++a) {
        int flo[21][40];  // flo[b][m-1] = floor(m b / a), m = 1..a-1
        for (int b = 2; b <= 20; ++b)
            for (int m = 1; m < a; ++m)
                flo[b][m - 1] = static_cast<int>((static_cast<long long>(m) * b) / a);
        Int u_val[4][21];
        double u_log[4][21];
        for (int ki = 0; ki < 4; ++ki)
            for (int b = 2; b <= 20; ++b) {
                u_val[ki][b] = dedekind::moment_scaled(a, b, kOrders[ki]);
                u_log[ki][b] = std::log2(u_val[ki][b].convert_to<double>());
            }
        for (int d = 3; d <= 6 && ok; ++d) {
            std::vector<FastRecipe> recipes;
            for (const auto& r : dedekind::recipes_for(d)) recipes.push_back(compile_recipe(r));
            std::vector<int> bs(d);
            std::function<void(int, int)> walk = [&](int idx, int lo) {
                if (!ok) return;
                if (idx == d) {
                    ++tuples;
                    unsigned long long t_val = 0;
                    for (int m = 0; m < a - 1; ++m) {
                        unsigned long long p = 1;
                        for (int i = 0; i < d && p; ++i)
                            p *= static_cast<unsigned long long>(flo[bs[i]][m]);
                        t_val += p;
                    }
                    const double t_log = std::log2(static_cast<double>(t_val));
                    for (const auto& fr : recipes) {
                        const int orientations = fr.symmetric ? 1 : 2;
                        for (int o = 0; o < orientations; ++o) {
                            ++comparisons;
                            double rhs_log = 0;
                            for (int i = 0; i < d; ++i) {
                                const auto& fs = fr.per_coord[o ? d - 1 - i : i];
                                for (const auto& f : fs)
                                    rhs_log += f.exponent * u_log[f.kidx][bs[i]];
                            }
                            const double margin = rhs_log - fr.N * t_log;
                            if (margin > 1e-6) continue;
                            ++exact_fallbacks;
                            Int lhs = dedekind::ipow(Int(t_val), fr.N);
                            Int rhs = 1;
                            for (int i = 0; i < d; ++i) {
                                const auto& fs = fr.per_coord[o ? d - 1 - i : i];
                                for (const auto& f : fs)
                                    rhs *= dedekind::ipow(u_val[f.kidx][bs[i]], f.exponent);
                            }
                            if (lhs > rhs) {
                                std::string tup;
                                for (int i = 0; i < d; ++i)
                                    tup += (i ? " " : "") + std::to_string(bs[i]);
                                ok = check(detail, false,
                                           "bound violated at a=" + std::to_string(a) + " (" +
                                               tup + ")");
                                return;
                            }
                        }
                    }
                    return;
                }
                for (int b = lo; b <= 20; ++b) {
                    bs[idx] = b;
                    walk(idx + 1, b);
                }
            };
            walk(0, 2);
        }
    }

    // Calibrate the fast path against the library's exact comparison on a
    // small corner.
    for (int a = 3; a <= 4 && ok; ++a)
        for (int d = 3; d <= 6 && ok; ++d) {
            std::vector<int> bs(d);
            const auto recipes = dedekind::recipes_for(d);
            std::function<void(int, int)> walk = [&](int idx, int lo) {
                if (!ok) return;
                if (idx == d) {
                    std::vector<Int> tup(bs.begin(), bs.end());
                    std::vector<Int> rev(bs.rbegin(), bs.rend());
                    for (const auto& r : recipes) {
                        if (!dedekind::bound_holds(a, tup, r) ||
                            (!r.symmetric && !dedekind::bound_holds(a, rev, r)))
                            ok = check(detail, false, "library dominance check failed");
                    }
                    return;
                }
                for (int b = lo; b <= 8; ++b) {
                    bs[idx] = b;
                    walk(idx + 1, b);
                }
            };
            walk(0, 2);
        }

    // Moment log-convexity across the full grid.
    for (long long a = 1; a <= 150 && ok; ++a)
        for (long long b = 1; b <= 150; ++b) {
            const auto rep = dedekind::log_convexity_check(a, b, 5);
            if (!rep.convexity_ok || !rep.liapounov_ok) {
                ok = check(detail, false,
                           "log-convexity fails at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
                break;
            }
        }

    // Structural lemmas, shift identities, grid sums.
    const auto rep = dedekind::verify_lemmas(25);
    ok = check(detail, rep.all_ok(), "structural lemma suite failed") && ok;
    const auto s1 = dedekind::shifted_sum_identities(7, 3, 2);
    ok = check(detail, s1.dot_linear_ok && s1.norm_quadratic_ok && s1.monotone_ok,
               "shift identities (7,3,2)") &&
         ok;
    const auto s2 = dedekind::shifted_sum_identities(12, 5, 7, 30);
    ok = check(detail, s2.dot_linear_ok && s2.norm_quadratic_ok && s2.monotone_ok,
               "shift identities (12,5,7)") &&
         ok;
    for (Int j = 1; j <= 12 && ok; ++j)
        for (Int b = 1; b <= 12; ++b)
            if (!dedekind::grid_identity(j, b).ok) {
                ok = check(detail, false, "grid identity fails");
                break;
            }

    if (ok && (recip < 12000 || tuples < 150000 || comparisons <= tuples))
        ok = check(detail, false, "sweep coverage shrank unexpectedly");
    static_cast<void>(exact_fallbacks);
    return ok;
}

// ------------------------------------------------------------------- 7 ----

bool crit_closed_forms(std::string& detail) {
    bool ok = true;
    for (int l = 0; l <= 5 && ok; ++l)
        for (int b = std::max(2, l + 1); b <= 200; ++b) {
            const Int want = dedekind::d2_closed_form(l, b);
            for (int k = 1; k <= 3; ++k) {
                const auto got = dedekind::d2(Int(l) + Int(k) * b, b);
                if (got.value != want || got.l != l) {
                    ok = check(detail, false,
                               "closed form off at l=" + std::to_string(l) + " b=" +
                                   std::to_string(b) + " k=" + std::to_string(k));
                    break;
                }
            }
            if (!ok) break;
        }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "scaled pair sum and joint frequency table", 1, crit_pair_sum);
    criterion(2, "thirty-row bounds benchmark", 1, crit_bounds_table);
    criterion(3, "correlation table at four places", 5, crit_correlation_table);
    criterion(4, "minimum search and diagonal limits", 60, crit_minimum_and_limits);
    criterion(5, "five-dimensional benchmark", 10, crit_five_dim);
    criterion(6, "identity sweeps and bound dominance", 300, crit_identity_sweeps);
    criterion(7, "residual closed forms per residue", 0, crit_closed_forms);
    return failures;
}
