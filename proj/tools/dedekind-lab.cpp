// dedekind-lab: command-line front end for the dedekind library.
//
// Subcommands:
//   sum     classical s(a, b) or generalized S_d(a; b_1..b_d)
//   freq    1-D / 2-D lattice frequency tables, direct or reconstructed
//   bounds  second-moment bounds for one pair or the 30-row benchmark table
//   sweep   range sweeps: r2 / r5 minima, log-convexity, structural lemmas
//   table   canned tables: fig2, bounds, r2, limits, fig3, s5
//
// Output goes to stdout as CSV (default) or JSON (--format json); both carry
// identical value strings.  --out FILE writes atomically (tmp file + rename).
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 a sweep found a
// ratio below the conjectured sqrt(3)/2 floor.

#include "dedekind/dedekind.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

namespace {

using dedekind::Int;
using dedekind::Rational;
using dedekind::Round;
using json = nlohmann::json;

struct Envelope {
    std::string format = "csv";
    unsigned precision = 4;
    bool precision_given = false;
    bool exact = false;
    std::string out_path;
};

// A fully rendered table: every cell is already a string, so the CSV and
// JSON emitters cannot disagree about values.  Notes are free-form trailing
// lines (CSV) / a string array (JSON).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

std::string join(const std::vector<std::string>& cells, char sep) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += sep;
        out += cells[i];
    }
    return out;
}

std::vector<std::string> split_keep_empty(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

void write_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(static_cast<long long>(::getpid()));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << text;
        f.flush();
        if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("rename to " + path + " failed: " + ec.message());
    }
}

void emit_text(const Envelope& env, const std::string& text) {
    if (env.out_path.empty())
        std::cout << text;
    else
        write_atomic(env.out_path, text);
}

// Scalar result (sum, freq MATCH line): bare string in CSV mode, a small
// object carrying the same string in JSON mode.
void emit_scalar(const Envelope& env, const std::string& value, json fields) {
    if (env.format == "csv") {
        emit_text(env, value + "\n");
    } else {
        fields["value"] = value;
        emit_text(env, fields.dump(2) + "\n");
    }
}

void emit_table(const Envelope& env, const Table& t) {
    if (env.format == "csv") {
        std::string out;
        if (!t.columns.empty()) out += join(t.columns, ',') + "\n";
        for (const auto& row : t.rows) out += join(row, ',') + "\n";
        for (const auto& note : t.notes) out += note + "\n";
        emit_text(env, out);
    } else {
        json j;
        j["columns"] = t.columns;
        j["rows"] = t.rows;
        if (!t.notes.empty()) j["notes"] = t.notes;
        emit_text(env, j.dump(2) + "\n");
    }
}

// --workers resolution; the environment variable wins over the flag so that
// wrappers can pin parallelism without rewriting command lines.
unsigned resolve_workers(unsigned flag_value) {
    if (const char* env = std::getenv("DEDEKIND_LAB_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
        std::cerr << "warning: ignoring invalid DEDEKIND_LAB_WORKERS='" << env << "'\n";
    }
    return flag_value < 1 ? 1 : flag_value;
}

// Run work(i) for i in [0, n) on `workers` threads.  Results must be written
// to preallocated per-index slots; the caller merges them in index order, so
// output is byte-identical for any worker count.
template <typename F>
void run_parallel(std::size_t n, unsigned workers, F&& work) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) work(i);
        });
    for (auto& th : pool) th.join();
}

struct Range {
    long long lo = 0, hi = 0;
};

std::optional<Range> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) return std::nullopt;
    try {
        std::size_t used = 0;
        const long long lo = std::stoll(text.substr(0, pos), &used);
        if (used != pos) return std::nullopt;
        const std::string rest = text.substr(pos + 2);
        const long long hi = std::stoll(rest, &used);
        if (used != rest.size()) return std::nullopt;
        if (lo > hi) return std::nullopt;
        return Range{lo, hi};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string usage_error(const std::string& msg) {
    std::cerr << "usage error: " << msg << "\n";
    return msg;
}

// ---------------------------------------------------------------- sum ----

int cmd_sum(const Envelope& env, const std::vector<long long>& classical,
            const std::vector<long long>& general, bool scaled) {
    if (classical.empty() == general.empty()) {
        usage_error("sum needs exactly one of --classical a b / --general a b1 [b2 ...]");
        return 2;
    }
    if (scaled && !classical.empty()) {
        usage_error("--scaled applies to --general only");
        return 2;
    }

    auto render = [&](const Rational& v) {
        if (env.exact) return dedekind::to_exact_string(v);
        if (env.precision_given)
            return dedekind::format_fixed(v, env.precision, Round::half_away);
        return dedekind::format_sig(v, 7);
    };

    if (!classical.empty()) {
        const Rational v = dedekind::dedekind_sum(Int(classical[0]), Int(classical[1]));
        emit_scalar(env, render(v),
                    json{{"kind", "classical"},
                         {"a", std::to_string(classical[0])},
                         {"b", std::to_string(classical[1])}});
        return 0;
    }

    dedekind::SumParams p;
    p.a = general[0];
    for (std::size_t i = 1; i < general.size(); ++i) p.b.push_back(Int(general[i]));
    json fields{{"kind", "general"}, {"a", std::to_string(general[0])}, {"scaled", scaled}};
    json blist = json::array();
    for (const Int& bi : p.b) blist.push_back(bi.str());
    fields["b"] = blist;
    if (scaled) {
        emit_scalar(env, dedekind::generalized_sum_scaled(p).str(), fields);
    } else {
        emit_scalar(env, render(dedekind::generalized_sum(p)), fields);
    }
    return 0;
}

// --------------------------------------------------------------- freq ----

json freq_json(const dedekind::FreqTable1D& t) {
    return json{{"a", t.a.str()}, {"b", t.b.str()}, {"counts", t.counts}};
}

json freq_json(const dedekind::FreqTable2D& t) {
    return json{{"a", t.a.str()},           {"b", t.b.str()},
                {"c", t.c.str()},           {"cells", t.cells},
                {"row_marginals", t.row_marginals()}, {"col_marginals", t.col_marginals()}};
}

int cmd_freq(const Envelope& env, const std::vector<long long>& args,
             const std::string& method) {
    if (args.size() != 2 && args.size() != 3) {
        usage_error("freq takes a b [c]");
        return 2;
    }
    const Int a(args[0]), b(args[1]);

    if (args.size() == 2) {
        auto table = [&](const std::string& how) {
            return how == "appendix" ? dedekind::freq1d_appendix(a, b)
                                     : dedekind::freq1d_direct(a, b);
        };
        if (method != "both") {
            const auto t = table(method);
            std::vector<std::string> cells;
            for (long long v : t.counts) cells.push_back(std::to_string(v));
            emit_scalar(env, join(cells, ','), freq_json(t));
            return 0;
        }
        const auto direct = table("direct");
        const auto rebuilt = table("appendix");
        if (direct.counts == rebuilt.counts) {
            emit_scalar(env, "MATCH", json{{"match", true}});
            return 0;
        }
        json j{{"match", false}, {"direct", freq_json(direct)}, {"appendix", freq_json(rebuilt)}};
        if (env.format == "csv") {
            std::string out = "WARN: method mismatch for a=" + a.str() + " b=" + b.str() + "\n";
            out += "direct:\n" + dedekind::to_csv(direct);
            out += "appendix:\n" + dedekind::to_csv(rebuilt);
            emit_text(env, out);
        } else {
            emit_text(env, j.dump(2) + "\n");
        }
        return 0;
    }

    const Int c(args[2]);
    auto table = [&](const std::string& how) {
        return how == "appendix" ? dedekind::freq2d_appendix(a, b, c)
                                 : dedekind::freq2d_direct(a, b, c);
    };
    if (method != "both") {
        const auto t = table(method);
        if (env.format == "csv")
            emit_text(env, dedekind::to_csv(t));
        else
            emit_text(env, freq_json(t).dump(2) + "\n");
        return 0;
    }
    const auto direct = table("direct");
    const auto rebuilt = table("appendix");
    if (direct.cells == rebuilt.cells) {
        emit_scalar(env, "MATCH", json{{"match", true}});
        return 0;
    }
    if (env.format == "csv") {
        std::string out = "WARN: method mismatch for a=" + a.str() + " b=" + b.str() +
                          " c=" + c.str() + "\n";
        out += "direct:\n" + dedekind::to_csv(direct);
        out += "appendix:\n" + dedekind::to_csv(rebuilt);
        emit_text(env, out);
    } else {
        json j{{"match", false}, {"direct", freq_json(direct)}, {"appendix", freq_json(rebuilt)}};
        emit_text(env, j.dump(2) + "\n");
    }
    return 0;
}

// ------------------------------------------------------------- bounds ----

Table bounds_table() {
    Table t;
    t.columns = split_keep_empty(dedekind::kBoundsCsvHeader, ',');
    for (const auto& [a, b] : dedekind::benchmark_pairs()) {
        const auto rep = dedekind::bounds_report(a, b);
        t.rows.push_back(split_keep_empty(dedekind::to_csv_row(rep), ','));
    }
    return t;
}

int cmd_bounds(const Envelope& env, const std::vector<long long>& args, bool table) {
    if (table == !args.empty()) {  // exactly one of the two forms
        usage_error("bounds takes either a b or --table");
        return 2;
    }
    if (table) {
        emit_table(env, bounds_table());
        return 0;
    }
    if (args.size() != 2) {
        usage_error("bounds takes exactly two positional arguments");
        return 2;
    }
    const auto rep = dedekind::bounds_report(Int(args[0]), Int(args[1]));
    const std::string row = dedekind::to_csv_row(rep);
    if (env.format == "csv") {
        emit_text(env, row + "\n");
    } else {
        Table t;
        t.columns = split_keep_empty(dedekind::kBoundsCsvHeader, ',');
        t.rows.push_back(split_keep_empty(row, ','));
        emit_table(env, t);
    }
    return 0;
}

// -------------------------------------------------------------- table ----

Table r2_table(unsigned places) {
    Table t;
    t.columns = {"a", "b2", "R2(a;2,b2)", "R2(a;3,b2)"};
    static const int pairs[5][2] = {{11, 7}, {21, 5}, {18, 11}, {73, 39}, {99, 33}};
    for (const auto& [a, b2] : pairs) {
        t.rows.push_back({std::to_string(a), std::to_string(b2),
                          dedekind::ratio2(a, 2, b2).decimal(places, Round::half_away),
                          dedekind::ratio2(a, 3, b2).decimal(places, Round::half_away)});
    }
    return t;
}

Table limits_table() {
    Table t;
    t.columns = {"b", "limit"};
    // Printed places shrink with b (6, then 5, then 4), truncated.
    const unsigned places[] = {6, 5, 4};
    for (int b = 2; b <= 4; ++b)
        t.rows.push_back({std::to_string(b),
                          dedekind::limit_ratio(b).decimal(places[b - 2], Round::trunc)});
    return t;
}

Table fig3_table() {
    Table t;
    t.columns = {"a", "ratio"};
    for (const auto& row : dedekind::figure_series(50))
        t.rows.push_back({row.a.str(), row.value.decimal(6, Round::trunc)});
    return t;
}

Table s5_table() {
    Table t;
    t.columns = {"a", "b", "S5", "bound", "bound_alt", "R5"};
    const auto alt = dedekind::recipe_split(5, 1, true);
    for (const auto& row : dedekind::s5_benchmark()) {
        std::vector<std::string> bs;
        for (const Int& bi : row.b) bs.push_back(bi.str());
        const Rational s5(row.scaled_sum, row.a);
        t.rows.push_back({row.a.str(), join(bs, ' '), dedekind::format_sig(s5, 7),
                          dedekind::upper_bound(row.a, row.b, dedekind::default_recipe(5))
                              .significant(7),
                          dedekind::upper_bound(row.a, row.b, alt).significant(7),
                          row.ratio.decimal(4, Round::half_away)});
    }
    return t;
}

Table fig2_table() {
    const auto t2 = dedekind::freq2d_direct(50, 13, 7);
    Table t;
    t.columns.push_back("j");
    for (std::size_t k = 0; k < t2.cells[0].size(); ++k)
        t.columns.push_back(std::to_string(k));
    t.columns.push_back("f");
    const auto fb = t2.row_marginals();
    const auto fc = t2.col_marginals();
    for (std::size_t j = 0; j < t2.cells.size(); ++j) {
        std::vector<std::string> row{std::to_string(j)};
        for (long long v : t2.cells[j]) row.push_back(std::to_string(v));
        row.push_back(std::to_string(fb[j]));
        t.rows.push_back(std::move(row));
    }
    std::vector<std::string> last{"f"};
    for (long long v : fc) last.push_back(std::to_string(v));
    last.push_back(t2.a.str());
    t.rows.push_back(std::move(last));
    return t;
}

int cmd_table(const Envelope& env, const std::string& name) {
    if (name == "fig2")
        emit_table(env, fig2_table());
    else if (name == "bounds")
        emit_table(env, bounds_table());
    else if (name == "r2")
        emit_table(env, r2_table(env.precision));
    else if (name == "limits")
        emit_table(env, limits_table());
    else if (name == "fig3")
        emit_table(env, fig3_table());
    else if (name == "s5")
        emit_table(env, s5_table());
    else {
        usage_error("unknown table '" + name + "'");
        return 2;
    }
    return 0;
}

// -------------------------------------------------------------- sweep ----

std::string ratio_sq_string(const Rational& sq) {
    return dedekind::to_exact_string(sq);
}

int sweep_r2(const Envelope& env, const Range& r, unsigned workers, int exhaustive) {
    const std::size_t n = static_cast<std::size_t>(r.hi - r.lo + 1);
    std::vector<std::vector<std::string>> rows(n);
    std::vector<dedekind::MinRatioResult> minima(n);
    run_parallel(n, workers, [&](std::size_t i) {
        const Int a = r.lo + static_cast<long long>(i);
        const auto m = dedekind::min_ratio(a, exhaustive > 0, exhaustive > 0 ? exhaustive : 3);
        minima[i] = m;
        rows[i] = {a.str(),
                   numerator(m.value.signed_sq).str(),
                   denominator(m.value.signed_sq).str(),
                   m.value.decimal(env.precision, Round::half_away),
                   m.b.str(),
                   m.c.str()};
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (minima[i].value < minima[best].value) best = i;
    const auto& m = minima[best];
    const Int a_best = r.lo + static_cast<long long>(best);

    Table t;
    t.columns = {"a", "min_sq_num", "min_sq_den", "approx", "b", "c"};
    t.rows = std::move(rows);
    t.notes.push_back("min = " + ratio_sq_string(m.value.signed_sq) + " (≈" +
                      m.value.decimal(env.precision, Round::half_away) + ") at (" +
                      a_best.str() + ";" + m.b.str() + "," + m.c.str() + ")");
    emit_table(env, t);
    return m.value.signed_sq < Rational(3, 4) ? 3 : 0;
}

// Strictly increasing d-tuples over [2, bmax] (distinct multipliers; repeats
// shrink the ratio for reasons unrelated to the geometry being surveyed).
void increasing_tuples(int d, long long bmax, std::vector<Int>& cur,
                       const std::function<void(const std::vector<Int>&)>& fn) {
    if (static_cast<int>(cur.size()) == d) {
        fn(cur);
        return;
    }
    const long long lo = cur.empty() ? 2 : cur.back().convert_to<long long>() + 1;
    for (long long b = lo; b <= bmax; ++b) {
        cur.push_back(Int(b));
        increasing_tuples(d, bmax, cur, fn);
        cur.pop_back();
    }
}

int sweep_r5(const Envelope& env, const Range& r, unsigned workers, long long bmax) {
    if (bmax < 6) {
        usage_error("--bmax must be >= 6 (the sweep needs five distinct multipliers)");
        return 2;
    }
    const std::size_t n = static_cast<std::size_t>(r.hi - r.lo + 1);
    struct Item {
        dedekind::RootedValue value;
        std::vector<Int> witness;
    };
    std::vector<std::vector<std::string>> rows(n);
    std::vector<Item> minima(n);
    run_parallel(n, workers, [&](std::size_t i) {
        const Int a = r.lo + static_cast<long long>(i);
        Item best;
        bool have = false;
        std::vector<Int> cur;
        increasing_tuples(5, bmax, cur, [&](const std::vector<Int>& bs) {
            const auto v = dedekind::ratio_d(a, bs);
            if (!have || v.powered < best.value.powered) {
                best = Item{v, bs};
                have = true;
            }
        });
        minima[i] = best;
        std::vector<std::string> ws;
        for (const Int& b : best.witness) ws.push_back(b.str());
        rows[i] = {a.str(), best.value.decimal(env.precision, Round::half_away), join(ws, ' ')};
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (minima[i].value.powered < minima[best].value.powered) best = i;
    const auto& m = minima[best];
    const Int a_best = r.lo + static_cast<long long>(best);
    std::vector<std::string> ws;
    for (const Int& b : m.witness) ws.push_back(b.str());

    Table t;
    t.columns = {"a", "min_R5", "witness"};
    t.rows = std::move(rows);
    t.notes.push_back("min = " + m.value.decimal(env.precision, Round::half_away) + " at (" +
                      a_best.str() + ";" + join(ws, ',') + ")");
    emit_table(env, t);
    return 0;
}

int sweep_logconvex(const Envelope& env, const Range& r, unsigned workers, long long bmax,
                    int rmax) {
    const std::size_t n = static_cast<std::size_t>(r.hi - r.lo + 1);
    std::vector<std::vector<std::string>> rows(n);
    std::vector<long long> violations(n, 0);
    run_parallel(n, workers, [&](std::size_t i) {
        const Int a = r.lo + static_cast<long long>(i);
        long long pairs = 0, regular = 0, degenerate = 0, bad = 0;
        for (long long b = 2; b <= bmax; ++b) {
            const auto rep = dedekind::log_convexity_check(a, b, rmax);
            ++pairs;
            if (rep.cls == dedekind::MomentClass::regular)
                ++regular;
            else
                ++degenerate;
            if (!rep.convexity_ok || !rep.liapounov_ok) ++bad;
        }
        violations[i] = bad;
        rows[i] = {a.str(), std::to_string(pairs), std::to_string(regular),
                   std::to_string(degenerate), std::to_string(bad)};
    });

    long long total = 0;
    for (long long v : violations) total += v;
    Table t;
    t.columns = {"a", "pairs", "regular", "degenerate", "violations"};
    t.rows = std::move(rows);
    t.notes.push_back(std::to_string(total) + " violations (excluding degenerate)");
    emit_table(env, t);
    return 0;
}

int sweep_lemmas(const Envelope& env, const Range& r) {
    const auto rep = dedekind::verify_lemmas(Int(r.hi));
    auto flag = [](bool ok) { return std::string(ok ? "ok" : "FAIL"); };
    Table t;
    t.columns = {"check", "cases", "status"};
    t.rows = {
        {"independence", std::to_string(rep.independence_checked), flag(rep.independence_ok)},
        {"chain", std::to_string(rep.chain_checked), flag(rep.chain_ok)},
        {"projections", std::to_string(rep.projection_checked), flag(rep.projection_ok)},
        {"reduction", std::to_string(rep.reduction_checked), flag(rep.reduction_ok)},
        {"reversal", "1", flag(rep.reversal_ok)},
    };
    t.notes.push_back(rep.all_ok() ? "all lemma checks passed" : "lemma check FAILURES");
    emit_table(env, t);
    return rep.all_ok() ? 0 : 1;
}

int cmd_sweep(const Envelope& env, const std::string& mode, const std::string& a_range,
              unsigned workers_flag, int exhaustive, long long bmax, bool bmax_given,
              int rmax) {
    const auto range = parse_range(a_range);
    if (!range) {
        usage_error("--a-range expects lo..hi with lo <= hi");
        return 2;
    }
    const unsigned workers = resolve_workers(workers_flag);
    if (mode == "r2") return sweep_r2(env, *range, workers, exhaustive);
    if (mode == "r5") return sweep_r5(env, *range, workers, bmax);
    if (mode == "logconvex")
        return sweep_logconvex(env, *range, workers, bmax_given ? bmax : range->hi, rmax);
    if (mode == "lemmas") return sweep_lemmas(env, *range);
    usage_error("unknown mode '" + mode + "'");
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dedekind sums, lattice frequency tables, and moment bounds"};
    app.require_subcommand(1);

    Envelope env;
    app.add_option("--format", env.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    auto* prec_opt =
        app.add_option("--precision", env.precision, "decimal places for approximations");
    app.add_flag("--exact", env.exact, "print rationals as p/q");
    app.add_option("--out", env.out_path, "write output atomically to FILE");

    auto* sum = app.add_subcommand("sum", "classical s(a,b) or generalized S_d(a;b1..bd)");
    sum->fallthrough();
    std::vector<long long> classical_args, general_args;
    auto* opt_classical =
        sum->add_option("--classical", classical_args, "a b")->expected(2);
    auto* opt_general =
        sum->add_option("--general", general_args, "a b1 [b2 ...]")->expected(-2);
    opt_classical->excludes(opt_general);
    bool scaled = false;
    sum->add_flag("--scaled", scaled, "print the integer a*S_d");

    auto* freq = app.add_subcommand("freq", "lattice frequency table for a b [c]");
    freq->fallthrough();
    std::vector<long long> freq_args;
    freq->add_option("args", freq_args, "a b [c]")->expected(-2);
    std::string method = "direct";
    freq->add_option("--method", method, "direct | appendix | both")
        ->check(CLI::IsMember({"direct", "appendix", "both"}));

    auto* bounds = app.add_subcommand("bounds", "second-moment bounds for a b");
    bounds->fallthrough();
    std::vector<long long> bounds_args;
    bounds->add_option("args", bounds_args, "a b");
    bool bounds_table_flag = false;
    bounds->add_flag("--table,--table-paper", bounds_table_flag, "emit the 30-row benchmark table");

    auto* sweep = app.add_subcommand("sweep", "range sweeps and conjecture checks");
    sweep->fallthrough();
    std::string mode, a_range;
    sweep->add_option("--mode", mode, "r2 | r5 | logconvex | lemmas")
        ->required()
        ->check(CLI::IsMember({"r2", "r5", "logconvex", "lemmas"}));
    sweep->add_option("--a-range", a_range, "lo..hi")->required();
    unsigned workers = 1;
    sweep->add_option("--workers", workers, "worker threads (DEDEKIND_LAB_WORKERS overrides)");
    int exhaustive = 0;
    sweep->add_option("--exhaustive", exhaustive,
                      "r2: widen the pair search to 2 <= b < c <= K*a");
    long long bmax = 10;
    auto* bmax_opt = sweep->add_option(
        "--bmax", bmax, "largest multiplier (r5: distinct tuples from [2, bmax]; logconvex)");
    int rmax = 5;
    sweep->add_option("--rmax", rmax, "logconvex: largest moment step");

    auto* table = app.add_subcommand("table", "canned tables");
    table->fallthrough();
    std::string table_name;
    table->add_option("--name", table_name, "fig2 | bounds | r2 | limits | fig3 | s5")
        ->required()
        ->check(CLI::IsMember({"fig2", "bounds", "r2", "limits", "fig3", "s5"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    env.precision_given = prec_opt->count() > 0;

    try {
        if (sum->parsed()) return cmd_sum(env, classical_args, general_args, scaled);
        if (freq->parsed()) return cmd_freq(env, freq_args, method);
        if (bounds->parsed()) return cmd_bounds(env, bounds_args, bounds_table_flag);
        if (sweep->parsed())
            return cmd_sweep(env, mode, a_range, workers, exhaustive, bmax,
                             bmax_opt->count() > 0, rmax);
        if (table->parsed()) return cmd_table(env, table_name);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
