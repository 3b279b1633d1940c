#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "somborlike/connected_extremal.hpp"
#include "somborlike/errors.hpp"
#include "somborlike/extremal_trees.hpp"
#include "somborlike/graph6.hpp"
#include "somborlike/invariants.hpp"
#include "somborlike/poly.hpp"
#include "somborlike/report.hpp"
#include "somborlike/tree_enum.hpp"

namespace {

using namespace somborlike;

struct Output {
    std::string bytes;
    int exit_code = 0;
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_dir_override;

std::optional<std::filesystem::path> cache_dir() {
    if (!cache_dir_override.empty())
        return std::filesystem::path(cache_dir_override);
    if (const char* env = std::getenv("SO56_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

// Cache lookup keyed by (command config, tool version). Stored entries
// replay the exact bytes and exit code of the original run.
std::optional<Output> cache_load(const std::string& key) {
    const auto dir = cache_dir();
    if (!dir)
        return std::nullopt;
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.cache",
                  static_cast<unsigned long long>(fnv1a(key + '\n' + kToolVersion)));
    std::ifstream in(*dir / name, std::ios::binary);
    if (!in)
        return std::nullopt;
    Output out;
    std::string header;
    std::getline(in, header);
    if (header.rfind("exit ", 0) != 0)
        return std::nullopt;
    out.exit_code = std::stoi(header.substr(5));
    std::ostringstream body;
    body << in.rdbuf();
    out.bytes = body.str();
    return out;
}

void cache_store(const std::string& key, const Output& out) {
    const auto dir = cache_dir();
    if (!dir)
        return;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.cache",
                  static_cast<unsigned long long>(fnv1a(key + '\n' + kToolVersion)));
    std::ofstream f(*dir / name, std::ios::binary);
    f << "exit " << out.exit_code << '\n' << out.bytes;
}

int emit(const Output& out, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << out.bytes;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output path " << out_path << '\n';
            return 2;
        }
        f << out.bytes;
    }
    return out.exit_code;
}

Invariant parse_invariant(const std::string& s) {
    return s == "so6" ? Invariant::SO6 : Invariant::SO5;
}

Output run_so(Invariant which, const std::vector<std::string>& lines) {
    std::ostringstream os;
    for (const auto& line : lines) {
        const Graph g = graph6_decode(line);
        const auto val = so_eval(g, which);
        const auto spectrum = edge_type_spectrum(g);
        os << "graph6: " << line << '\n'
           << "order: " << g.order() << " edges: " << g.edge_count() << '\n'
           << invariant_name(which) << "_reduced: " << format_double(val.reduced) << '\n'
           << invariant_name(which) << "_full: " << format_double(val.full) << '\n'
           << "spectrum: " << spectrum.to_string() << '\n';
    }
    return {os.str(), 0};
}

Output run_trees(int n, int max_degree, bool count_only, int budget) {
    if (n > budget)
        throw BudgetError("tree enumeration budget is n <= " + std::to_string(budget) +
                          ", requested n = " + std::to_string(n));
    std::ostringstream os;
    if (count_only) {
        os << tree_count(n, max_degree) << '\n';
    } else {
        enumerate_trees(n, max_degree,
                        [&](const Graph& g) { os << graph6_encode(g) << '\n'; });
    }
    return {os.str(), 0};
}

Output run_trees_max(int n_from, int n_to, Invariant which, const std::string& format,
                     bool emit_argmax, int budget) {
    auto reports = compare_tree_max(n_from, n_to, which, budget);
    if (!emit_argmax)
        for (auto& r : reports)
            r.oracle_argmax_graph6.clear();
    Output out;
    if (format == "csv")
        out.bytes = reports_to_csv(reports);
    else if (format == "text")
        out.bytes = reports_to_text(reports);
    else
        out.bytes = reports_to_json(reports, "trees-max");
    for (const auto& r : reports)
        if (r.verdict != Verdict::Match)
            out.exit_code = 3;
    return out;
}

Output run_join_scan(int n, const std::string& format) {
    const auto scan = integer_argmax_F(n);
    Output out;
    out.bytes = format == "text" ? join_scan_to_text(scan, n) : join_scan_to_json(scan, n);
    return out;
}

Output run_connected_max(int n, const std::string& format) {
    const auto result = bruteforce_connected_max(n);
    Output out;
    out.bytes = format == "text" ? connected_max_to_text(result, n)
                                 : connected_max_to_json(result, n);
    return out;
}

void verify_theorem1(int n_from, int n_to, int budget, std::vector<Finding>& findings) {
    for (const auto& r : compare_tree_max(n_from, n_to, Invariant::SO5, budget)) {
        if (!r.printed_matches)
            findings.push_back({"so5-closed-form-mismatch", r.n,
                                "oracle " + format_double(r.oracle_max_reduced) +
                                    " != closed " + format_double(r.closed_printed),
                                r.oracle_argmax_graph6.empty() ? ""
                                                               : r.oracle_argmax_graph6.front()});
        if (r.profile_feasible && !r.argmax_profile_matches)
            findings.push_back({"so5-argmax-profile-mismatch", r.n,
                                "argmax edge profile differs from the predicted profile",
                                r.oracle_argmax_graph6.empty() ? ""
                                                               : r.oracle_argmax_graph6.front()});
    }
    for (const auto& r : compare_tree_max(n_from, n_to, Invariant::SO6, budget)) {
        if (r.n % 4 == 1 && !r.corrected_matches) {
            findings.push_back({"so6-residue1-mismatch", r.n,
                                "oracle " + format_double(r.oracle_max_reduced) +
                                    " != closed " + format_double(r.closed_corrected),
                                r.oracle_argmax_graph6.empty() ? ""
                                                               : r.oracle_argmax_graph6.front()});
        } else if (r.verdict != Verdict::Match) {
            findings.push_back({"so6-closed-form-erratum", r.n,
                                std::string("residue ") + std::to_string(r.n % 4) +
                                    ": oracle " + format_double(r.oracle_max_reduced) +
                                    ", printed " + format_double(r.closed_printed) +
                                    ", g_corrected " + format_double(r.closed_corrected) +
                                    (r.profile_feasible ? "" : " (predicted profile infeasible)"),
                                r.oracle_argmax_graph6.empty() ? ""
                                                               : r.oracle_argmax_graph6.front()});
        }
    }
}

void verify_theorem2(int n_from, int n_to, std::vector<Finding>& findings) {
    for (int n = n_from; n <= n_to; ++n) {
        const auto scan = integer_argmax_F(n);
        if (!scan.in_candidates)
            findings.push_back({"argmax-outside-candidates", n,
                                "integer argmax " + std::to_string(scan.delta_star) +
                                    " not in {" + std::to_string(scan.candidates[0]) + "," +
                                    std::to_string(scan.candidates[1]) + "," +
                                    std::to_string(scan.candidates[2]) + "}",
                                ""});
    }
}

void verify_brackets(int n_from, int n_to, std::vector<Finding>& findings) {
    for (int n = n_from; n <= n_to; ++n) {
        const auto r = bracket_check(n);
        if (!r.all_hold()) {
            std::string which;
            if (!r.t_neg_right) which += " T(c0n)<0";
            if (!r.t_pos_left) which += " T(c0n-0.5)>0";
            if (!r.tl_neg_right) which += " T_l(c0n)<0";
            if (!r.tl_pos_left) which += " T_l(c0n-0.5)>0";
            if (!r.tu_neg_right) which += " T_u(c0n)<0";
            if (!r.tu_pos_left) which += " T_u(c0n-0.5)>0";
            findings.push_back({"bracket-sign-failure", n, "failed:" + which, ""});
        }
    }
}

void verify_discriminants(int n_from, int n_to, std::vector<Finding>& findings) {
    for (int n = n_from; n <= n_to; ++n) {
        if (d_upper(n) >= 0)
            findings.push_back({"d-upper-nonnegative", n, "exact sextic is >= 0", ""});
        if (d_upper(n) != d_upper_from_cubic(n))
            findings.push_back({"d-upper-route-mismatch", n,
                                "printed sextic differs from the cubic-discriminant route", ""});
        const double dl = d_lower(n), dl2 = d_lower_from_cubic(n);
        if (dl >= 0)
            findings.push_back({"d-lower-nonnegative", n, "value " + format_double(dl), ""});
        if (std::abs(dl - dl2) > 1e-9 * std::max(1.0, std::abs(dl)))
            findings.push_back({"d-lower-route-mismatch", n,
                                format_double(dl) + " vs " + format_double(dl2), ""});
    }
}

void verify_three_degree(int n_from, int n_to, std::vector<Finding>& findings) {
    for (int n = n_from; n <= n_to; ++n) {
        const auto scan = grid_search_three_degree(n);
        if (!scan.g_below_f)
            findings.push_back({"three-degree-above-F", n,
                                "max G " + format_double(scan.max_g) + " >= max F " +
                                    format_double(scan.max_f_int),
                                ""});
        for (int delta = 2; delta <= n - 3; ++delta) {
            for (int ell = 1; ell <= delta; ++ell) {
                const auto v = three_degree_values(n, delta, ell);
                const double identity = ell * f_pair(n - 1, n - 2) - ell * f_pair(n - 1, delta) -
                                        (delta - ell) * f_pair(n - 2, delta);
                if (std::abs(v.diff - identity) >
                    1e-12 * std::max({1.0, std::abs(v.g1), std::abs(v.g2)}))
                    findings.push_back({"three-degree-identity-failure", n,
                                        "delta=" + std::to_string(delta) +
                                            " l=" + std::to_string(ell),
                                        ""});
                if (v.diff >= 0)
                    findings.push_back({"three-degree-diff-nonnegative", n,
                                        "delta=" + std::to_string(delta) +
                                            " l=" + std::to_string(ell) +
                                            " diff=" + format_double(v.diff),
                                        ""});
            }
        }
    }
}

Output run_verify(const std::string& suite, int n_from, int n_to, int budget) {
    std::vector<Finding> findings;
    if (suite == "theorem1")
        verify_theorem1(n_from, n_to, budget, findings);
    else if (suite == "theorem2")
        verify_theorem2(n_from, n_to, findings);
    else if (suite == "brackets")
        verify_brackets(n_from, n_to, findings);
    else if (suite == "discriminants")
        verify_discriminants(n_from, n_to, findings);
    else
        verify_three_degree(n_from, n_to, findings);
    Output out;
    out.bytes = findings_to_json(suite, n_from, n_to, findings);
    out.exit_code = findings.empty() ? 0 : 3;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification and search toolkit for the SO5/SO6 graph invariants"};
    app.require_subcommand(1);

    std::string invariant = "so5", format = "json", out_path, graph6_arg, suite;
    std::string emit_curve_path;
    bool use_stdin = false, count_only = false, emit_argmax = false;
    int n = 0, n_from = 0, n_to = 0, max_degree = 4, budget = 20;
    double curve_step = 1.0;

    auto* so = app.add_subcommand("so", "evaluate an invariant on explicit graphs");
    so->add_option("--invariant", invariant)->check(CLI::IsMember({"so5", "so6"}));
    auto* g6opt = so->add_option("--graph6", graph6_arg, "one graph6 string");
    so->add_flag("--stdin", use_stdin, "read graph6 lines from stdin");
    so->add_option("--out", out_path);

    auto* trees = app.add_subcommand("trees", "emit all trees with bounded degree as graph6");
    trees->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    trees->add_option("--max-degree", max_degree)->check(CLI::Range(2, 1000));
    trees->add_flag("--count", count_only, "print only the class count");
    trees->add_option("--budget", budget);
    trees->add_option("--out", out_path);
    trees->add_option("--cache-dir", cache_dir_override);

    auto* tmax = app.add_subcommand("trees-max", "compare closed-form tree maxima with the oracle");
    tmax->add_option("--n-from", n_from)->required();
    tmax->add_option("--n-to", n_to)->required();
    tmax->add_option("--invariant", invariant)->check(CLI::IsMember({"so5", "so6"}));
    tmax->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    tmax->add_flag("--emit-argmax", emit_argmax, "include argmax graph6 strings");
    tmax->add_option("--budget", budget);
    tmax->add_option("--out", out_path);
    tmax->add_option("--cache-dir", cache_dir_override);

    auto* jscan = app.add_subcommand("join-scan", "integer argmax of the join objective");
    jscan->add_option("--n", n)->required();
    jscan->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    jscan->add_option("--emit-curve", emit_curve_path, "write F/T/T_l/T_u/Q samples as CSV");
    jscan->add_option("--curve-step", curve_step)->check(CLI::PositiveNumber);
    jscan->add_option("--out", out_path);
    jscan->add_option("--cache-dir", cache_dir_override);

    auto* cmax = app.add_subcommand("connected-max", "exact maximum over connected graphs");
    cmax->add_option("--n", n)->required();
    cmax->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    cmax->add_option("--out", out_path);
    cmax->add_option("--cache-dir", cache_dir_override);

    auto* verify = app.add_subcommand("verify", "run a named property suite, emit findings JSON");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "brackets", "discriminants",
                               "three-degree"}));
    verify->add_option("--n-from", n_from)->required();
    verify->add_option("--n-to", n_to)->required();
    verify->add_option("--budget", budget);
    verify->add_option("--out", out_path);
    verify->add_option("--cache-dir", cache_dir_override);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (so->parsed()) {
            std::vector<std::string> lines;
            if (g6opt->count())
                lines.push_back(graph6_arg);
            if (use_stdin) {
                std::string line;
                while (std::getline(std::cin, line))
                    if (!line.empty())
                        lines.push_back(line);
            }
            if (lines.empty()) {
                std::cerr << "error: need --graph6 or --stdin\n" << so->help();
                return 2;
            }
            return emit(run_so(parse_invariant(invariant), lines), out_path);
        }

        std::ostringstream key;
        Output out;
        if (trees->parsed()) {
            key << "trees|n=" << n << "|max_degree=" << max_degree << "|count=" << count_only
                << "|budget=" << budget;
            if (auto hit = cache_load(key.str()))
                return emit(*hit, out_path);
            out = run_trees(n, max_degree, count_only, budget);
        } else if (tmax->parsed()) {
            if (n_from < 5 || n_to < n_from) {
                std::cerr << "error: closed forms need 5 <= n-from <= n-to\n";
                return 2;
            }
            key << "trees-max|n_from=" << n_from << "|n_to=" << n_to << "|invariant=" << invariant
                << "|format=" << format << "|emit_argmax=" << emit_argmax
                << "|budget=" << budget;
            if (auto hit = cache_load(key.str()))
                return emit(*hit, out_path);
            out = run_trees_max(n_from, n_to, parse_invariant(invariant), format, emit_argmax,
                                budget);
        } else if (jscan->parsed()) {
            if (n < 3) {
                std::cerr << "error: join scan needs n >= 3\n";
                return 2;
            }
            if (!emit_curve_path.empty()) {
                std::ofstream f(emit_curve_path, std::ios::binary);
                f << curve_csv(n, curve_step);
            }
            key << "join-scan|n=" << n << "|format=" << format;
            if (auto hit = cache_load(key.str()))
                return emit(*hit, out_path);
            out = run_join_scan(n, format);
        } else if (cmax->parsed()) {
            if (n < 2) {
                std::cerr << "error: connected-max needs n >= 2\n";
                return 2;
            }
            key << "connected-max|n=" << n << "|format=" << format;
            if (auto hit = cache_load(key.str()))
                return emit(*hit, out_path);
            out = run_connected_max(n, format);
        } else if (verify->parsed()) {
            const int min_n = suite == "theorem1" ? 5 : suite == "three-degree" ? 6 : 3;
            if (n_from < min_n || n_to < n_from) {
                std::cerr << "error: suite " << suite << " needs " << min_n
                          << " <= n-from <= n-to\n";
                return 2;
            }
            key << "verify|suite=" << suite << "|n_from=" << n_from << "|n_to=" << n_to
                << "|budget=" << budget;
            if (auto hit = cache_load(key.str()))
                return emit(*hit, out_path);
            out = run_verify(suite, n_from, n_to, budget);
        }
        cache_store(key.str(), out);
        return emit(out, out_path);
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
