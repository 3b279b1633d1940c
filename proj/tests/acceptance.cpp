// Acceptance suite: every release-gating check, one pass/fail line each,
// with all tolerances pinned in code. Exit 0 iff every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "oracles.hpp"
#include "somborlike/connected_extremal.hpp"
#include "somborlike/extremal_trees.hpp"
#include "somborlike/graph6.hpp"
#include "somborlike/invariants.hpp"
#include "somborlike/poly.hpp"
#include "somborlike/report.hpp"
#include "somborlike/tree_enum.hpp"

using namespace somborlike;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {
        start_ = std::chrono::steady_clock::now();
    }

    void fail(const std::string& why) {
        ok_ = false;
        details_.push_back(why);
    }

    void note(const std::string& text) { notes_.push_back(text); }

    ~Criterion() {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        std::printf("criterion %02d %s  %s (%lld ms)\n", id_, ok_ ? "PASS" : "FAIL",
                    title_.c_str(), static_cast<long long>(elapsed));
        for (const auto& n : notes_)
            std::printf("              note: %s\n", n.c_str());
        for (const auto& d : details_)
            std::printf("              fail: %s\n", d.c_str());
        if (!ok_)
            ++failures;
    }

private:
    int id_;
    std::string title_;
    bool ok_ = true;
    std::vector<std::string> details_;
    std::vector<std::string> notes_;
    std::chrono::steady_clock::time_point start_;
};

bool rel_eq(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

void criterion1() {
    Criterion c(1, "SO5 tree maxima: closed form equals the oracle, n in [5,18]");
    for (const auto& r : compare_tree_max(5, 18, Invariant::SO5)) {
        if (!r.printed_matches)
            c.fail("n=" + std::to_string(r.n) + ": oracle " +
                   format_double(r.oracle_max_reduced) + " vs closed " +
                   format_double(r.closed_printed));
        if (r.profile_feasible && !r.argmax_profile_matches)
            c.fail("n=" + std::to_string(r.n) + ": argmax profile differs from prediction");
    }
}

void criterion2() {
    Criterion c(2, "SO6 comparison report complete, residue-1 matches, n in [5,18]");
    const auto reports = compare_tree_max(5, 18, Invariant::SO6);
    if (reports.size() != 14)
        c.fail("expected 14 reports, got " + std::to_string(reports.size()));
    for (const auto& r : reports) {
        if (r.n % 4 == 1 && !r.corrected_matches)
            c.fail("n=" + std::to_string(r.n) + " (residue 1): oracle " +
                   format_double(r.oracle_max_reduced) + " vs closed " +
                   format_double(r.closed_corrected));
        std::string which = r.printed_matches && r.corrected_matches ? "both variants"
                            : r.printed_matches                      ? "printed only"
                            : r.corrected_matches                    ? "g_corrected only"
                                                                     : "neither (erratum)";
        c.note("n=" + std::to_string(r.n) + " residue " + std::to_string(r.n % 4) + ": " +
               which + ", verdict " + verdict_name(r.verdict));
    }
}

void criterion3() {
    Criterion c(3, "quintic constant: root value, exact unit root, radical agreement");
    const auto root = c0_root();
    if (std::abs(root.c0 - 0.365046124400441) > 1e-12)
        c.fail("c0 = " + format_double(root.c0));
    if (quintic_eval(1.0) != 0.0)
        c.fail("quintic(1) != 0 exactly");
    if (std::abs(c0_nested_radical() - root.c0) > 1e-10)
        c.fail("nested radical = " + format_double(c0_nested_radical()));
}

void criterion4() {
    Criterion c(4, "integer argmax of F lies in the candidate set, n in [3,5000]");
    for (int n = 3; n <= 5000; ++n) {
        const auto scan = integer_argmax_F(n);
        if (!scan.in_candidates) {
            c.fail("n=" + std::to_string(n) + ": argmax " + std::to_string(scan.delta_star));
            break;
        }
    }
}

void criterion5() {
    Criterion c(5, "sign brackets and negative discriminants, n in [3,1000]");
    if (d_upper(3) != BigInt("-10036555776"))
        c.fail("D_u(3) != -10036555776");
    for (int n = 3; n <= 1000; ++n) {
        const auto r = bracket_check(n);
        if (!r.all_hold()) {
            c.fail("bracket signs fail at n=" + std::to_string(n));
            break;
        }
    }
    for (int n = 3; n <= 1000; ++n) {
        if (d_upper(n) >= 0) {
            c.fail("D_u(" + std::to_string(n) + ") >= 0");
            break;
        }
        if (d_lower(n) >= 0) {
            c.fail("D_l(" + std::to_string(n) + ") >= 0");
            break;
        }
    }
}

void criterion6() {
    Criterion c(6, "closed form vs direct join evaluation; spectrum route on trees");
    for (int n = 3; n <= 60; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            const double closed = so5_join_closed(n, k);
            const double direct = so_eval(make_complete_split(n, k), Invariant::SO5).reduced;
            if (!rel_eq(closed, direct, 1e-9)) {
                c.fail("join n=" + std::to_string(n) + " k=" + std::to_string(k));
                n = 61;
                break;
            }
        }
    for (int n = 2; n <= 14; ++n) {
        bool ok = true;
        enumerate_trees(n, 4, [&](const Graph& g) {
            for (Invariant which : {Invariant::SO5, Invariant::SO6}) {
                const double direct = so_eval(g, which).reduced;
                const double via = so_from_spectrum(edge_type_spectrum(g), which);
                if (std::abs(direct - via) > 1e-12 * std::max(1.0, std::abs(direct)))
                    ok = false;
            }
        });
        if (!ok)
            c.fail("spectrum route mismatch at n=" + std::to_string(n));
    }
}

void criterion7() {
    Criterion c(7, "tree enumeration vs independent oracles; duplicate-free to n=14");
    for (int n = 1; n <= 12; ++n)
        if (tree_count(n, 4) != oracles::tree_count_dp(n, 4))
            c.fail("count mismatch vs DP oracle at n=" + std::to_string(n));
    for (int n = 3; n <= 9; ++n)
        if (tree_count(n, 4) != oracles::tree_count_labeled(n, 4))
            c.fail("count mismatch vs labeled oracle at n=" + std::to_string(n));
    for (int n = 2; n <= 14; ++n) {
        std::unordered_set<std::string> certs;
        long long count = 0;
        enumerate_trees(n, 4, [&](const Graph& g) {
            ++count;
            certs.insert(oracles::tree_certificate(g));
        });
        if (static_cast<long long>(certs.size()) != count)
            c.fail("duplicate class at n=" + std::to_string(n));
    }
}

void criterion8() {
    Criterion c(8, "connected maxima match the split-join closed form, n in [3,7]");
    for (int n = 3; n <= 7; ++n) {
        const auto r = bruteforce_connected_max(n);
        if (r.join_match)
            continue;
        // a genuine violation must surface as a finding with the witness
        std::vector<Finding> findings;
        findings.push_back({"connected-max-conjecture-violation", n,
                            "connected maximum " + format_double(r.value) +
                                " differs from the split-join maximum",
                            r.argmax.empty() ? "" : graph6_encode(r.argmax.front())});
        std::printf("%s", findings_to_json("connected-max", n, n, findings).c_str());
        if (findings.front().graph6.empty())
            c.fail("violation at n=" + std::to_string(n) + " lacks a counterexample");
        else
            c.note("falsification finding reported for n=" + std::to_string(n));
    }
}

void criterion9() {
    Criterion c(9, "three-degree grid stays below F and the subtraction identity holds");
    for (int n = 10; n <= 200; ++n) {
        const auto scan = grid_search_three_degree(n);
        if (!scan.g_below_f) {
            c.fail("max G >= max F at n=" + std::to_string(n));
            break;
        }
    }
    for (int n = 10; n <= 200; ++n) {
        for (int delta = 2; delta <= n - 3; ++delta) {
            for (int ell = 1; ell <= delta; ++ell) {
                const auto v = three_degree_values(n, delta, ell);
                const double identity = ell * f_pair(n - 1, n - 2) -
                                        ell * f_pair(n - 1, delta) -
                                        (delta - ell) * f_pair(n - 2, delta);
                if (std::abs(v.diff - identity) >
                    1e-12 * std::max({1.0, std::abs(v.g1), std::abs(v.g2)})) {
                    c.fail("identity fails at n=" + std::to_string(n));
                    ell = delta + 1;
                    delta = n;
                    n = 201;
                }
            }
        }
    }
}

void criterion10() {
    Criterion c(10, "gradient agrees with central differences at 100 seeded points");
    std::mt19937 rng(424242u);
    std::uniform_int_distribution<int> m_dist(2, 6);
    std::uniform_real_distribution<double> x_dist(0.5, 12.0);
    int tested = 0;
    while (tested < 100) {
        const int m = m_dist(rng);
        std::vector<double> xs(m);
        for (double& x : xs)
            x = x_dist(rng);
        bool separated = true;
        for (int i = 0; i < m && separated; ++i)
            for (int j = i + 1; j < m; ++j)
                if (std::abs(xs[i] - xs[j]) < 0.05)
                    separated = false;
        if (!separated)
            continue;
        ++tested;
        const auto grad = multivar_F_grad(xs);
        const double h = 1e-6;
        for (int i = 0; i < m; ++i) {
            auto plus = xs, minus = xs;
            plus[i] += h;
            minus[i] -= h;
            const double fd = (multivar_F(plus) - multivar_F(minus)) / (2 * h);
            if (std::abs(grad[i] - fd) > 1e-6 * std::max(1.0, std::abs(fd))) {
                c.fail("point " + std::to_string(tested) + " coordinate " + std::to_string(i));
                i = m;
                tested = 100;
            }
        }
    }
}

void criterion11() {
    Criterion c(11, "sign of T matches the finite-difference sign of F'");
    for (int n : {5, 10, 50, 200}) {
        for (int i = 1; i <= 100; ++i) {
            const double delta = 1.0 + (n - 2.0) * i / 101.0;
            const double t = poly_eval(PolyKind::T, n, delta);
            if (std::abs(t) <= 1e-6 * std::pow(static_cast<double>(n), 5))
                continue;   // below the pinned noise floor
            const double h = 1e-5;
            const double fd = (F_single(n, delta + h) - F_single(n, delta - h)) / (2 * h);
            if ((t > 0) != (fd > 0)) {
                c.fail("sign mismatch at n=" + std::to_string(n) +
                       " delta=" + format_double(delta));
                break;
            }
        }
    }
}

void criterion12() {
    Criterion c(12, "split-join maximum dominates the star, equality only at n=3,4");
    for (int n = 3; n <= 1000; ++n) {
        double best = 0;
        for (int k = 1; k <= n - 1; ++k)
            best = std::max(best, so5_join_closed(n, k));
        const double star = F_single(n, 1);
        if (best < star - 1e-12 * std::max(1.0, star)) {
            c.fail("star beats the join family at n=" + std::to_string(n));
            break;
        }
        const bool equal = std::abs(best - star) <= 1e-12 * std::max(1.0, star);
        if (equal != (n == 3 || n == 4)) {
            c.fail("equality pattern breaks at n=" + std::to_string(n));
            break;
        }
    }
}

} // namespace

int main() {
    std::printf("acceptance suite (%s)\n", kToolVersion);
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    std::printf("acceptance: %d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
