#include "somborlike/extremal_trees.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "somborlike/errors.hpp"
#include "somborlike/graph6.hpp"

namespace somborlike {

namespace {

bool rel_match(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double tree_value(const std::vector<int>& parents, const std::vector<int>& degrees,
                  Invariant which) {
    double sum = 0.0;
    for (std::size_t i = 1; i < parents.size(); ++i)
        sum += pair_value(which, degrees[parents[i]], degrees[i]);
    return sum;
}

// Completes a partial solution (the seven eliminated-variable entries) to a
// full spectrum of the tree system, or reports infeasibility.
bool solve_profile(int n, const SpectrumSolution& fixed, SpectrumSolution& out) {
    const long long m = n - 1;
    const long long s = fixed.m12 + fixed.m13 + fixed.m22 + fixed.m23 + fixed.m33 + fixed.m34 +
                        fixed.m44;
    const long long num = 3LL * (n + 3) - 9 * fixed.m12 - 7 * fixed.m13 - 3 * fixed.m22 -
                          fixed.m23 + fixed.m33 + 2 * fixed.m34 + 3 * fixed.m44;
    if (num < 0 || num % 6 != 0)
        return false;
    const long long m14 = num / 6;
    const long long m24 = m - s - m14;
    if (m24 < 0)
        return false;
    const long long t2 = fixed.m12 + 2 * fixed.m22 + fixed.m23 + m24;
    const long long t3 = fixed.m13 + fixed.m23 + 2 * fixed.m33 + fixed.m34;
    const long long t4 = m14 + m24 + fixed.m34 + 2 * fixed.m44;
    if (t2 % 2 || t3 % 3 || t4 % 4)
        return false;
    out = fixed;
    out.m14 = m14;
    out.m24 = m24;
    out.n1 = fixed.m12 + fixed.m13 + m14;
    out.n2 = t2 / 2;
    out.n3 = t3 / 3;
    out.n4 = t4 / 4;
    return out.n1 + out.n2 + out.n3 + out.n4 == n;
}

} // namespace

const char* variant_name(Variant v) {
    return v == Variant::Printed ? "printed" : "g_corrected";
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::InfeasibleProfile: return "infeasible_profile";
    }
    return "?";
}

double tree_max_closed_form(int n, Invariant which, Variant variant) {
    if (n < 5)
        throw std::invalid_argument("closed form defined for n >= 5, got " + std::to_string(n));
    if (which == Invariant::SO5) {
        const double f14 = f_pair(1, 4), f24 = f_pair(2, 4);
        const double slope = (f14 + f24) / 2.0;
        double c = 0;
        switch (n % 4) {
        case 1: c = (3 * f14 - 5 * f24) / 2.0; break;
        case 2: c = f_pair(1, 2) - 2 * f24; break;
        case 3: c = (2 * f_pair(3, 4) + 4 * f_pair(1, 3) - f14 - 7 * f24) / 2.0; break;
        case 0: c = 2 * f14 - 4 * f24; break;
        }
        return slope * n + c;
    }
    const double g14 = g_pair(1, 4), g24 = g_pair(2, 4);
    const double slope = (g14 + g24) / 2.0;
    // the stray f(2,4) constants sit in the n%4==2 and n%4==0 cases
    const double x24 = variant == Variant::GCorrected ? g24 : f_pair(2, 4);
    double c = 0;
    switch (n % 4) {
    case 1: c = (3 * g14 - 5 * g24) / 2.0; break;
    case 2: c = 2 * g14 - 5 * x24 + g_pair(3, 4); break;
    case 3: c = (5 * g14 - 11 * g24) / 2.0; break;
    case 0: c = 2 * g14 - 4 * x24; break;
    }
    return slope * n + c;
}

TreeMaxResult bruteforce_tree_max(int n, Invariant which, int budget) {
    if (n < 2)
        throw std::invalid_argument("tree maximum needs n >= 2");
    if (n > budget)
        throw BudgetError("tree enumeration budget is n <= " + std::to_string(budget) +
                          ", requested n = " + std::to_string(n));

    TreeCursor pass1(n, 4);
    std::vector<int> parents, degrees;
    double best = 0.0;
    bool have = false;
    while (pass1.next_shape(parents, degrees)) {
        const double v = tree_value(parents, degrees, which);
        if (!have || v > best) {
            best = v;
            have = true;
        }
    }

    TreeMaxResult res{have ? best : 0.0, {}};
    const double tol = 1e-12 * std::max(1.0, std::abs(res.value));
    TreeCursor pass2(n, 4);
    while (pass2.next_shape(parents, degrees)) {
        if (std::abs(tree_value(parents, degrees, which) - res.value) <= tol) {
            Graph g(n);
            for (int i = 1; i < n; ++i)
                g.add_edge(parents[i], i);
            res.argmax.push_back(std::move(g));
        }
    }
    return res;
}

ProfilePrediction extremal_profile(int n, Invariant which) {
    if (n < 5)
        throw std::invalid_argument("extremal profile defined for n >= 5");
    SpectrumSolution fixed{};
    if (which == Invariant::SO5) {
        switch (n % 4) {
        case 1: break;                              // only (1,4) and (2,4) edges
        case 2: fixed.m12 = 1; break;               // plus one (1,2) edge
        case 3: fixed.m34 = 1; fixed.m13 = 2; break;
        case 0: fixed.m44 = 1; break;
        }
    } else {
        switch (n % 4) {
        case 1: break;
        case 2: fixed.m34 = 1; break;               // predicted but never solvable
        case 3: fixed.m44 = 2; break;
        case 0: fixed.m44 = 1; break;
        }
    }
    ProfilePrediction p;
    SpectrumSolution full{};
    if (solve_profile(n, fixed, full)) {
        p.feasible = true;
        p.profiles.push_back(full.to_spectrum());
    }
    return p;
}

std::vector<ExtremalReport> compare_tree_max(int n_from, int n_to, Invariant which, int budget) {
    if (n_from < 5 || n_to < n_from)
        throw std::invalid_argument("comparison range needs 5 <= n_from <= n_to");
    if (n_to > budget)
        throw BudgetError("tree enumeration budget is n <= " + std::to_string(budget) +
                          ", requested n = " + std::to_string(n_to));
    std::vector<ExtremalReport> reports;
    for (int n = n_from; n <= n_to; ++n) {
        ExtremalReport r;
        r.n = n;
        r.which = which;
        const auto oracle = bruteforce_tree_max(n, which, budget);
        r.oracle_max_reduced = oracle.value;
        for (const Graph& g : oracle.argmax)
            r.oracle_argmax_graph6.push_back(graph6_encode(g));
        std::sort(r.oracle_argmax_graph6.begin(), r.oracle_argmax_graph6.end());

        r.closed_printed = tree_max_closed_form(n, which, Variant::Printed);
        r.closed_corrected = tree_max_closed_form(n, which, Variant::GCorrected);
        r.printed_matches = rel_match(oracle.value, r.closed_printed, 1e-9);
        r.corrected_matches = rel_match(oracle.value, r.closed_corrected, 1e-9);

        const auto prediction = extremal_profile(n, which);
        r.profile_feasible = prediction.feasible;
        r.predicted_profiles = prediction.profiles;

        auto spectrum_less = [](const DegreeEdgeSpectrum& a, const DegreeEdgeSpectrum& b) {
            if (a.edge_type_counts != b.edge_type_counts)
                return a.edge_type_counts < b.edge_type_counts;
            return a.vertex_counts < b.vertex_counts;
        };
        for (const Graph& g : oracle.argmax) {
            auto s = edge_type_spectrum(g);
            const bool known = std::any_of(r.argmax_profiles.begin(), r.argmax_profiles.end(),
                                           [&](const auto& t) { return t == s; });
            if (!known)
                r.argmax_profiles.push_back(std::move(s));
        }
        std::sort(r.argmax_profiles.begin(), r.argmax_profiles.end(), spectrum_less);

        r.argmax_profile_matches =
            r.profile_feasible &&
            std::all_of(r.argmax_profiles.begin(), r.argmax_profiles.end(), [&](const auto& s) {
                return std::any_of(r.predicted_profiles.begin(), r.predicted_profiles.end(),
                                   [&](const auto& t) { return t == s; });
            });

        if (r.printed_matches || r.corrected_matches)
            r.verdict = Verdict::Match;
        else if (!r.profile_feasible)
            r.verdict = Verdict::InfeasibleProfile;
        else
            r.verdict = Verdict::Mismatch;
        reports.push_back(std::move(r));
    }
    return reports;
}

} // namespace somborlike
