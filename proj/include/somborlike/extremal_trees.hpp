#pragma once

#include <string>
#include <vector>

#include "somborlike/graph.hpp"
#include "somborlike/invariants.hpp"
#include "somborlike/tree_enum.hpp"

namespace somborlike {

// The SO6 closed forms for n % 4 in {2, 0} are published with f(2,4) in
// place of g(2,4) inside otherwise g-valued constants; GCorrected swaps
// those occurrences for g(2,4). For SO5 the variants coincide. Neither is
// assumed right: the brute-force oracle arbitrates.
enum class Variant { Printed, GCorrected };

const char* variant_name(Variant v);   // "printed" / "g_corrected"

// Residue-class closed form for the maximum reduced invariant over trees
// with degrees <= 4 of order n (n >= 5).
double tree_max_closed_form(int n, Invariant which, Variant variant);

struct TreeMaxResult {
    double value;              // reduced
    std::vector<Graph> argmax; // every attaining tree (ties within 1e-12)
};

// Exact maximum over all degree-<=4 trees of order n by isomorph-free
// enumeration; refuses orders beyond the budget rather than truncating.
TreeMaxResult bruteforce_tree_max(int n, Invariant which, int budget = 20);

struct ProfilePrediction {
    bool feasible = false;
    std::vector<DegreeEdgeSpectrum> profiles;
};

// Edge-type profile the closed-form analysis predicts for maximizers of
// order n; infeasible (empty) when the linear system has no nonnegative
// solution of that shape at this n.
ProfilePrediction extremal_profile(int n, Invariant which);

enum class Verdict { Match, Mismatch, InfeasibleProfile };
const char* verdict_name(Verdict v);

struct ExtremalReport {
    int n = 0;
    Invariant which = Invariant::SO5;
    double oracle_max_reduced = 0;
    std::vector<std::string> oracle_argmax_graph6;   // sorted
    double closed_printed = 0;
    double closed_corrected = 0;
    bool printed_matches = false;     // within 1e-9 relative
    bool corrected_matches = false;
    Verdict verdict = Verdict::Mismatch;
    bool profile_feasible = false;
    std::vector<DegreeEdgeSpectrum> predicted_profiles;
    std::vector<DegreeEdgeSpectrum> argmax_profiles;  // distinct, sorted
    bool argmax_profile_matches = false;
};

// One report per n in [n_from, n_to]; the oracle, not the closed form, is
// ground truth. Deterministic output.
std::vector<ExtremalReport> compare_tree_max(int n_from, int n_to, Invariant which,
                                             int budget = 20);

} // namespace somborlike
