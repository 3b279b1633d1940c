#pragma once

#include <array>
#include <span>
#include <vector>

#include "somborlike/graph.hpp"

namespace somborlike {

// delta (n - delta) ((n-1)^2 - delta^2) / (sqrt(2) + 2 sqrt((n-1)^2 + delta^2)):
// the reduced SO5 of the split-join family as a function of real delta,
// 0 < delta <= n-1. Zero at delta = n-1 (the complete graph).
double F_single(int n, double delta);

// Reduced SO5 of make_complete_split(n, k) in closed form: k (n-k) f(k, n-1).
double so5_join_closed(int n, int k);

struct JoinScan {
    int delta_star = 0;                  // argmax over integers 1..n-1
    double best_value = 0;
    std::array<int, 3> candidates{};     // {floor(c0 n) - 1, floor(c0 n), ceil(c0 n)}
    bool in_candidates = false;
    bool tie = false;                    // argmax not unique; broken toward smaller delta
};

// Full integer scan of F (the oracle) against the three-candidate set
// around c0 * n.
JoinScan integer_argmax_F(int n);

// Sum of f over all coordinate pairs, and its gradient. The gradient is
// undefined where two coordinates coincide (the absolute-value kink); such
// inputs are rejected rather than evaluated.
double multivar_F(std::span<const double> xs);
std::vector<double> multivar_F_grad(std::span<const double> xs);

struct ThreeDegreeValues {
    double g1, g2, diff;   // diff = g1 - g2
};

// Reduced SO5 of the two three-degree-value configurations on degrees
// {n-1, n-2, delta} with l vertices of degree n-1: the case with k =
// delta-l+1 clique-adjacent vertices (g1) and the k = delta-l case (g2).
ThreeDegreeValues three_degree_values(int n, int delta, int ell);

struct ThreeDegreeConfig {
    int n = 0, delta = 0, ell = 0;
    int k = 0;        // vertices of degree n-2
    int s = 0;        // those not adjacent to any minimum-degree vertex
    int delta1 = 0;   // neighbors among the s for a minimum-degree vertex
};

struct ThreeDegreeScan {
    double max_g = 0;
    ThreeDegreeConfig argmax;
    double max_f_int = 0;      // max of F over integer delta in [2, n-2]
    int f_argmax_delta = 0;
    bool g_below_f = false;
};

// Exhaustive integer grid search of the second-case value G(delta, l) over
// 2 <= delta <= n-3, 1 <= l <= delta-2, compared against the integer
// maximum of F.
ThreeDegreeScan grid_search_three_degree(int n);

struct ConnectedMax {
    double value = 0;                 // reduced SO5
    std::vector<Graph> argmax;        // ties within 1e-12, deterministic order
    bool join_match = false;          // equals max_k so5_join_closed within 1e-9
};

// Exact maximum of reduced SO5 over every connected graph of order n via
// isomorph-free generation. Hard cap at order 8.
ConnectedMax bruteforce_connected_max(int n);

} // namespace somborlike
