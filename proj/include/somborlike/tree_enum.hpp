#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "somborlike/graph.hpp"

namespace somborlike {

// Isomorph-free stream of free trees of order n with maximum degree at
// most max_degree. Rooted trees are generated as canonical level sequences
// (lexicographically maximal form, constant-amortized successor stepping in
// decreasing order) and a tree is kept exactly when its root is the
// canonical centroid, so each unrooted isomorphism class is yielded once.
//
// The cursor is single-owner: successor stepping mutates internal state.
class TreeCursor {
public:
    TreeCursor(int n, int max_degree);

    // Next tree, or empty when the stream is exhausted. Deterministic order.
    std::optional<Graph> next();

    // Advance without materializing a Graph; fills parent/degree arrays
    // (parent of the root is -1). Returns false when exhausted.
    bool next_shape(std::vector<int>& parents, std::vector<int>& degrees);

    // Level sequence of the tree produced by the last successful advance.
    const std::vector<int>& level_sequence() const { return levels_; }

private:
    bool successor();
    bool accept();
    void compute_shape();
    std::vector<int> canonical_rooted(int root) const;

    int n_;
    int max_degree_;
    bool started_ = false;
    bool exhausted_ = false;
    std::vector<int> levels_;
    // scratch buffers, refreshed by compute_shape()
    std::vector<int> parent_, degree_, subtree_, childmax_, level_stack_;
    mutable std::vector<std::vector<int>> adj_;
};

void enumerate_trees(int n, int max_degree, const std::function<void(const Graph&)>& fn);
long long tree_count(int n, int max_degree);

// One nonnegative integer solution of the degree/edge-type linear system
// for a graph with max degree 4, n vertices and m = n-1 edges.
struct SpectrumSolution {
    long long n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    long long m12 = 0, m13 = 0, m14 = 0;
    long long m22 = 0, m23 = 0, m24 = 0;
    long long m33 = 0, m34 = 0, m44 = 0;

    DegreeEdgeSpectrum to_spectrum() const;
    auto operator<=>(const SpectrumSolution&) const = default;
};

// Every nonnegative integer solution of the system with m = n-1, enumerated
// over the free variables (m12, m13, m22, m23, m33, m34, m44); n1..n4, m14
// and m24 follow by elimination. Solutions need not be realized by a tree;
// realizability is settled by the brute-force oracle.
std::vector<SpectrumSolution> feasible_spectra(int n);

struct LinearBoundResult {
    double value;
    std::vector<SpectrumSolution> argmax;   // exhaustive ties within 1e-12
};

// Maximum of sum coeffs[{i,j}] * m_ij over feasible_spectra(n). With the
// f- or g-values as coefficients this is an upper bound for the tree
// maximum of the matching reduced invariant. Missing coefficients are 0.
LinearBoundResult linear_bound_optimum(int n,
                                       const std::map<std::pair<int, int>, double>& coeffs);

} // namespace somborlike
