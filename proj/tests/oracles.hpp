#pragma once

// Test-only oracles, kept independent of the library's enumeration and
// canonicalization paths on purpose: they are what the generator is
// audited against.

#include <string>
#include <vector>

#include "somborlike/graph.hpp"

namespace oracles {

// Unlabeled trees of order n with max degree <= max_degree, counted by
// bounded-children rooted-tree DP plus the dissimilarity identity
// (free = rooted - edge-rooted + symmetric-edge). No graphs are built.
long long tree_count_dp(int n, int max_degree);

// Same count by enumerating all labeled trees from their length-(n-2)
// vertex sequences and deduplicating with the centroid certificate below.
// Desk-scale only: n <= 9.
long long tree_count_labeled(int n, int max_degree);

// Canonical certificate of a free tree: centroid-rooted canonical level
// sequence (lexicographically larger rooting for bicentroidal trees).
std::string tree_certificate(const somborlike::Graph& tree);

} // namespace oracles
