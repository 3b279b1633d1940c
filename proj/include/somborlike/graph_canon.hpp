#pragma once

#include <cstdint>
#include <vector>

#include "somborlike/graph.hpp"

namespace somborlike {

// Canonical upper-triangle bit certificate for small graphs: color
// refinement partitions the vertices, then a branch-and-bound search over
// color-preserving relabelings maximizes the packed adjacency bits.
// Two graphs get equal certificates iff they are isomorphic. n <= 11.
std::uint64_t canonical_certificate(const Graph& g);

// One representative per isomorphism class of connected graphs of order n,
// grown vertex by vertex (every connected graph has a non-cut vertex, so
// connected intermediates suffice) with certificate dedup. n <= 8.
std::vector<Graph> connected_graph_classes(int n);

} // namespace somborlike
