#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace somborlike {

// Undirected simple graph on dense vertex ids 0..n-1. Adjacency is stored
// as per-vertex bit rows; degrees are cached and kept in sync by
// add_edge/remove_edge. Graphs are treated as immutable once built, so
// they can be shared freely across workers.
class Graph {
public:
    explicit Graph(int n);

    // Builds a graph with exactly the given edges. Out-of-range vertices,
    // self-loops and duplicate edges are rejected with a diagnostic.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    const std::vector<int>& degrees() const { return degrees_; }
    int min_degree() const;
    int max_degree() const;

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;                // 64-bit words per adjacency row
    std::vector<std::uint64_t> bits_;
    std::vector<int> degrees_;
};

enum class NamedGraph { Star, Complete, Empty, Path };

Graph make_named(NamedGraph kind, int n);
Graph make_star(int n);        // center is vertex 0
Graph make_complete(int n);
Graph make_empty(int n);
Graph make_path(int n);

// Disjoint union plus all cross edges; vertices of g1 keep their ids and
// vertices of g2 are shifted by g1.order().
Graph make_join(const Graph& g1, const Graph& g2);

// Join of an empty graph on n-k vertices with a clique on k vertices; the
// clique sits on the last k ids so outputs are reproducible byte for byte.
// Degrees are k (n-k times) and n-1 (k times). k == n yields the complete
// graph, a degenerate but allowed boundary case.
Graph make_complete_split(int n, int k);

bool is_connected(const Graph& g);

// Vertex-degree counts n_d and unordered edge-type counts m_{ij}.
struct DegreeEdgeSpectrum {
    std::map<int, long long> vertex_counts;
    std::map<std::pair<int, int>, long long> edge_type_counts;

    long long order() const;
    long long edge_total() const;

    // Checks nonnegativity, the handshake sum, and the per-degree incidence
    // relation sum_j m_{dj} + 2 m_{dd} = d * n_d.
    bool consistent() const;
    void validate() const;     // throws std::invalid_argument on violation

    std::string to_string() const;   // compact "m14=6 m24=2 | n1=6 ..." form

    bool operator==(const DegreeEdgeSpectrum&) const = default;
};

DegreeEdgeSpectrum edge_type_spectrum(const Graph& g);

} // namespace somborlike
