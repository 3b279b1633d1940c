#include "somborlike/graph.hpp"

#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace somborlike {

Graph::Graph(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("graph order must be positive, got " + std::to_string(n));
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    degrees_.assign(n, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_ - 1) + "]");
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
    if (adjacent(u, v))
        throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ")");
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++degrees_[u];
    ++degrees_[v];
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adjacent(u, v))
        throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") not present");
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    --degrees_[u];
    --degrees_[v];
    --m_;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return degrees_[v];
}

int Graph::min_degree() const {
    int best = n_;
    for (int d : degrees_)
        best = std::min(best, d);
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int d : degrees_)
        best = std::max(best, d);
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bitsw = bits_[static_cast<std::size_t>(u) * words_ + w];
            while (bitsw) {
                int v = w * 64 + std::countr_zero(bitsw);
                bitsw &= bitsw - 1;
                if (v > u)
                    out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(degrees_[v]);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bitsw = bits_[static_cast<std::size_t>(v) * words_ + w];
        while (bitsw) {
            out.push_back(w * 64 + std::countr_zero(bitsw));
            bitsw &= bitsw - 1;
        }
    }
    return out;
}

Graph make_empty(int n) { return Graph(n); }

Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph make_star(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(0, v);
    return g;
}

Graph make_path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v - 1, v);
    return g;
}

Graph make_named(NamedGraph kind, int n) {
    switch (kind) {
    case NamedGraph::Star: return make_star(n);
    case NamedGraph::Complete: return make_complete(n);
    case NamedGraph::Empty: return make_empty(n);
    case NamedGraph::Path: return make_path(n);
    }
    throw std::invalid_argument("unknown named graph kind");
}

Graph make_join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    Graph g(n1 + n2);
    for (const auto& [u, v] : g1.edges())
        g.add_edge(u, v);
    for (const auto& [u, v] : g2.edges())
        g.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            g.add_edge(u, n1 + v);
    return g;
}

Graph make_complete_split(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("complete split requires 1 <= k <= n, got k=" +
                                    std::to_string(k) + ", n=" + std::to_string(n));
    Graph g(n);
    for (int u = n - k; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    for (int u = 0; u < n - k; ++u)
        for (int v = n - k; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

long long DegreeEdgeSpectrum::order() const {
    long long n = 0;
    for (const auto& [d, c] : vertex_counts)
        n += c;
    return n;
}

long long DegreeEdgeSpectrum::edge_total() const {
    long long m = 0;
    for (const auto& [e, c] : edge_type_counts)
        m += c;
    return m;
}

void DegreeEdgeSpectrum::validate() const {
    for (const auto& [d, c] : vertex_counts) {
        if (d < 0 || c < 0)
            throw std::invalid_argument("negative degree or vertex count in spectrum");
    }
    long long degree_sum = 0;
    for (const auto& [d, c] : vertex_counts)
        degree_sum += static_cast<long long>(d) * c;
    for (const auto& [e, c] : edge_type_counts) {
        if (c < 0)
            throw std::invalid_argument("negative edge-type count in spectrum");
        if (e.first > e.second)
            throw std::invalid_argument("edge-type key not normalized (i <= j)");
        if (c > 0 && (!vertex_counts.count(e.first) || !vertex_counts.count(e.second)))
            throw std::invalid_argument("edge type {" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) +
                                        "} references a degree absent from vertex counts");
    }
    if (degree_sum != 2 * edge_total())
        throw std::invalid_argument("handshake violation: degree sum " +
                                    std::to_string(degree_sum) + " != 2m = " +
                                    std::to_string(2 * edge_total()));
    for (const auto& [d, c] : vertex_counts) {
        long long incidences = 0;
        for (const auto& [e, ec] : edge_type_counts) {
            if (e.first == d)
                incidences += ec;
            if (e.second == d)
                incidences += ec;   // {d,d} counted twice on purpose
        }
        if (incidences != static_cast<long long>(d) * c)
            throw std::invalid_argument("incidence relation fails at degree " + std::to_string(d) +
                                        ": " + std::to_string(incidences) + " != " +
                                        std::to_string(static_cast<long long>(d) * c));
    }
}

bool DegreeEdgeSpectrum::consistent() const {
    try {
        validate();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::string DegreeEdgeSpectrum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : edge_type_counts) {
        if (c == 0)
            continue;
        if (!first)
            os << ' ';
        os << 'm' << e.first << ',' << e.second << '=' << c;
        first = false;
    }
    os << " |";
    for (const auto& [d, c] : vertex_counts) {
        if (c == 0)
            continue;
        os << " n" << d << '=' << c;
    }
    return os.str();
}

DegreeEdgeSpectrum edge_type_spectrum(const Graph& g) {
    DegreeEdgeSpectrum s;
    for (int v = 0; v < g.order(); ++v)
        ++s.vertex_counts[g.degree(v)];
    for (const auto& [u, v] : g.edges()) {
        int a = g.degree(u), b = g.degree(v);
        if (a > b)
            std::swap(a, b);
        ++s.edge_type_counts[{a, b}];
    }
    return s;
}

} // namespace somborlike
