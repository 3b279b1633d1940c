#include "somborlike/tree_enum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace somborlike {

TreeCursor::TreeCursor(int n, int max_degree) : n_(n), max_degree_(max_degree) {
    if (n < 1)
        throw std::invalid_argument("tree order must be positive");
    if (max_degree < 2)
        throw std::invalid_argument("degree bound must be at least 2");
}

// Beyer-Hedetniemi step: find the rightmost entry of level >= 2, reattach
// its tail by cyclically copying the block that starts at its parent. The
// first call initializes the path, the lexicographic maximum.
bool TreeCursor::successor() {
    if (!started_) {
        started_ = true;
        levels_.resize(n_);
        std::iota(levels_.begin(), levels_.end(), 0);
        return true;
    }
    int p = -1;
    for (int i = n_ - 1; i >= 1; --i) {
        if (levels_[i] >= 2) {
            p = i;
            break;
        }
    }
    if (p < 0) {
        exhausted_ = true;
        return false;
    }
    int q = p - 1;
    while (levels_[q] != levels_[p] - 1)
        --q;
    for (int i = p; i < n_; ++i)
        levels_[i] = levels_[i - (p - q)];
    return true;
}

void TreeCursor::compute_shape() {
    parent_.assign(n_, -1);
    degree_.assign(n_, 0);
    level_stack_.assign(n_, 0);
    for (int i = 1; i < n_; ++i) {
        parent_[i] = level_stack_[levels_[i] - 1];
        level_stack_[levels_[i]] = i;
        ++degree_[i];
        ++degree_[parent_[i]];
    }
}

std::vector<int> TreeCursor::canonical_rooted(int root) const {
    std::function<std::vector<int>(int, int)> rec = [&](int v, int par) {
        std::vector<std::vector<int>> subs;
        for (int w : adj_[v])
            if (w != par)
                subs.push_back(rec(w, v));
        std::sort(subs.begin(), subs.end(), std::greater<>());
        std::vector<int> out{0};
        for (const auto& s : subs)
            for (int x : s)
                out.push_back(x + 1);
        return out;
    };
    return rec(root, -1);
}

bool TreeCursor::accept() {
    compute_shape();
    for (int v = 0; v < n_; ++v)
        if (degree_[v] > max_degree_)
            return false;
    if (n_ <= 2)
        return true;

    subtree_.assign(n_, 1);
    childmax_.assign(n_, 0);
    for (int i = n_ - 1; i >= 1; --i)
        subtree_[parent_[i]] += subtree_[i];
    for (int i = 1; i < n_; ++i)
        childmax_[parent_[i]] = std::max(childmax_[parent_[i]], subtree_[i]);

    // centroid weight: largest component after deleting v
    auto weight = [&](int v) { return std::max(childmax_[v], n_ - subtree_[v]); };
    const int wroot = weight(0);
    int other = -1;
    for (int v = 1; v < n_; ++v) {
        const int w = weight(v);
        if (w < wroot)
            return false;               // root is not a centroid
        if (w == wroot)
            other = v;                  // bicentroidal tree
    }
    if (other < 0)
        return true;

    // Two centroids: keep the rooting whose canonical sequence is not
    // smaller; equality means the halves are swapped by an automorphism
    // and this rooted class is generated only once anyway.
    adj_.assign(n_, {});
    for (int i = 1; i < n_; ++i) {
        adj_[i].push_back(parent_[i]);
        adj_[parent_[i]].push_back(i);
    }
    return !(levels_ < canonical_rooted(other));
}

bool TreeCursor::next_shape(std::vector<int>& parents, std::vector<int>& degrees) {
    if (exhausted_)
        return false;
    while (successor()) {
        if (accept()) {
            parents = parent_;
            degrees = degree_;
            return true;
        }
    }
    return false;
}

std::optional<Graph> TreeCursor::next() {
    std::vector<int> parents, degrees;
    if (!next_shape(parents, degrees))
        return std::nullopt;
    Graph g(n_);
    for (int i = 1; i < n_; ++i)
        g.add_edge(parents[i], i);
    return g;
}

void enumerate_trees(int n, int max_degree, const std::function<void(const Graph&)>& fn) {
    TreeCursor cursor(n, max_degree);
    while (auto g = cursor.next())
        fn(*g);
}

long long tree_count(int n, int max_degree) {
    TreeCursor cursor(n, max_degree);
    long long count = 0;
    std::vector<int> parents, degrees;
    while (cursor.next_shape(parents, degrees))
        ++count;
    return count;
}

DegreeEdgeSpectrum SpectrumSolution::to_spectrum() const {
    DegreeEdgeSpectrum s;
    const long long nd[5] = {0, n1, n2, n3, n4};
    for (int d = 1; d <= 4; ++d)
        if (nd[d] > 0)
            s.vertex_counts[d] = nd[d];
    const struct { int i, j; long long c; } types[] = {
        {1, 2, m12}, {1, 3, m13}, {1, 4, m14}, {2, 2, m22}, {2, 3, m23},
        {2, 4, m24}, {3, 3, m33}, {3, 4, m34}, {4, 4, m44},
    };
    for (const auto& t : types)
        if (t.c > 0)
            s.edge_type_counts[{t.i, t.j}] = t.c;
    return s;
}

std::vector<SpectrumSolution> feasible_spectra(int n) {
    if (n < 2)
        throw std::invalid_argument("feasible_spectra needs n >= 2");
    std::vector<SpectrumSolution> out;
    const long long m = n - 1;
    for (long long m12 = 0; m12 <= m; ++m12)
    for (long long m13 = 0; m12 + m13 <= m; ++m13)
    for (long long m22 = 0; m12 + m13 + m22 <= m; ++m22)
    for (long long m23 = 0; m12 + m13 + m22 + m23 <= m; ++m23)
    for (long long m33 = 0; m12 + m13 + m22 + m23 + m33 <= m; ++m33)
    for (long long m34 = 0; m12 + m13 + m22 + m23 + m33 + m34 <= m; ++m34)
    for (long long m44 = 0; m12 + m13 + m22 + m23 + m33 + m34 + m44 <= m; ++m44) {
        const long long s = m12 + m13 + m22 + m23 + m33 + m34 + m44;
        // eliminate m14 from the weighted sum of the system rows
        const long long num =
            3LL * (n + 3) - 9 * m12 - 7 * m13 - 3 * m22 - m23 + m33 + 2 * m34 + 3 * m44;
        if (num < 0 || num % 6 != 0)
            continue;
        const long long m14 = num / 6;
        const long long m24 = m - s - m14;
        if (m24 < 0)
            continue;
        const long long t2 = m12 + 2 * m22 + m23 + m24;
        const long long t3 = m13 + m23 + 2 * m33 + m34;
        const long long t4 = m14 + m24 + m34 + 2 * m44;
        if (t2 % 2 || t3 % 3 || t4 % 4)
            continue;
        const long long n1 = m12 + m13 + m14;
        const long long n2 = t2 / 2, n3 = t3 / 3, n4 = t4 / 4;
        if (n1 + n2 + n3 + n4 != n)
            continue;
        out.push_back({n1, n2, n3, n4, m12, m13, m14, m22, m23, m24, m33, m34, m44});
    }
    std::sort(out.begin(), out.end());
    return out;
}

LinearBoundResult linear_bound_optimum(int n,
                                       const std::map<std::pair<int, int>, double>& coeffs) {
    auto coeff = [&](int i, int j) {
        auto it = coeffs.find({std::min(i, j), std::max(i, j)});
        return it == coeffs.end() ? 0.0 : it->second;
    };
    auto value_of = [&](const SpectrumSolution& s) {
        return s.m12 * coeff(1, 2) + s.m13 * coeff(1, 3) + s.m14 * coeff(1, 4) +
               s.m22 * coeff(2, 2) + s.m23 * coeff(2, 3) + s.m24 * coeff(2, 4) +
               s.m33 * coeff(3, 3) + s.m34 * coeff(3, 4) + s.m44 * coeff(4, 4);
    };
    const auto sols = feasible_spectra(n);
    double best = 0.0;
    bool have = false;
    for (const auto& s : sols) {
        const double v = value_of(s);
        if (!have || v > best) {
            best = v;
            have = true;
        }
    }
    LinearBoundResult res{have ? best : 0.0, {}};
    const double tol = 1e-12 * std::max(1.0, std::abs(res.value));
    for (const auto& s : sols)
        if (std::abs(value_of(s) - res.value) <= tol)
            res.argmax.push_back(s);
    return res;
}

} // namespace somborlike
