#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace oracles {

namespace {

long long multiset_choose(long long classes, long long mu) {
    // C(classes + mu - 1, mu) with a 128-bit intermediate
    __int128 num = 1;
    for (long long i = 0; i < mu; ++i) {
        num = num * (classes + i) / (i + 1);
    }
    if (num > static_cast<__int128>(9'000'000'000'000'000'000LL))
        throw std::overflow_error("multiset count overflow");
    return static_cast<long long>(num);
}

// Sum over partitions of `total` into at most `max_parts` parts, each of
// size <= max_size, of the product of multiset-binomials of class counts.
long long forests(long long total, long long max_parts, long long max_size,
                  const std::vector<long long>& classes) {
    if (total == 0)
        return 1;
    if (max_parts == 0 || max_size == 0)
        return 0;
    long long sum = 0;
    for (long long s = std::min(total, max_size); s >= 1; --s) {
        const long long mu_max = std::min(max_parts, total / s);
        for (long long mu = 1; mu <= mu_max; ++mu) {
            const long long rest = forests(total - mu * s, max_parts - mu, s - 1, classes);
            if (rest)
                sum += multiset_choose(classes[s], mu) * rest;
        }
    }
    return sum;
}

} // namespace

long long tree_count_dp(int n, int max_degree) {
    if (n <= 2)
        return n >= 1 ? 1 : 0;
    // g[m]: rooted trees on m vertices, every node with <= max_degree - 1
    // children (so every vertex of the final unrooted tree stays <= max_degree)
    std::vector<long long> g(n + 1, 0);
    g[1] = 1;
    for (int m = 2; m <= n; ++m)
        g[m] = forests(m - 1, max_degree - 1, m - 1, g);
    // root itself may carry max_degree children
    const long long rooted = forests(n - 1, max_degree, n - 1, g);
    long long edge_rooted_pairs = 0;
    for (int i = 1; i < n - i; ++i)
        edge_rooted_pairs += g[i] * g[n - i];
    long long diagonal = 0;
    if (n % 2 == 0)
        diagonal = g[n / 2] * (g[n / 2] - 1) / 2;
    return rooted - edge_rooted_pairs - diagonal;
}

namespace {

std::vector<int> canon_rooted(const std::vector<std::vector<int>>& adj, int root, int parent) {
    std::vector<std::vector<int>> subs;
    for (int w : adj[root])
        if (w != parent)
            subs.push_back(canon_rooted(adj, w, root));
    std::sort(subs.begin(), subs.end(), std::greater<>());
    std::vector<int> out{0};
    for (const auto& s : subs)
        for (int x : s)
            out.push_back(x + 1);
    return out;
}

std::vector<int> centroids_of(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> size(n, 1), weight(n, 0), order, parent(n, -1);
    order.reserve(n);
    // iterative post-order from vertex 0
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        if (parent[v] >= 0) {
            size[parent[v]] += size[v];
            weight[parent[v]] = std::max(weight[parent[v]], size[v]);
        }
    }
    int best = n;
    for (int v = 0; v < n; ++v) {
        weight[v] = std::max(weight[v], n - size[v]);
        best = std::min(best, weight[v]);
    }
    std::vector<int> cs;
    for (int v = 0; v < n; ++v)
        if (weight[v] == best)
            cs.push_back(v);
    return cs;
}

std::string serialize(const std::vector<int>& levels) {
    std::string s;
    s.reserve(levels.size());
    for (int x : levels)
        s.push_back(static_cast<char>('0' + x));
    return s;
}

} // namespace

std::string tree_certificate(const somborlike::Graph& tree) {
    const int n = tree.order();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : tree.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    const auto cs = centroids_of(adj);
    auto cert = canon_rooted(adj, cs[0], -1);
    if (cs.size() == 2)
        cert = std::max(cert, canon_rooted(adj, cs[1], -1));
    return serialize(cert);
}

long long tree_count_labeled(int n, int max_degree) {
    if (n <= 2)
        return n >= 1 ? 1 : 0;
    if (n > 9)
        throw std::invalid_argument("labeled oracle capped at n = 9");
    const int len = n - 2;
    std::vector<int> seq(len, 0);
    std::unordered_set<std::string> classes;
    for (;;) {
        std::vector<int> deg(n, 1);
        for (int x : seq)
            ++deg[x];
        if (*std::max_element(deg.begin(), deg.end()) <= max_degree) {
            // standard decode: repeatedly join the smallest leaf to the
            // next sequence entry
            std::vector<int> d = deg;
            std::set<int> leaves;
            for (int v = 0; v < n; ++v)
                if (d[v] == 1)
                    leaves.insert(v);
            somborlike::Graph g(n);
            for (int x : seq) {
                const int leaf = *leaves.begin();
                leaves.erase(leaves.begin());
                g.add_edge(leaf, x);
                if (--d[x] == 1)
                    leaves.insert(x);
            }
            const int a = *leaves.begin();
            const int b = *std::next(leaves.begin());
            g.add_edge(a, b);
            classes.insert(tree_certificate(g));
        }
        int pos = len - 1;
        while (pos >= 0 && seq[pos] == n - 1)
            seq[pos--] = 0;
        if (pos < 0)
            break;
        ++seq[pos];
    }
    return static_cast<long long>(classes.size());
}

} // namespace oracles
