#include "somborlike/graph_canon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "somborlike/errors.hpp"

namespace somborlike {

namespace {

constexpr int kMaxCertOrder = 11;   // C(11,2) = 55 triangle bits + order in the top byte

struct CanonSearch {
    int n;
    int total_bits;
    std::vector<std::uint32_t> adj;    // neighbor masks
    std::vector<int> color;            // refined color per vertex
    std::vector<int> pos_color;        // color required at each position
    std::vector<int> perm;             // perm[p] = vertex placed at position p
    std::uint32_t used = 0;
    std::uint64_t best = 0;
    bool have_leaf = false;

    void dfs(int p, std::uint64_t acc, int bits) {
        if (p == n) {
            if (!have_leaf || acc > best) {
                best = acc;
                have_leaf = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u)
                continue;
            if (color[v] != pos_color[p])
                continue;
            std::uint64_t col = 0;
            for (int q = 0; q < p; ++q)
                col = (col << 1) | ((adj[v] >> perm[q]) & 1u);
            const std::uint64_t acc2 = (acc << p) | col;
            const int bits2 = bits + p;
            if (have_leaf && acc2 < (best >> (total_bits - bits2)))
                continue;
            perm[p] = v;
            used |= 1u << v;
            dfs(p + 1, acc2, bits2);
            used &= ~(1u << v);
        }
    }
};

std::vector<int> refine_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v)
        color[v] = g.degree(v);
    // rank the initial colors
    for (int round = 0; round <= n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            std::vector<int> nb;
            for (int w : g.neighbors(v))
                nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sig)
            rank.emplace(s, 0);
        int r = 0;
        for (auto& [s, id] : rank)
            id = r++;
        std::vector<int> next(n);
        for (const auto& [s, v] : sig)
            next[v] = rank[s];
        if (next == color)
            break;
        color = std::move(next);
    }
    return color;
}

} // namespace

std::uint64_t canonical_certificate(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCertOrder)
        throw std::invalid_argument("canonical certificate supports order <= 11");
    CanonSearch cs;
    cs.n = n;
    cs.total_bits = n * (n - 1) / 2;
    cs.adj.assign(n, 0);
    for (const auto& [u, v] : g.edges()) {
        cs.adj[u] |= std::uint32_t{1} << v;
        cs.adj[v] |= std::uint32_t{1} << u;
    }
    cs.color = refine_colors(g);
    cs.pos_color.assign(cs.color.begin(), cs.color.end());
    std::sort(cs.pos_color.begin(), cs.pos_color.end());
    cs.perm.assign(n, -1);
    cs.dfs(0, 0, 0);
    return (static_cast<std::uint64_t>(n) << 56) | cs.best;
}

std::vector<Graph> connected_graph_classes(int n) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (n > 8)
        throw BudgetError("connected-graph enumeration capped at order 8, requested " +
                          std::to_string(n));
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph& g : level) {
            for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << (k - 1)); ++mask) {
                Graph h(k);
                for (const auto& [u, v] : g.edges())
                    h.add_edge(u, v);
                for (int v = 0; v < k - 1; ++v)
                    if ((mask >> v) & 1u)
                        h.add_edge(v, k - 1);
                if (seen.insert(canonical_certificate(h)).second)
                    next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

} // namespace somborlike
