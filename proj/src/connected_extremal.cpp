#include "somborlike/connected_extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "somborlike/errors.hpp"
#include "somborlike/graph_canon.hpp"
#include "somborlike/invariants.hpp"
#include "somborlike/poly.hpp"

namespace somborlike {

double F_single(int n, double delta) {
    if (n < 3)
        throw std::invalid_argument("F is analyzed for n >= 3");
    if (!(delta > 0.0) || delta > n - 1.0)
        throw std::invalid_argument("F needs 0 < delta <= n-1");
    const double n1 = n - 1.0;
    return delta * (n - delta) * (n1 * n1 - delta * delta) /
           (std::numbers::sqrt2 + 2.0 * std::sqrt(n1 * n1 + delta * delta));
}

double so5_join_closed(int n, int k) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("join closed form needs 1 <= k <= n-1");
    return static_cast<double>(k) * (n - k) * f_pair(k, n - 1);
}

JoinScan integer_argmax_F(int n) {
    if (n < 3)
        throw std::invalid_argument("argmax scan needs n >= 3");
    static const double c0 = c0_root().c0;
    JoinScan scan;
    double best = -1.0;
    for (int d = 1; d <= n - 1; ++d) {
        const double v = F_single(n, d);
        if (v > best) {
            best = v;
            scan.delta_star = d;
            scan.tie = false;
        } else if (v == best) {
            scan.tie = true;   // keep the smaller delta
        }
    }
    scan.best_value = best;
    const double c0n = c0 * n;
    scan.candidates = {static_cast<int>(std::floor(c0n)) - 1,
                       static_cast<int>(std::floor(c0n)),
                       static_cast<int>(std::ceil(c0n))};
    scan.in_candidates = std::find(scan.candidates.begin(), scan.candidates.end(),
                                   scan.delta_star) != scan.candidates.end();
    return scan;
}

double multivar_F(std::span<const double> xs) {
    double sum = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            sum += f_pair(xs[i], xs[j]);
    return sum;
}

std::vector<double> multivar_F_grad(std::span<const double> xs) {
    const std::size_t m = xs.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (!(xs[i] > 0.0))
            throw std::domain_error("gradient needs positive coordinates");
        for (std::size_t j = i + 1; j < m; ++j)
            if (xs[i] == xs[j])
                throw std::domain_error("gradient undefined where coordinates coincide");
    }
    std::vector<double> grad(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i)
                continue;
            const double xi = xs[i], xj = xs[j];
            const double s = xi * xi + xj * xj;
            const double v = std::numbers::sqrt2 + 2.0 * std::sqrt(s);
            const double sign = xi * xi > xj * xj ? 1.0 : -1.0;
            // quotient rule: (|xi^2-xj^2|)' v - |xi^2-xj^2| v'
            grad[i] += (sign * 2.0 * xi * v -
                        std::abs(xi * xi - xj * xj) * 2.0 * xi / std::sqrt(s)) /
                       (v * v);
        }
    }
    return grad;
}

ThreeDegreeValues three_degree_values(int n, int delta, int ell) {
    if (delta < 2 || delta > n - 3)
        throw std::invalid_argument("three-degree analysis needs 2 <= delta <= n-3");
    if (ell < 1 || ell > delta)
        throw std::invalid_argument("three-degree analysis needs 1 <= l <= delta");
    const double fa = f_pair(n - 1, n - 2);
    const double fb = f_pair(n - 1, delta);
    const double fc = f_pair(n - 2, delta);
    ThreeDegreeValues v{};
    v.g1 = (delta - ell + 1) * ell * fa + (n - delta - 1) * ell * fb +
           static_cast<double>(n - delta - 1) * (delta - ell) * fc;
    v.g2 = (delta - ell) * ell * fa + (n - delta) * ell * fb +
           static_cast<double>(n - delta) * (delta - ell) * fc;
    v.diff = v.g1 - v.g2;
    return v;
}

ThreeDegreeScan grid_search_three_degree(int n) {
    if (n < 6)
        throw std::invalid_argument("grid search needs n >= 6");
    ThreeDegreeScan scan;
    bool have = false;
    for (int delta = 2; delta <= n - 3; ++delta) {
        for (int ell = 1; ell <= delta - 2; ++ell) {
            const double v = three_degree_values(n, delta, ell).g2;
            if (!have || v > scan.max_g) {
                have = true;
                scan.max_g = v;
                scan.argmax = ThreeDegreeConfig{n, delta, ell, delta - ell, 0, 0};
            }
        }
    }
    for (int d = 2; d <= n - 2; ++d) {
        const double v = F_single(n, d);
        if (d == 2 || v > scan.max_f_int) {
            scan.max_f_int = v;
            scan.f_argmax_delta = d;
        }
    }
    scan.g_below_f = have && scan.max_g < scan.max_f_int;
    return scan;
}

ConnectedMax bruteforce_connected_max(int n) {
    if (n < 2)
        throw std::invalid_argument("connected maximum needs n >= 2");
    const auto classes = connected_graph_classes(n);   // BudgetError beyond order 8
    ConnectedMax res;
    bool have = false;
    std::vector<double> values;
    values.reserve(classes.size());
    for (const Graph& g : classes) {
        const double v = so_eval(g, Invariant::SO5).reduced;
        values.push_back(v);
        if (!have || v > res.value) {
            have = true;
            res.value = v;
        }
    }
    const double tol = 1e-12 * std::max(1.0, std::abs(res.value));
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::abs(values[i] - res.value) <= tol)
            res.argmax.push_back(classes[i]);

    double join_best = 0.0;
    for (int k = 1; k <= n - 1; ++k)
        join_best = std::max(join_best, so5_join_closed(n, k));
    res.join_match = std::abs(res.value - join_best) <=
                     1e-9 * std::max({1.0, std::abs(res.value), std::abs(join_best)});
    return res;
}

} // namespace somborlike
