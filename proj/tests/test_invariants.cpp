#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdlib>
#include <random>

#include "somborlike/graph.hpp"
#include "somborlike/invariants.hpp"

using namespace somborlike;
using doctest::Approx;

namespace {

unsigned test_seed() {
    if (const char* env = std::getenv("SO56_TEST_SEED"); env && *env)
        return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    return 20240901u;
}

Graph random_graph(std::mt19937& rng, int max_order) {
    std::uniform_int_distribution<int> order_dist(1, max_order);
    std::uniform_real_distribution<double> p_dist(0.0, 1.0);
    const int n = order_dist(rng);
    Graph g(n);
    std::bernoulli_distribution edge(p_dist(rng));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng))
                g.add_edge(u, v);
    return g;
}

// independently derived reference values
constexpr double kF12 = 0.509653732104414057;
constexpr double kF14 = 1.55272674746868774;
constexpr double kF24 = 1.15847051501939442;
constexpr double kG14 = 2.41096035230468999;

} // namespace

TEST_CASE("pair function values") {
    CHECK(f_pair(1, 1) == 0.0);
    CHECK(f_pair(7, 7) == 0.0);
    CHECK(f_pair(1, 4) == Approx(kF14).epsilon(1e-15));
    CHECK(f_pair(2, 4) == Approx(kF24).epsilon(1e-15));
    CHECK(f_pair(1, 2) == Approx(kF12).epsilon(1e-15));
    CHECK(g_pair(3, 3) == 0.0);
    CHECK(g_pair(1, 4) == Approx(kG14).epsilon(1e-15));

    CHECK_THROWS_AS((void)f_pair(0, 1), std::domain_error);
    CHECK_THROWS_AS((void)f_pair(2, -1), std::domain_error);
    CHECK_THROWS_AS((void)g_pair(-3, 2), std::domain_error);
}

TEST_CASE("pair function symmetry and monotonicity") {
    std::mt19937 rng(test_seed() + 10);
    std::uniform_real_distribution<double> dist(0.1, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const double a = dist(rng), b = dist(rng);
        REQUIRE(f_pair(a, b) == f_pair(b, a));
        REQUIRE(g_pair(a, b) == g_pair(b, a));
        REQUIRE(f_pair(a, b) >= 0.0);
    }
    // strictly increasing in the larger argument over the integer grid
    for (int b = 1; b <= 200; ++b)
        for (int a = b; a < 200; ++a)
            REQUIRE(f_pair(a + 1, b) > f_pair(a, b));
}

TEST_CASE("so_eval on canonical graphs") {
    for (int n = 2; n <= 8; ++n)
        CHECK(so_eval(make_complete(n), Invariant::SO5).reduced == 0.0);

    const auto s5 = so_eval(make_star(5), Invariant::SO5);
    CHECK(s5.reduced == Approx(4 * kF14).epsilon(1e-14));
    CHECK(s5.full == Approx(39.0242795430400279).epsilon(1e-14));
    CHECK(s5.full == Approx(s5.reduced * prefactor(Invariant::SO5)).epsilon(1e-16));

    const auto p4 = so_eval(make_path(4), Invariant::SO5);
    CHECK(p4.reduced == Approx(1.01930746420882811).epsilon(1e-14));

    const auto s5g = so_eval(make_star(5), Invariant::SO6);
    CHECK(s5g.reduced == Approx(4 * kG14).epsilon(1e-14));
    CHECK(s5g.full == Approx(s5g.reduced * prefactor(Invariant::SO6)).epsilon(1e-16));
}

TEST_CASE("so_from_spectrum") {
    CHECK(so_from_spectrum(edge_type_spectrum(make_star(5)), Invariant::SO5) ==
          Approx(4 * kF14).epsilon(1e-14));

    DegreeEdgeSpectrum n9;   // the order-9 extremal profile
    n9.vertex_counts[1] = 6;
    n9.vertex_counts[2] = 1;
    n9.vertex_counts[4] = 2;
    n9.edge_type_counts[{1, 4}] = 6;
    n9.edge_type_counts[{2, 4}] = 2;
    CHECK(so_from_spectrum(n9, Invariant::SO5) == Approx(11.6333015148509153).epsilon(1e-14));

    CHECK(so_from_spectrum(edge_type_spectrum(make_complete_split(5, 2)), Invariant::SO5) ==
          Approx(6 * kF24).epsilon(1e-14));

    auto bad = n9;
    bad.edge_type_counts[{1, 4}] = 5;
    CHECK_THROWS_AS((void)so_from_spectrum(bad, Invariant::SO5), std::invalid_argument);
}

TEST_CASE("spectrum route equals direct evaluation on random graphs") {
    std::mt19937 rng(test_seed() + 11);
    for (int i = 0; i < 10000; ++i) {
        const Graph g = random_graph(rng, 20);
        const Invariant which = i % 2 ? Invariant::SO6 : Invariant::SO5;
        const double direct = so_eval(g, which).reduced;
        const double via = so_from_spectrum(edge_type_spectrum(g), which);
        REQUIRE(std::abs(direct - via) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("edge toggle delta examples") {
    Graph k2 = make_complete(2);
    CHECK(edge_toggle_delta(k2, 0, 1, Invariant::SO5) == 0.0);

    // closing the path into a cycle kills both (1,2) contributions
    Graph p4 = make_path(4);
    CHECK(edge_toggle_delta(p4, 0, 3, Invariant::SO5) ==
          Approx(-2 * kF12).epsilon(1e-14));

    // re-adding the missing clique edge of the split join is a strict gain
    Graph m62 = make_complete_split(6, 2);
    m62.remove_edge(4, 5);
    const double delta = edge_toggle_delta(m62, 4, 5, Invariant::SO5);
    CHECK(delta == Approx(4.52019637737566381).epsilon(1e-14));
    CHECK(delta > 0.0);

    CHECK_THROWS_AS((void)edge_toggle_delta(p4, 2, 2, Invariant::SO5), std::invalid_argument);
}

TEST_CASE("edge toggle delta equals the global difference") {
    std::mt19937 rng(test_seed() + 12);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 10000; ++i) {
        Graph g = random_graph(rng, 20);
        if (g.order() < 2)
            continue;
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        int u = pick(rng), v = pick(rng);
        if (u == v)
            continue;
        const Invariant which = coin(rng) ? Invariant::SO6 : Invariant::SO5;
        const double before = so_eval(g, which).reduced;
        const double local = edge_toggle_delta(g, u, v, which);
        if (g.adjacent(u, v))
            g.remove_edge(u, v);
        else
            g.add_edge(u, v);
        const double after = so_eval(g, which).reduced;
        REQUIRE(std::abs(local - (after - before)) <=
                1e-12 * std::max(1.0, std::abs(after - before)));
    }
}
