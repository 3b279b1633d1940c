#include "somborlike/invariants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace somborlike {

const char* invariant_name(Invariant which) {
    return which == Invariant::SO5 ? "so5" : "so6";
}

double prefactor(Invariant which) {
    return which == Invariant::SO5 ? 2.0 * std::numbers::pi : std::numbers::pi;
}

double f_pair(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("f requires positive arguments, got (" + std::to_string(a) +
                                ", " + std::to_string(b) + ")");
    return std::abs(a * a - b * b) / (std::numbers::sqrt2 + 2.0 * std::sqrt(a * a + b * b));
}

double g_pair(double a, double b) {
    const double f = f_pair(a, b);
    return f * f;
}

double pair_value(Invariant which, double a, double b) {
    return which == Invariant::SO5 ? f_pair(a, b) : g_pair(a, b);
}

InvariantValue so_eval(const Graph& g, Invariant which) {
    double sum = 0.0;
    for (const auto& [u, v] : g.edges())
        sum += pair_value(which, g.degree(u), g.degree(v));
    return InvariantValue{sum, sum * prefactor(which), which};
}

double so_from_spectrum(const DegreeEdgeSpectrum& s, Invariant which) {
    s.validate();
    double sum = 0.0;
    for (const auto& [e, c] : s.edge_type_counts) {
        if (c == 0 || e.first == e.second)
            continue;   // diagonal types contribute zero
        sum += static_cast<double>(c) * pair_value(which, e.first, e.second);
    }
    return sum;
}

double edge_toggle_delta(const Graph& g, int u, int v, Invariant which) {
    if (u == v)
        throw std::invalid_argument("toggle needs two distinct vertices");
    const bool present = g.adjacent(u, v);
    const int du = g.degree(u), dv = g.degree(v);
    const int du2 = present ? du - 1 : du + 1;
    const int dv2 = present ? dv - 1 : dv + 1;

    double delta = 0.0;
    for (int w : g.neighbors(u)) {
        if (w == v)
            continue;
        delta += pair_value(which, du2, g.degree(w)) - pair_value(which, du, g.degree(w));
    }
    for (int w : g.neighbors(v)) {
        if (w == u)
            continue;
        delta += pair_value(which, dv2, g.degree(w)) - pair_value(which, dv, g.degree(w));
    }
    if (present)
        delta -= pair_value(which, du, dv);
    else
        delta += pair_value(which, du2, dv2);
    return delta;
}

} // namespace somborlike
