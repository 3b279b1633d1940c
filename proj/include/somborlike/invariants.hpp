#pragma once

#include "somborlike/graph.hpp"

namespace somborlike {

enum class Invariant { SO5, SO6 };

const char* invariant_name(Invariant which);   // "so5" / "so6"

// 2*pi for SO5, pi for SO6. Applied only at presentation; all internal
// comparisons use reduced values.
double prefactor(Invariant which);

// |a^2 - b^2| / (sqrt(2) + 2 sqrt(a^2 + b^2)). Symmetric, zero iff a == b,
// defined for positive reals (the join analysis evaluates it off the
// integer grid). Nonpositive arguments are rejected.
double f_pair(double a, double b);

// f_pair squared.
double g_pair(double a, double b);

double pair_value(Invariant which, double a, double b);

struct InvariantValue {
    double reduced;    // plain edge sum
    double full;       // reduced * prefactor(which)
    Invariant which;
};

// Edge sum over endpoint degrees, summed in sorted edge order so results
// are bit-reproducible. Disconnected graphs are allowed.
InvariantValue so_eval(const Graph& g, Invariant which);

// Same value from edge-type counts alone: sum m_{ij} * f(i,j) (or g).
// Inconsistent spectra are rejected.
double so_from_spectrum(const DegreeEdgeSpectrum& s, Invariant which);

// Change of the reduced value when edge uv is toggled, computed from the
// incident edges only.
double edge_toggle_delta(const Graph& g, int u, int v, Invariant which);

} // namespace somborlike
