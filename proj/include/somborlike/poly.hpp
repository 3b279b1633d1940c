#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace somborlike {

using BigInt = boost::multiprecision::cpp_int;

// 6c^5 - 4c^4 + 6c^3 - 6c^2 - 4c + 2. The coefficient of n^5 in T(cn);
// c = 1 is a root, and the unique root in (0,1) locates the optimal clique
// fraction of the split-join family.
double quintic_eval(double c);

struct QuinticConstant {
    double c0;
    double lo, hi;   // final bisection bracket, hi - lo <= 1e-14
};

// Bisection from the bracket (0.3, 0.4); throws std::runtime_error if the
// bracket fails to straddle a sign change (a transcription bug, not a
// numeric accident).
QuinticConstant c0_root();

// The closed-form nested-radical expression for the same constant.
double c0_nested_radical();

enum class PolyKind { T, TLower, TUpper, Q };

// T(delta, n) is the numerator of dF/ddelta and carries the radical term
// sqrt(2 delta^2 + 2 (n-1)^2) * Q(delta, n); TLower/TUpper are the expanded
// polynomial companions with the radical frozen at sqrt(2)(n-1) and 2(n-1).
double poly_eval(PolyKind kind, int n, double delta);

// Exact integer evaluations (sign claims are the point of these).
BigInt q_exact(long long n, long long delta);
BigInt t_upper_exact(long long n, long long delta);

// Discriminant of a x^3 + b x^2 + c x + d:
// 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27 a^2 d^2.
BigInt cubic_discriminant(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);

BigInt d_upper(long long n);              // printed sextic, exact integers
BigInt d_upper_from_cubic(long long n);   // independent route via T_u''
double d_lower(int n);                    // carries sqrt(2) terms
double d_lower_from_cubic(int n);

struct BracketReport {
    int n = 0;
    bool t_neg_right = false, t_pos_left = false;     // T(c0 n) < 0, T(c0 n - 0.5) > 0
    bool tl_neg_right = false, tl_pos_left = false;
    bool tu_neg_right = false, tu_pos_left = false;
    double root = 0;   // root of T inside the bracket; NaN when signs fail

    bool all_hold() const {
        return t_neg_right && t_pos_left && tl_neg_right && tl_pos_left && tu_neg_right &&
               tu_pos_left;
    }
};

// Sign verdicts at c0*n and c0*n - 0.5 for T, TLower, TUpper, plus the
// isolated root of T in that interval. Verdicts may be false; they are
// findings, not preconditions.
BracketReport bracket_check(int n);

} // namespace somborlike
