#include "somborlike/poly.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace somborlike {

double quintic_eval(double c) {
    return ((((6.0 * c - 4.0) * c + 6.0) * c - 6.0) * c - 4.0) * c + 2.0;
}

QuinticConstant c0_root() {
    double lo = 0.3, hi = 0.4;
    if (!(quintic_eval(lo) > 0.0) || !(quintic_eval(hi) < 0.0))
        throw std::runtime_error("quintic bracket (0.3, 0.4) lost its sign change");
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (quintic_eval(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return QuinticConstant{0.5 * (lo + hi), lo, hi};
}

double c0_nested_radical() {
    const double a = std::cbrt(6.0 * std::sqrt(7422.0) + 505.0);
    const double inner = 4.0 * a - 92.0 / a - 31.0;
    const double root_inner = std::sqrt(inner);
    return -root_inner / 12.0 - 1.0 / 12.0 +
           0.5 * std::sqrt(-a / 9.0 - 31.0 / 18.0 + 23.0 / (9.0 * a) +
                           25.0 / (18.0 * root_inner));
}

namespace {

// Polynomial part of T (everything except the radical term).
double t_base(double n, double d) {
    const double n1 = n - 1.0;
    return 6.0 * std::pow(d, 5) - 4.0 * std::pow(d, 4) * n + 6.0 * std::pow(d, 3) * n1 * n1 +
           d * d * (-6.0 * n * n * n + 12.0 * n * n - 6.0 * n) +
           d * (-4.0 * std::pow(n, 4) + 16.0 * n * n * n - 24.0 * n * n + 16.0 * n - 4.0) +
           2.0 * std::pow(n, 5) - 8.0 * std::pow(n, 4) + 12.0 * n * n * n - 8.0 * n * n +
           2.0 * n;
}

double q_factor(double n, double d) {
    const double n1 = n - 1.0;
    return 4.0 * d * d * d - 3.0 * d * d * n - 2.0 * d * n1 * n1 + n * n1 * n1;
}

} // namespace

double poly_eval(PolyKind kind, int n, double delta) {
    if (n < 3)
        throw std::invalid_argument("polynomial family needs n >= 3");
    const double nn = n, d = delta, n1 = nn - 1.0;
    switch (kind) {
    case PolyKind::Q:
        return q_factor(nn, d);
    case PolyKind::T:
        return t_base(nn, d) + std::sqrt(2.0 * d * d + 2.0 * n1 * n1) * q_factor(nn, d);
    case PolyKind::TLower:
        return t_base(nn, d) + std::numbers::sqrt2 * n1 * q_factor(nn, d);
    case PolyKind::TUpper:
        return t_base(nn, d) + 2.0 * n1 * q_factor(nn, d);
    }
    throw std::invalid_argument("unknown polynomial kind");
}

BigInt q_exact(long long n, long long delta) {
    const BigInt nn = n, d = delta, n1 = nn - 1;
    return 4 * d * d * d - 3 * d * d * nn - 2 * d * n1 * n1 + nn * n1 * n1;
}

BigInt t_upper_exact(long long n, long long delta) {
    const BigInt nn = n, d = delta, n1 = nn - 1;
    const BigInt base = 6 * d * d * d * d * d - 4 * d * d * d * d * nn +
                        6 * d * d * d * n1 * n1 +
                        d * d * (-6 * nn * nn * nn + 12 * nn * nn - 6 * nn) +
                        d * (-4 * nn * nn * nn * nn + 16 * nn * nn * nn - 24 * nn * nn +
                             16 * nn - 4) +
                        2 * nn * nn * nn * nn * nn - 8 * nn * nn * nn * nn +
                        12 * nn * nn * nn - 8 * nn * nn + 2 * nn;
    return base + 2 * n1 * q_exact(n, delta);
}

BigInt cubic_discriminant(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

BigInt d_upper(long long n) {
    const BigInt nn = n;
    return -35914752 * nn * nn * nn * nn * nn * nn + 83441664 * nn * nn * nn * nn * nn -
           49185792 * nn * nn * nn * nn - 6967296 * nn * nn * nn + 2820096 * nn * nn +
           4976640 * nn + 829440;
}

BigInt d_upper_from_cubic(long long n) {
    const BigInt nn = n;
    // T_u''(x) = 120 x^3 - 48 n x^2 + (36 n^2 - 24 n - 12) x - 12 n^3 + 12 n^2
    return cubic_discriminant(120, -48 * nn, 36 * nn * nn - 24 * nn - 12,
                              -12 * nn * nn * nn + 12 * nn * nn);
}

double d_lower(int n) {
    const double s2 = std::numbers::sqrt2;
    const double x = n;
    const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;
    return -35914752.0 * x6 - 47195136.0 * s2 * x5 + 177831936.0 * x5 - 445699584.0 * x4 +
           225856512.0 * s2 * x4 - 460422144.0 * s2 * x3 + 710581248.0 * x3 -
           697932288.0 * x2 + 487461888.0 * s2 * x2 - 263761920.0 * s2 * x + 373248000.0 * x -
           82114560.0 + 58060800.0 * s2;
}

double d_lower_from_cubic(int n) {
    const double s2 = std::numbers::sqrt2;
    const double x = n;
    // T_l''(x) = 120 x^3 - 48 n x^2
    //          + (36 n^2 - 72 n + 24 sqrt2 n - 24 sqrt2 + 36) x
    //          - 12 n^3 - 6 sqrt2 n^2 + 24 n^2 - 12 n + 6 sqrt2 n
    const double a = 120.0;
    const double b = -48.0 * x;
    const double c = 36.0 * x * x - 72.0 * x + 24.0 * s2 * x - 24.0 * s2 + 36.0;
    const double d = -12.0 * x * x * x - 6.0 * s2 * x * x + 24.0 * x * x - 12.0 * x + 6.0 * s2 * x;
    return 18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * a * c * c * c -
           27.0 * a * a * d * d;
}

BracketReport bracket_check(int n) {
    if (n < 3)
        throw std::invalid_argument("bracket check needs n >= 3");
    const double c0 = c0_root().c0;
    const double right = c0 * n, left = c0 * n - 0.5;
    BracketReport r;
    r.n = n;
    r.t_neg_right = poly_eval(PolyKind::T, n, right) < 0.0;
    r.t_pos_left = poly_eval(PolyKind::T, n, left) > 0.0;
    r.tl_neg_right = poly_eval(PolyKind::TLower, n, right) < 0.0;
    r.tl_pos_left = poly_eval(PolyKind::TLower, n, left) > 0.0;
    r.tu_neg_right = poly_eval(PolyKind::TUpper, n, right) < 0.0;
    r.tu_pos_left = poly_eval(PolyKind::TUpper, n, left) > 0.0;
    if (r.t_pos_left && r.t_neg_right) {
        double lo = left, hi = right;
        for (int it = 0; it < 200 && hi - lo > 1e-13 * n; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (poly_eval(PolyKind::T, n, mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        r.root = 0.5 * (lo + hi);
    } else {
        r.root = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

} // namespace somborlike
