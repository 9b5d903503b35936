#pragma once

// Small numeric building blocks shared across the library: compensated
// double-double accumulation for cancellation-heavy series, Gauss-Legendre
// rules, and a pivoted LU log-determinant.

#include <cassert>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace edgeproc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// ---------------------------------------------------------------------------
// Double-double: unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
// Only the operations the series evaluators need.
// ---------------------------------------------------------------------------
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    dd(double x) : hi(x), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    dd r = two_sum(s.hi, lo);
    return r;
}

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd a, double b) { return dd_mul(a, dd(b)); }

inline dd dd_div(dd a, double b) {
    double q1 = a.hi / b;
    dd p = two_prod(q1, b);
    double r = ((a.hi - p.hi) - p.lo + a.lo) / b;
    return two_sum(q1, r);
}

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
// ---------------------------------------------------------------------------
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};

const GaussLegendre& gauss_legendre(int n);

// Rule mapped onto [a,b]; weights sum to b-a.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double a = 0.0;
    double b = 0.0;
};

QuadratureRule gauss_legendre_on(double a, double b, int n);

// ---------------------------------------------------------------------------
// log|det| of a dense matrix by partially pivoted LU, in place.
// Returns {log|det|, sign}.
// ---------------------------------------------------------------------------
struct LogDet {
    double value = 0.0;
    int sign = 1;
};

LogDet lu_log_det(std::vector<double>& a, int n);

// Simple panel list builder: subdivide [a,b] so that no panel exceeds
// max_len and, when rate > 0, no panel carries more than max_phase units of
// rate * length.
std::vector<double> panel_edges(double a, double b, double max_len, double rate, double max_phase);

}  // namespace edgeproc
