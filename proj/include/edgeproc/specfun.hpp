#pragma once

// Complex-capable special functions: log-gamma (principal branch), the
// conjugate Barnes G pair, Airy Ai with derivative, Bessel J of real order
// with derivative, Wright's generalized Bessel function (plain and
// exponentially scaled), and the parabolic cylinder function D_a(z).

#include <complex>
#include <utility>

#include "edgeproc/numeric.hpp"

namespace edgeproc::specfun {

// Principal branch of log Gamma, branch cut along (-inf, 0].
// Throws std::domain_error on the cut (z real, z <= 0).
cplx log_gamma(cplx z);

inline cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

// log[ G(1 + i nu) G(1 - i nu) ] for real nu (real-valued result).
double log_barnes_g_conjugate_pair(double nu);

// (Ai(x), Ai'(x)).
std::pair<double, double> airy_ai_with_derivative(double x);

// (J_alpha(x), J_alpha'(x)), alpha > -1 enforced, x >= 0.
std::pair<double, double> bessel_j_with_derivative(double alpha, double x);

// Bessel J value only, any real order > -2 (internal use allows the wider
// range needed by kernel diagonal formulas).
double bessel_j(double order, double x);

// Wright's generalized Bessel J_{a,b}(x) = sum_m (-x)^m / (m! Gamma(a+b m)).
double wright_bessel(double a, double b, double x);

// Scaled form: J_{a,b}(x) = mantissa * exp(exponent) with
// exponent = (1+1/b) (b x)^{1/(1+b)} cos(pi/(1+b)), the saddle growth rate.
// The mantissa stays O(1) for all x >= 0.
struct ScaledValue {
    double mantissa = 0.0;
    double exponent = 0.0;
};
ScaledValue wright_bessel_scaled(double a, double b, double x);

// Parabolic cylinder function D_a(z), entire in both arguments, with
// derivative d/dz D_a(z). Accuracy targeted at |a| <= 5, |z| <= 40.
std::pair<cplx, cplx> parabolic_cylinder_d(cplx a, cplx z);

inline cplx parabolic_cylinder_d_value(cplx a, cplx z) {
    return parabolic_cylinder_d(a, z).first;
}

}  // namespace edgeproc::specfun
