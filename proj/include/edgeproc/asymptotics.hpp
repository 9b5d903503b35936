#pragma once

// Closed-form moment asymptotics mu, sigma^2, C for the four processes,
// counting-function mean/variance expansions, rigidity envelopes, and the
// saddle-point cross-check of the order-one constant.

#include <utility>

#include "edgeproc/processes.hpp"

namespace edgeproc::asymptotics {

// mu(s) = mu_coeff * s^rho,  sigma^2(s) = sigma2_coeff * log s.
struct MomentAsymptotics {
    double rho = 0.0;
    double mu_coeff = 0.0;
    double sigma2_coeff = 0.0;
    double error_exponent = 0.0;  // residual decays like s^{-error_exponent}
};

MomentAsymptotics moment_asymptotics(const ProcessSpec& spec);

double mu_of(const ProcessSpec& spec, double s);
double sigma2_of(const ProcessSpec& spec, double s);
double mu_inverse(const ProcessSpec& spec, double k);

// log C(nu); zero at nu = 0.
double log_constant_C(const ProcessSpec& spec, double nu);

// -2 pi nu mu(s) + 2 pi^2 nu^2 sigma^2(s) + log C(nu)
double moment_asymptote(const ProcessSpec& spec, double s, double nu);

// leading-order (E[N(s)], Var[N(s)]) including the constant terms;
// Wright and MeijerG only.
std::pair<double, double> counting_mean_var_asym(const ProcessSpec& spec, double s);

// admissible band for the k-th smallest point at confidence slack eps
struct EnvelopeBand {
    double lower = 0.0;
    double upper = 0.0;
    bool clamped = false;  // lower hit 0 because k - (1/pi+eps) log k < 0
};
EnvelopeBand rigidity_envelope(const ProcessSpec& spec, int k, double eps);

// Saddle-point data of the double contour phase h(zeta) for the Wright and
// Meijer-G families.
struct SaddleData {
    double c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0, c6 = 0;
    cplx b2;      // saddle in Re >= 0
    cplx b1;      // b1 = -conj(b2)
    cplx fp_b2;   // f'(b2) of the local conformal map
    double rho = 0.0;
    double ell = 0.0;        // Re(i h(b2))
    double ell_tilde = 0.0;  // Im(i h(b2)) = Re(b2)/rho
    static SaddleData from_spec(const ProcessSpec& spec);
    // residual of the saddle equation at b2
    double saddle_equation_residual() const;
};

// (mu_coeff, sigma2_coeff, log C(nu)) computed only from the saddle data;
// must reproduce the closed forms.
struct SaddleCrossCheck {
    double mu_coeff = 0.0;
    double sigma2_coeff = 0.0;
    double log_C = 0.0;
};
SaddleCrossCheck saddle_crosscheck(const ProcessSpec& spec, double nu);

// max discrepancy among the theta <-> 1/theta symmetry relations for
// (mu, sigma^2, C) at the given point
double symmetry_check(double theta, double alpha, double s, double nu);

}  // namespace edgeproc::asymptotics
