#pragma once

// Nystrom-quadrature Fredholm determinants det(1 - (1-t) K |_J) and the
// counting-function statistics derived from them.

#include <memory>
#include <utility>

#include "edgeproc/kernels.hpp"
#include "edgeproc/processes.hpp"

namespace edgeproc::fredholm {

struct DeterminantResult {
    double log_det = 0.0;
    int node_count = 0;
    double tail_estimate = 0.0;  // Airy domain truncation bound
    bool converged = false;
};

// log det(I - (1-t) W^{1/2} K W^{1/2}) over an m-point Gauss-Legendre rule on
// [a, b], with the kernel's node map and exponential tilt applied. Throws
// numerical_error if the determinant is not positive.
DeterminantResult nystrom_log_det(const kernels::KernelEvaluator& kernel, double a, double b,
                                  double t, int m, bool parallel = true);

// doubles m until |delta log det| < tol; accuracy_error at m_max
DeterminantResult nystrom_log_det_auto(const kernels::KernelEvaluator& kernel, double a, double b,
                                       double t, double tol = 1e-8, int m0 = 32, int m_max = 2048,
                                       bool parallel = true);

// log E[ e^{-2 pi nu N(s)} ] = log det(1 - (1 - e^{-2 pi nu}) K |_J).
// J = [0,s] for the hard-edge processes, (-s, T] for Airy with T chosen so
// the neglected trace is below 1e-14. nu >= -1.5 (the t > 1 guard).
double exp_moment(const ProcessSpec& spec, double s, double nu, double tol = 1e-8,
                  bool parallel = true);

// (E[N(s)], Var[N(s)]) by Richardson-extrapolated central differences of
// nu -> log E[e^{-2 pi nu N(s)}] at nu = 0.
std::pair<double, double> counting_mean_var_numeric(const ProcessSpec& spec, double s,
                                                    double step = 1e-3, bool parallel = true);

// E[N(s)] = int_J K(x,x) dx, the trace route (cross-check of the mean).
double counting_mean_trace(const ProcessSpec& spec, double s, bool parallel = true);

// Airy domain cutoff: smallest T with the neglected trace below tol.
double airy_upper_cutoff(double s, double tol = 1e-14);

}  // namespace edgeproc::fredholm
