#pragma once

// Numerical realization of the parabolic-cylinder model Riemann-Hilbert
// problem: the matrix Psi built from D_{+-i nu}, the sector factors B, the
// jump relations on the five rays, and the expansion coefficients beta_12,
// beta_21 at infinity.

#include <string>
#include <utility>
#include <vector>

#include "edgeproc/numeric.hpp"

namespace edgeproc::pcmodel {

struct Matrix2C {
    cplx a11, a12, a21, a22;

    Matrix2C operator*(const Matrix2C& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    cplx det() const { return a11 * a22 - a12 * a21; }
    Matrix2C inverse() const {
        cplx d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }
    double norm_inf() const;
    static Matrix2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

// q in [0,1) or i [0,inf); nu = -log(1 - q^2) / (2 pi)
struct PCParams {
    cplx q;
    double nu = 0.0;
    static PCParams from_q(cplx q);
    static PCParams from_nu(double nu);  // picks the branch by the sign of nu
};

// Psi(z) of the model problem; z off the real axis (q = 0 returns the
// diagonal limit).
Matrix2C psi_matrix(cplx z, const PCParams& p);

// Phi_PC(z) = Psi(z) B(z)^{-1}; z off the five rays of Sigma_PC
Matrix2C phi_pc(cplx z, const PCParams& p);

// (beta_12, beta_21); q = 0 is a domain error
std::pair<cplx, cplx> beta_coefficients(const PCParams& p);

// max over 8 directions (pi/16 away from the rays) of
// || z (Phi e^{-i z^2 sigma3/4} z^{i nu sigma3} - I) - Phi_1 ||, expected O(1/radius)
double asymptotic_coefficient_check(const PCParams& p, double radius);

// same residual for the second coefficient against diag(nu(1+i nu)/2, nu(1-i nu)/2)
double second_coefficient_check(const PCParams& p, double radius);

struct JumpResidual {
    std::string ray;
    double residual;  // relative, at the given radius
};

// all five jump relations Phi_+ = Phi_- J at |z| = radius
std::vector<JumpResidual> verify_jumps(const PCParams& p, double radius);

}  // namespace edgeproc::pcmodel
