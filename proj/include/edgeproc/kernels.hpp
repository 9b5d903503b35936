#pragma once

// Correlation kernels of the four edge processes: closed-form Airy/Bessel,
// the Wright kernel through its biorthogonal factor pair, and the Meijer-G
// kernel through the double contour Mellin-Barnes representation.
//
// Wright and Meijer-G kernels are handled in exponentially tilted form
//   K0(x,y) = e^{Lambda(x) - Lambda(y)} K(x,y),   Lambda(x) = ell * x^rho,
// which stays bounded uniformly in the arguments; Fredholm determinants are
// invariant under this diagonal similarity.

#include <memory>
#include <vector>

#include "edgeproc/processes.hpp"

namespace edgeproc::kernels {

// --- closed-form kernels ---------------------------------------------------
double airy_kernel(double x, double y);
double airy_kernel_diagonal(double x);

double bessel_kernel(double alpha, double x, double y);
double bessel_kernel_diagonal(double alpha, double x);

// Wright kernel K^Wr(x,y), direct value (untilted).
double wright_kernel(double theta, double alpha, double x, double y);

// Meijer-G kernel through the double contour route with a default contour.
double meijer_kernel(const ProcessSpec& spec, double x, double y);

// --- double contour route ----------------------------------------------------
struct ContourSpec {
    double apex_gamma = 0.0;        // gamma crosses the real axis here
    double apex_gamma_tilde = 0.0;  // gamma-tilde apex, > apex_gamma
    double wing_angle = 2.356194490192344928846982537459627;  // 3 pi / 4
    double truncation_height = 40.0;  // wing arclength
    int panel_count = 32;             // 16-point panels per half wing
};

// Heuristic contour adapted to kernel arguments in (0, max_x].
ContourSpec default_contour(const StructureFunction& f, double max_x);

// K(x,y) by the double contour integral; the imaginary part must vanish and
// is checked against 1e-9 * scale.
double double_contour_kernel(const StructureFunction& f, const ContourSpec& c, double x, double y);
double double_contour_kernel(const ProcessSpec& spec, const ContourSpec& c, double x, double y);

// --- evaluator interface used by the Fredholm module -------------------------
class KernelEvaluator {
public:
    virtual ~KernelEvaluator() = default;

    // Kernel support transform: Nystrom nodes are placed as x = u^{node_power()}
    // so that the kernel oscillation is uniform in u.
    virtual double node_power() const { return 1.0; }

    // Tilt exponent Lambda(x); zero for symmetric kernels.
    virtual double tilt(double x) const {
        (void)x;
        return 0.0;
    }

    // e^{Lambda(x)-Lambda(y)} K(x,y)
    virtual double tilted(double x, double y) const = 0;

    // Untilted kernel value.
    double value(double x, double y) const;

    // out[i*n+j] = tilted(xs[i], xs[j]); the default loops over tilted().
    virtual void fill_tilted_matrix(const std::vector<double>& xs, std::vector<double>& out,
                                    bool parallel) const;
};

class AiryKernelEvaluator final : public KernelEvaluator {
public:
    double tilted(double x, double y) const override { return airy_kernel(x, y); }
};

class BesselKernelEvaluator final : public KernelEvaluator {
public:
    explicit BesselKernelEvaluator(double alpha) : alpha_(alpha) {}
    double node_power() const override { return 2.0; }
    double tilted(double x, double y) const override { return bessel_kernel(alpha_, x, y); }

private:
    double alpha_;
};

// Wright kernel through the scaled factor pair
//   p(w) = J_{(alpha+1)/theta, 1/theta}(w) e^{+Lambda(w)}
//   q(w) = J_{alpha+1, theta}(w^theta) e^{-Lambda(w)}
// and the complementary representation -int_1^inf for arguments with
// Lambda(x) >> Lambda(y) (the full-line integral of the factor pair vanishes
// off-diagonal).
class WrightKernelEvaluator final : public KernelEvaluator {
public:
    WrightKernelEvaluator(double theta, double alpha);

    double node_power() const override { return 1.0 / rho_; }
    double tilt(double x) const override;
    double tilted(double x, double y) const override;
    void fill_tilted_matrix(const std::vector<double>& xs, std::vector<double>& out,
                            bool parallel) const override;

    double theta() const { return theta_; }
    double alpha() const { return alpha_; }
    double rho() const { return rho_; }
    double tilt_rate() const { return ell_; }

    // scaled biorthogonal factors (exposed for tests)
    double p_factor(double w) const;
    double q_factor(double w) const;

private:
    double theta_, alpha_, rho_, ell_;
    double a_p_, b_p_, a_q_, b_q_;
};

// Meijer-G kernel on a fixed contour; the kernel matrix is assembled through
// the factorized form A * C * B^T with C the Cauchy coupling of the two
// contours.
class MeijerKernelEvaluator final : public KernelEvaluator {
public:
    MeijerKernelEvaluator(ProcessSpec spec, ContourSpec contour);
    // contour chosen for kernel arguments up to max_x
    MeijerKernelEvaluator(ProcessSpec spec, double max_x);

    double node_power() const override { return 1.0 / rho_; }
    double tilt(double x) const override;
    double tilted(double x, double y) const override;
    void fill_tilted_matrix(const std::vector<double>& xs, std::vector<double>& out,
                            bool parallel) const override;

    const ContourSpec& contour() const { return contour_; }
    double rho() const { return rho_; }
    double tilt_rate() const { return ell_; }

private:
    ProcessSpec spec_;
    StructureFunction f_;
    ContourSpec contour_;
    double rho_, ell_;
    std::vector<cplx> u_nodes_, u_weights_, v_nodes_, v_weights_;
    std::vector<cplx> logF_u_, logF_v_;
};

std::unique_ptr<KernelEvaluator> make_evaluator(const ProcessSpec& spec, double max_x);

// Tilt rate ell for the contour kernels; Lambda(x) = ell * x^rho with
// rho = theta/(1+theta) resp. 1/(1+r-q). Zero for theta = 1.
double tilt_rate(const StructureFunction& f);
double growth_exponent(const StructureFunction& f);  // rho

}  // namespace edgeproc::kernels
