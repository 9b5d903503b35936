#include <algorithm>
#include <cmath>

#include "edgeproc/errors.hpp"
#include "edgeproc/kernels.hpp"
#include "edgeproc/parallel.hpp"

// Double contour Mellin-Barnes representation
//   K(x,y) = (1/4 pi^2) int_gamma du int_gamma~ dv  F(u)/F(v) x^{-u} y^{v-1} / (u - v)
// with gamma a left-opening wedge and gamma~ a right-opening wedge, both
// crossing the real axis inside the admissible interval and symmetric about
// it. Quadrature is 16-point Gauss-Legendre per panel along each wing.

namespace edgeproc::kernels {

namespace {

const cplx kI(0.0, 1.0);

struct ContourQuad {
    std::vector<cplx> nodes;
    std::vector<cplx> weights;  // includes direction and orientation
    std::vector<cplx> logF;
};

// legs at angles +-wing_angle (left wedge) or +-(pi - wing_angle) (right
// wedge), oriented upward
ContourQuad build_contour(const StructureFunction& f, double apex, bool left_wedge,
                          double wing_angle, double trunc, int panels) {
    ContourQuad c;
    const double ang = left_wedge ? wing_angle : kPi - wing_angle;
    const cplx dirs[2] = {std::exp(kI * ang), std::exp(-kI * ang)};
    const GaussLegendre& gl = gauss_legendre(16);
    const double h = trunc / panels;
    for (const cplx& d : dirs) {
        const double orient = (d.imag() > 0.0) ? 1.0 : -1.0;
        for (int p = 0; p < panels; ++p) {
            double mid = (p + 0.5) * h, half = 0.5 * h;
            for (int g = 0; g < 16; ++g) {
                double t = mid + half * gl.x[g];
                c.nodes.push_back(apex + t * d);
                c.weights.push_back(half * gl.w[g] * d * orient);
            }
        }
    }
    c.logF.resize(c.nodes.size());
    for (size_t i = 0; i < c.nodes.size(); ++i) c.logF[i] = f.log_value(c.nodes[i]);
    return c;
}

double wedge_oscillation_rate(double wing_angle, double log_x_extreme) {
    return std::abs(std::sin(wing_angle)) * std::abs(log_x_extreme) + 1.5;
}

}  // namespace

ContourSpec default_contour(const StructureFunction& f, double max_x) {
    ContourSpec c;
    auto [lo, hi] = f.apex_interval();
    const double mid = 0.5 * (lo + hi), off = (hi - lo) / 6.0;
    c.apex_gamma = mid - off;
    c.apex_gamma_tilde = mid + off;
    c.wing_angle = 0.75 * kPi;

    // walk the gamma wing outward until |F(u) x^{-u}| has dropped 44 nats
    // below its apex value for the least favorable x
    const double lx = std::log(std::max(max_x, 2.0));
    const cplx d = std::exp(kI * c.wing_angle);
    const double base = f.log_value(cplx(c.apex_gamma, 0.12)).real() - c.apex_gamma * lx;
    double t = 4.0;
    for (; t < 400.0; t += 2.0) {
        cplx u = c.apex_gamma + t * d;
        double mag = f.log_value(u).real() - u.real() * lx;
        if (mag < base - 44.0) break;
    }
    c.truncation_height = t + 2.0;

    // smallest Nystrom node is ~ (max_x) * 1e-14; resolve its oscillation
    const double rate = wedge_oscillation_rate(c.wing_angle, std::max(lx, 32.0));
    c.panel_count = std::max(8, static_cast<int>(std::ceil(c.truncation_height * rate / 10.0)));
    return c;
}

double double_contour_kernel(const StructureFunction& f, const ContourSpec& spec, double x,
                             double y) {
    if (x <= 0.0 || y <= 0.0)
        throw std::domain_error("double_contour_kernel: requires x, y > 0");
    auto [lo, hi] = f.apex_interval();
    if (!(spec.apex_gamma > lo && spec.apex_gamma < hi) ||
        !(spec.apex_gamma_tilde > lo && spec.apex_gamma_tilde < hi) ||
        !(spec.apex_gamma < spec.apex_gamma_tilde))
        throw config_error("double_contour_kernel: contour apexes outside admissible interval");

    ContourQuad gu = build_contour(f, spec.apex_gamma, true, spec.wing_angle,
                                   spec.truncation_height, spec.panel_count);
    ContourQuad gv = build_contour(f, spec.apex_gamma_tilde, false, spec.wing_angle,
                                   spec.truncation_height, spec.panel_count);

    const double lx = std::log(x), ly = std::log(y);
    const size_t nu = gu.nodes.size(), nv = gv.nodes.size();
    std::vector<cplx> au(nu), bv(nv);
    for (size_t i = 0; i < nu; ++i)
        au[i] = gu.weights[i] * std::exp(gu.logF[i] - gu.nodes[i] * lx);
    for (size_t j = 0; j < nv; ++j)
        bv[j] = gv.weights[j] * std::exp(-gv.logF[j] + (gv.nodes[j] - 1.0) * ly);

    cplx acc = 0.0;
    for (size_t i = 0; i < nu; ++i) {
        cplx row = 0.0;
        for (size_t j = 0; j < nv; ++j) row += bv[j] / (gu.nodes[i] - gv.nodes[j]);
        acc += au[i] * row;
    }
    acc /= 4.0 * kPi * kPi;

    const double scale = std::max(std::abs(acc.real()), 1e-6);
    if (std::abs(acc.imag()) > 1e-9 * scale)
        throw accuracy_error("double_contour_kernel: imaginary residue above tolerance");
    return acc.real();
}

double double_contour_kernel(const ProcessSpec& spec, const ContourSpec& c, double x, double y) {
    if (spec.kind != ProcessKind::Wright && spec.kind != ProcessKind::MeijerG)
        throw std::invalid_argument("double_contour_kernel: Wright or MeijerG only");
    return double_contour_kernel(StructureFunction::for_spec(spec), c, x, y);
}

// ---------------------------------------------------------------------------
// MeijerKernelEvaluator
// ---------------------------------------------------------------------------

MeijerKernelEvaluator::MeijerKernelEvaluator(ProcessSpec spec, ContourSpec contour)
    : spec_(std::move(spec)), f_(StructureFunction::for_spec(spec_)), contour_(contour) {
    rho_ = growth_exponent(f_);
    ell_ = kernels::tilt_rate(f_);
    ContourQuad gu = build_contour(f_, contour_.apex_gamma, true, contour_.wing_angle,
                                   contour_.truncation_height, contour_.panel_count);
    ContourQuad gv = build_contour(f_, contour_.apex_gamma_tilde, false, contour_.wing_angle,
                                   contour_.truncation_height, contour_.panel_count);
    u_nodes_ = std::move(gu.nodes);
    u_weights_ = std::move(gu.weights);
    logF_u_ = std::move(gu.logF);
    v_nodes_ = std::move(gv.nodes);
    v_weights_ = std::move(gv.weights);
    logF_v_ = std::move(gv.logF);
}

MeijerKernelEvaluator::MeijerKernelEvaluator(ProcessSpec spec, double max_x)
    : MeijerKernelEvaluator(spec, default_contour(StructureFunction::for_spec(spec), max_x)) {}

double MeijerKernelEvaluator::tilt(double x) const { return ell_ * std::pow(x, rho_); }

double MeijerKernelEvaluator::tilted(double x, double y) const {
    if (x <= 0.0 || y <= 0.0) throw std::domain_error("meijer kernel: requires x, y > 0");
    const double lx = std::log(x), ly = std::log(y);
    const double tl = tilt(x) - tilt(y);
    const size_t nu = u_nodes_.size(), nv = v_nodes_.size();
    std::vector<cplx> bv(nv);
    for (size_t j = 0; j < nv; ++j)
        bv[j] = v_weights_[j] * std::exp(-logF_v_[j] + (v_nodes_[j] - 1.0) * ly + 0.5 * tl);
    cplx acc = 0.0;
    for (size_t i = 0; i < nu; ++i) {
        cplx row = 0.0;
        for (size_t j = 0; j < nv; ++j) row += bv[j] / (u_nodes_[i] - v_nodes_[j]);
        acc += u_weights_[i] * std::exp(logF_u_[i] - u_nodes_[i] * lx + 0.5 * tl) * row;
    }
    acc /= 4.0 * kPi * kPi;
    return acc.real();
}

void MeijerKernelEvaluator::fill_tilted_matrix(const std::vector<double>& xs,
                                               std::vector<double>& out, bool parallel) const {
    const int n = static_cast<int>(xs.size());
    const int P = static_cast<int>(u_nodes_.size());
    const int Q = static_cast<int>(v_nodes_.size());
    out.assign(static_cast<size_t>(n) * n, 0.0);

    // A[k,i] = w_i F(u_i) x_k^{-u_i} e^{+tilt_k},  B[l,j] = wt_j x_l^{v_j-1}/F(v_j) e^{-tilt_l}
    std::vector<cplx> A(static_cast<size_t>(n) * P), B(static_cast<size_t>(n) * Q);
    parallel_for(n, parallel, [&](int k) {
        const double lx = std::log(xs[k]);
        const double tl = tilt(xs[k]);
        for (int i = 0; i < P; ++i)
            A[static_cast<size_t>(k) * P + i] =
                u_weights_[i] * std::exp(logF_u_[i] - u_nodes_[i] * lx + tl);
        for (int j = 0; j < Q; ++j)
            B[static_cast<size_t>(k) * Q + j] =
                v_weights_[j] * std::exp(-logF_v_[j] + (v_nodes_[j] - 1.0) * lx - tl);
    });

    // T[k,j] = sum_i A[k,i] / (u_i - v_j); then K0[k,l] = sum_j T[k,j] B[l,j]
    std::vector<cplx> T(static_cast<size_t>(n) * Q);
    parallel_for(n, parallel, [&](int k) {
        for (int j = 0; j < Q; ++j) {
            cplx acc = 0.0;
            const cplx vj = v_nodes_[j];
            const cplx* ak = &A[static_cast<size_t>(k) * P];
            for (int i = 0; i < P; ++i) acc += ak[i] / (u_nodes_[i] - vj);
            T[static_cast<size_t>(k) * Q + j] = acc;
        }
    });
    const double inv4pi2 = 1.0 / (4.0 * kPi * kPi);
    parallel_for(n, parallel, [&](int k) {
        for (int l = 0; l < n; ++l) {
            cplx acc = 0.0;
            const cplx* tk = &T[static_cast<size_t>(k) * Q];
            const cplx* bl = &B[static_cast<size_t>(l) * Q];
            for (int j = 0; j < Q; ++j) acc += tk[j] * bl[j];
            out[static_cast<size_t>(k) * n + l] = acc.real() * inv4pi2;
        }
    });
}

}  // namespace edgeproc::kernels
