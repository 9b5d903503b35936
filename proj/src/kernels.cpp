#include "edgeproc/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "edgeproc/errors.hpp"
#include "edgeproc/parallel.hpp"
#include "edgeproc/specfun.hpp"

namespace edgeproc::kernels {

using specfun::airy_ai_with_derivative;
using specfun::bessel_j;
using specfun::bessel_j_with_derivative;
using specfun::wright_bessel_scaled;

// ---------------------------------------------------------------------------
// Airy and Bessel kernels
// ---------------------------------------------------------------------------

double airy_kernel_diagonal(double x) {
    auto [ai, aip] = airy_ai_with_derivative(x);
    return aip * aip - x * ai * ai;
}

double airy_kernel(double x, double y) {
    if (std::abs(x - y) < 1e-6) return airy_kernel_diagonal(0.5 * (x + y));
    auto [ax, apx] = airy_ai_with_derivative(x);
    auto [ay, apy] = airy_ai_with_derivative(y);
    return (ax * apy - apx * ay) / (x - y);
}

double bessel_kernel_diagonal(double alpha, double x) {
    if (x < 0.0) throw std::domain_error("bessel_kernel: requires x > 0");
    double sx = std::sqrt(x);
    double j = bessel_j(alpha, sx);
    double jp = bessel_j(alpha + 1.0, sx);
    double jm = bessel_j(alpha - 1.0, sx);
    return (j * j - jp * jm) / 4.0;
}

double bessel_kernel(double alpha, double x, double y) {
    if (x <= 0.0 || y <= 0.0) throw std::domain_error("bessel_kernel: requires x, y > 0");
    if (std::abs(x - y) < 1e-6 * std::max(1.0, std::abs(x)))
        return bessel_kernel_diagonal(alpha, 0.5 * (x + y));
    auto [jx, jpx] = bessel_j_with_derivative(alpha, std::sqrt(x));
    auto [jy, jpy] = bessel_j_with_derivative(alpha, std::sqrt(y));
    return (std::sqrt(y) * jx * jpy - std::sqrt(x) * jy * jpx) / (2.0 * (x - y));
}

// ---------------------------------------------------------------------------
// evaluator plumbing
// ---------------------------------------------------------------------------

double KernelEvaluator::value(double x, double y) const {
    return std::exp(tilt(y) - tilt(x)) * tilted(x, y);
}

void KernelEvaluator::fill_tilted_matrix(const std::vector<double>& xs, std::vector<double>& out,
                                         bool parallel) const {
    const int n = static_cast<int>(xs.size());
    out.assign(static_cast<size_t>(n) * n, 0.0);
    parallel_for(n, parallel, [&](int i) {
        for (int j = 0; j < n; ++j) out[static_cast<size_t>(i) * n + j] = tilted(xs[i], xs[j]);
    });
}

double tilt_rate(const StructureFunction& f) {
    if (f.family == 2) {
        double th = f.theta;
        double rho = th / (1.0 + th);
        return (1.0 + th) * std::pow(th, -rho) * std::cos(kPi / (1.0 + th));
    }
    double rq = static_cast<double>(f.nus.size() - f.mus.size());
    return -(1.0 + rq) * std::sin(0.5 * kPi * (rq - 1.0) / (rq + 1.0));
}

double growth_exponent(const StructureFunction& f) {
    if (f.family == 2) return f.theta / (1.0 + f.theta);
    return 1.0 / (1.0 + static_cast<double>(f.nus.size() - f.mus.size()));
}

// ---------------------------------------------------------------------------
// Wright kernel: scaled factors and tilted t-integral
// ---------------------------------------------------------------------------
namespace {

struct WrightFactors {
    double theta, alpha, rho, ell;
    double a_p, b_p, a_q, b_q;

    explicit WrightFactors(double th, double al)
        : theta(th),
          alpha(al),
          rho(th / (1.0 + th)),
          ell((1.0 + th) * std::pow(th, -th / (1.0 + th)) * std::cos(kPi / (1.0 + th))),
          a_p((al + 1.0) / th),
          b_p(1.0 / th),
          a_q(al + 1.0),
          b_q(th) {}

    double lam(double w) const { return ell * std::pow(w, rho); }

    double p(double w) const {
        if (w <= 0.0) return std::exp(-std::lgamma(a_p));
        auto sv = wright_bessel_scaled(a_p, b_p, w);
        return sv.mantissa * std::exp(sv.exponent + lam(w));
    }
    double q(double w) const {
        if (w <= 0.0) return std::exp(-std::lgamma(a_q));
        auto sv = wright_bessel_scaled(a_q, b_q, std::pow(w, theta));
        return sv.mantissa * std::exp(sv.exponent - lam(w));
    }

    // local phase rates of p(x t), q(y t) as functions of tau = t^rho
    double phase_rate(double x, double y) const {
        double kp = (1.0 + theta) * std::pow(x / theta, rho) * std::abs(std::sin(kPi * theta / (1.0 + theta)));
        double kq = (1.0 + 1.0 / theta) * std::pow(theta * std::pow(y, theta), 1.0 / (1.0 + theta)) *
                    std::abs(std::sin(kPi / (1.0 + theta)));
        return kp + kq;
    }
};

// panel ladder on [0,1] in tau: geometric refinement toward both endpoints
// (integrand kink at 0, boundary layer of width 1/|dL| at 1), capped by the
// oscillation budget of ~8 radians per 16-point panel everywhere.
std::vector<double> main_branch_edges(double rate, double dL_neg) {
    const double osc = std::max(8.0 / std::max(rate, 1e-9), 1e-6);
    const double lay0 = 1.0 / std::max(std::abs(dL_neg), 8.0);
    std::vector<double> rev{1.0};
    double x = 1.0;
    while (x > 1e-11) {
        double h = std::min({osc, 0.08, 0.6 * (1.0 - x) + 0.4 * lay0, 0.55 * x + 1e-12});
        x -= h;
        if (x < 1e-11) x = 0.0;
        rev.push_back(x);
    }
    if (rev.back() != 0.0) rev.push_back(0.0);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

// panel ladder on [1, tau_max] for the complementary branch: resolves the
// e^{dL (1 - tau)} decay (scale 1/dL) and the oscillation
std::vector<double> complementary_edges(double rate, double dL, double tau_max) {
    const double osc = std::max(8.0 / std::max(rate, 1e-9), 1e-6);
    std::vector<double> edges{1.0};
    double x = 1.0;
    while (x < tau_max) {
        double h = std::min({osc, 0.25, 0.6 * (x - 1.0) + 0.35 / dL});
        x = std::min(x + h, tau_max);
        edges.push_back(x);
    }
    return edges;
}

// integrand of the tilted kernel in tau = t^rho on either branch
struct TiltedIntegrand {
    const WrightFactors& fac;
    double x, y, dL;

    double operator()(double tau) const {
        double t = std::pow(tau, 1.0 / fac.rho);
        double jac = (1.0 / fac.rho) * std::pow(tau, (1.0 - fac.rho) / fac.rho);
        return fac.p(x * t) * fac.q(y * t) * std::exp(dL * (1.0 - tau)) * std::pow(t, fac.alpha) * jac;
    }
};

double integrate_edges(const TiltedIntegrand& f, const std::vector<double>& edges) {
    const GaussLegendre& gl = gauss_legendre(16);
    double total = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        double mid = 0.5 * (edges[i] + edges[i + 1]);
        double half = 0.5 * (edges[i + 1] - edges[i]);
        if (half == 0.0) continue;
        double acc = 0.0;
        for (int g = 0; g < 16; ++g) acc += gl.w[g] * f(mid + half * gl.x[g]);
        total += half * acc;
    }
    return total;
}

// switch point between the [0,1] and [1,inf) representations
constexpr double kBranchSwitch = 10.0;

double wright_tilted_point(const WrightFactors& fac, double x, double y) {
    if (x <= 0.0 || y <= 0.0) throw std::domain_error("wright_kernel: requires x, y > 0");
    const double dL = fac.lam(x) - fac.lam(y);
    const double rate = fac.phase_rate(x, y);
    const double pref = fac.theta * std::pow(x * y, 0.5 * fac.alpha);
    if (dL <= kBranchSwitch) {
        TiltedIntegrand f{fac, x, y, dL};
        return pref * integrate_edges(f, main_branch_edges(rate, std::min(dL, 0.0)));
    }
    // complementary branch: -int_1^T, truncated where the exponential factor
    // is below 1e-19
    double tau_max = 1.0 + 44.0 / dL;
    std::vector<double> edges = complementary_edges(rate, dL, tau_max);
    TiltedIntegrand f{fac, x, y, dL};
    return -pref * integrate_edges(f, edges);
}

// piecewise-Chebyshev cache of a smooth 1-d function
class Cheb1D {
public:
    Cheb1D() = default;

    template <class F>
    void build(F&& fn, double lo, double hi, double panel_len, int npts) {
        lo_ = lo;
        hi_ = hi;
        npts_ = npts;
        npan_ = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel_len)));
        h_ = (hi - lo) / npan_;
        coef_.assign(static_cast<size_t>(npan_) * npts, 0.0);
        std::vector<double> vals(npts);
        for (int p = 0; p < npan_; ++p) {
            double a = lo + p * h_, b = a + h_;
            for (int i = 0; i < npts; ++i) {
                double th = kPi * (i + 0.5) / npts;
                double xx = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(th);
                vals[i] = fn(xx);
            }
            // Chebyshev coefficients from first-kind node values
            for (int j = 0; j < npts; ++j) {
                double acc = 0.0;
                for (int i = 0; i < npts; ++i)
                    acc += vals[i] * std::cos(j * kPi * (i + 0.5) / npts);
                coef_[static_cast<size_t>(p) * npts + j] = 2.0 * acc / npts;
            }
        }
    }

    double eval(double x) const {
        int p = static_cast<int>((x - lo_) / h_);
        p = std::clamp(p, 0, npan_ - 1);
        double a = lo_ + p * h_, b = a + h_;
        double u = (2.0 * x - a - b) / (b - a);
        const double* c = &coef_[static_cast<size_t>(p) * npts_];
        double b0 = 0.0, b1 = 0.0;
        for (int j = npts_ - 1; j >= 1; --j) {
            double tmp = 2.0 * u * b0 - b1 + c[j];
            b1 = b0;
            b0 = tmp;
        }
        return u * b0 - b1 + 0.5 * c[0];
    }

private:
    double lo_ = 0.0, hi_ = 1.0, h_ = 1.0;
    int npan_ = 0, npts_ = 0;
    std::vector<double> coef_;
};

// cached factors in xi = w^rho, direct series evaluation below w0
struct FactorCache {
    const WrightFactors& fac;
    double w0, xi0;
    Cheb1D pcache, qcache;

    FactorCache(const WrightFactors& f, double wmax) : fac(f) {
        w0 = 4.0;
        xi0 = std::pow(w0, fac.rho);
        double ximax = std::pow(std::max(wmax, 2.0 * w0), fac.rho);
        pcache.build([&](double xi) { return fac.p(std::pow(xi, 1.0 / fac.rho)); }, xi0, ximax, 0.7, 20);
        qcache.build([&](double xi) { return fac.q(std::pow(xi, 1.0 / fac.rho)); }, xi0, ximax, 0.7, 20);
    }
    double p(double w) const { return (w <= w0) ? fac.p(w) : pcache.eval(std::pow(w, fac.rho)); }
    double q(double w) const { return (w <= w0) ? fac.q(w) : qcache.eval(std::pow(w, fac.rho)); }
};

}  // namespace

WrightKernelEvaluator::WrightKernelEvaluator(double theta, double alpha)
    : theta_(theta), alpha_(alpha) {
    if (!(theta > 0.0) || !(alpha > -1.0))
        throw std::invalid_argument("WrightKernelEvaluator: requires theta > 0, alpha > -1");
    WrightFactors fac(theta, alpha);
    rho_ = fac.rho;
    ell_ = fac.ell;
    a_p_ = fac.a_p;
    b_p_ = fac.b_p;
    a_q_ = fac.a_q;
    b_q_ = fac.b_q;
}

double WrightKernelEvaluator::tilt(double x) const { return ell_ * std::pow(x, rho_); }

double WrightKernelEvaluator::p_factor(double w) const {
    return WrightFactors(theta_, alpha_).p(w);
}
double WrightKernelEvaluator::q_factor(double w) const {
    return WrightFactors(theta_, alpha_).q(w);
}

double WrightKernelEvaluator::tilted(double x, double y) const {
    WrightFactors fac(theta_, alpha_);
    return wright_tilted_point(fac, x, y);
}

void WrightKernelEvaluator::fill_tilted_matrix(const std::vector<double>& xs,
                                               std::vector<double>& out, bool parallel) const {
    const int n = static_cast<int>(xs.size());
    out.assign(static_cast<size_t>(n) * n, 0.0);
    WrightFactors fac(theta_, alpha_);
    const double s = *std::max_element(xs.begin(), xs.end());

    std::vector<double> lam(n);
    for (int i = 0; i < n; ++i) lam[i] = fac.lam(xs[i]);
    const double dL_min = *std::min_element(lam.begin(), lam.end()) -
                          *std::max_element(lam.begin(), lam.end());

    // shared main-branch grid in tau
    const double rate = fac.phase_rate(s, s);
    std::vector<double> edges = main_branch_edges(rate, dL_min);
    std::vector<double> taus, wts;
    const GaussLegendre& gl = gauss_legendre(16);
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        double mid = 0.5 * (edges[i] + edges[i + 1]);
        double half = 0.5 * (edges[i + 1] - edges[i]);
        for (int g = 0; g < 16; ++g) {
            taus.push_back(mid + half * gl.x[g]);
            wts.push_back(half * gl.w[g]);
        }
    }
    const int nt = static_cast<int>(taus.size());
    std::vector<double> ts(nt), jacs(nt);
    for (int j = 0; j < nt; ++j) {
        ts[j] = std::pow(taus[j], 1.0 / rho_);
        jacs[j] = wts[j] * (1.0 / rho_) * std::pow(taus[j], (1.0 - rho_) / rho_) *
                  std::pow(ts[j], alpha_);
    }

    // factor cache covering both branches (complementary arguments reach
    // x * (1 + 44/10)^{1/rho})
    const double wmax = s * std::pow(1.0 + 44.0 / kBranchSwitch, 1.0 / rho_) * 1.05;
    FactorCache cache(fac, wmax);

    // factor tables with the boundary-layer exponential folded in per row
    std::vector<double> P(static_cast<size_t>(n) * nt), Q(static_cast<size_t>(n) * nt);
    parallel_for(n, parallel, [&](int i) {
        for (int j = 0; j < nt; ++j) {
            P[static_cast<size_t>(i) * nt + j] =
                cache.p(xs[i] * ts[j]) * std::exp(lam[i] * (1.0 - taus[j]));
            Q[static_cast<size_t>(i) * nt + j] =
                cache.q(xs[i] * ts[j]) * std::exp(-lam[i] * (1.0 - taus[j]));
        }
    });

    parallel_for(n, parallel, [&](int i) {
        for (int j = 0; j < n; ++j) {
            const double dL = lam[i] - lam[j];
            const double pref = theta_ * std::pow(xs[i] * xs[j], 0.5 * alpha_);
            double v;
            if (dL <= kBranchSwitch) {
                const double* pi = &P[static_cast<size_t>(i) * nt];
                const double* qj = &Q[static_cast<size_t>(j) * nt];
                double acc = 0.0;
                for (int k = 0; k < nt; ++k) acc += jacs[k] * pi[k] * qj[k];
                v = pref * acc;
            } else {
                // complementary branch with cached factors
                double tau_max = 1.0 + 44.0 / dL;
                double prate = fac.phase_rate(xs[i], xs[j]);
                std::vector<double> e2 = complementary_edges(prate, dL, tau_max);
                double acc = 0.0;
                for (size_t seg = 0; seg + 1 < e2.size(); ++seg) {
                    double mid = 0.5 * (e2[seg] + e2[seg + 1]);
                    double half = 0.5 * (e2[seg + 1] - e2[seg]);
                    for (int g = 0; g < 16; ++g) {
                        double tau = mid + half * gl.x[g];
                        double t = std::pow(tau, 1.0 / rho_);
                        double jac = (1.0 / rho_) * std::pow(tau, (1.0 - rho_) / rho_);
                        acc += half * gl.w[g] * cache.p(xs[i] * t) * cache.q(xs[j] * t) *
                               std::exp(dL * (1.0 - tau)) * std::pow(t, alpha_) * jac;
                    }
                }
                v = -pref * acc;
            }
            out[static_cast<size_t>(i) * n + j] = v;
        }
    });
}

double wright_kernel(double theta, double alpha, double x, double y) {
    WrightKernelEvaluator ev(theta, alpha);
    return ev.value(x, y);
}

double meijer_kernel(const ProcessSpec& spec, double x, double y) {
    if (spec.kind != ProcessKind::MeijerG)
        throw std::invalid_argument("meijer_kernel: spec must be MeijerG");
    MeijerKernelEvaluator ev(spec, std::max(x, y));
    return ev.value(x, y);
}

std::unique_ptr<KernelEvaluator> make_evaluator(const ProcessSpec& spec, double max_x) {
    switch (spec.kind) {
        case ProcessKind::Airy: return std::make_unique<AiryKernelEvaluator>();
        case ProcessKind::Bessel: return std::make_unique<BesselKernelEvaluator>(spec.alpha);
        case ProcessKind::Wright:
            return std::make_unique<WrightKernelEvaluator>(spec.theta, spec.alpha);
        case ProcessKind::MeijerG: return std::make_unique<MeijerKernelEvaluator>(spec, max_x);
    }
    throw std::invalid_argument("make_evaluator: unknown kind");
}

}  // namespace edgeproc::kernels
