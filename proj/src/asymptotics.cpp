#include "edgeproc/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "edgeproc/specfun.hpp"

namespace edgeproc::asymptotics {

using specfun::log_barnes_g_conjugate_pair;

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

MomentAsymptotics moment_asymptotics(const ProcessSpec& spec) {
    spec.validate();
    MomentAsymptotics m;
    switch (spec.kind) {
        case ProcessKind::Airy:
            m.rho = 1.5;
            m.mu_coeff = 2.0 / (3.0 * kPi);
            m.sigma2_coeff = 3.0 / (4.0 * kPi * kPi);
            m.error_exponent = 1.5;
            return m;
        case ProcessKind::Bessel:
            m.rho = 0.5;
            m.mu_coeff = 1.0 / kPi;
            m.sigma2_coeff = 1.0 / (4.0 * kPi * kPi);
            m.error_exponent = 0.5;
            return m;
        case ProcessKind::Wright: {
            const double th = spec.theta;
            m.rho = th / (1.0 + th);
            m.mu_coeff = (1.0 + th) / kPi * std::pow(th, -m.rho) *
                         std::cos(0.5 * kPi * (1.0 - th) / (1.0 + th));
            m.sigma2_coeff = m.rho / (2.0 * kPi * kPi);
            m.error_exponent = m.rho;
            return m;
        }
        case ProcessKind::MeijerG: {
            const double rq = static_cast<double>(spec.r - spec.q);
            m.rho = 1.0 / (1.0 + rq);
            m.mu_coeff = (1.0 + rq) / kPi * std::cos(0.5 * kPi * (rq - 1.0) / (rq + 1.0));
            m.sigma2_coeff = m.rho / (2.0 * kPi * kPi);
            m.error_exponent = m.rho;
            return m;
        }
    }
    throw std::invalid_argument("moment_asymptotics: unknown kind");
}

double mu_of(const ProcessSpec& spec, double s) {
    MomentAsymptotics m = moment_asymptotics(spec);
    return m.mu_coeff * std::pow(s, m.rho);
}

double sigma2_of(const ProcessSpec& spec, double s) {
    MomentAsymptotics m = moment_asymptotics(spec);
    return m.sigma2_coeff * std::log(s);
}

double mu_inverse(const ProcessSpec& spec, double k) {
    MomentAsymptotics m = moment_asymptotics(spec);
    if (!(k >= 0.0)) throw std::domain_error("mu_inverse: requires k >= 0");
    return std::pow(k / m.mu_coeff, 1.0 / m.rho);
}

double log_constant_C(const ProcessSpec& spec, double nu) {
    spec.validate();
    if (nu == 0.0) return 0.0;
    const double gp = log_barnes_g_conjugate_pair(nu);
    switch (spec.kind) {
        case ProcessKind::Airy:
            return nu * nu * std::log(8.0) + gp;
        case ProcessKind::Bessel:
            return kPi * nu * spec.alpha + nu * nu * std::log(4.0) + gp;
        case ProcessKind::Wright: {
            const double th = spec.theta;
            const double rho = th / (1.0 + th);
            const double bracket =
                4.0 * (1.0 + th) * std::pow(th, -rho) * std::pow(std::sin(kPi * th / (1.0 + th)), 2);
            return kPi * nu * (1.0 - th + 2.0 * spec.alpha) / (1.0 + th) +
                   nu * nu * std::log(bracket) + gp;
        }
        case ProcessKind::MeijerG: {
            const double rq = static_cast<double>(spec.r - spec.q);
            const double bracket = 4.0 * (1.0 + rq) * std::pow(std::sin(kPi / (1.0 + rq)), 2);
            return 2.0 * kPi * nu / (1.0 + rq) * (sum(spec.nus) - sum(spec.mus)) +
                   nu * nu * std::log(bracket) + gp;
        }
    }
    throw std::invalid_argument("log_constant_C: unknown kind");
}

double moment_asymptote(const ProcessSpec& spec, double s, double nu) {
    if (!(s > 0.0)) throw std::domain_error("moment_asymptote: requires s > 0");
    return -2.0 * kPi * nu * mu_of(spec, s) + 2.0 * kPi * kPi * nu * nu * sigma2_of(spec, s) +
           log_constant_C(spec, nu);
}

std::pair<double, double> counting_mean_var_asym(const ProcessSpec& spec, double s) {
    spec.validate();
    if (!(s > 0.0)) throw std::domain_error("counting_mean_var_asym: requires s > 0");
    if (spec.kind == ProcessKind::Wright) {
        const double th = spec.theta;
        const double rho = th / (1.0 + th);
        const double bracket =
            4.0 * (1.0 + th) * std::pow(th, -rho) * std::pow(std::sin(kPi * th / (1.0 + th)), 2);
        double mean = mu_of(spec, s) - (1.0 - th + 2.0 * spec.alpha) / (2.0 * (1.0 + th));
        double var = sigma2_of(spec, s) + std::log(bracket) / (2.0 * kPi * kPi) +
                     (1.0 + kEulerGamma) / (2.0 * kPi * kPi);
        return {mean, var};
    }
    if (spec.kind == ProcessKind::MeijerG) {
        const double rq = static_cast<double>(spec.r - spec.q);
        const double bracket = 4.0 * (1.0 + rq) * std::pow(std::sin(kPi / (1.0 + rq)), 2);
        double mean = mu_of(spec, s) - (sum(spec.nus) - sum(spec.mus)) / (1.0 + rq);
        double var = sigma2_of(spec, s) + std::log(bracket) / (2.0 * kPi * kPi) +
                     (1.0 + kEulerGamma) / (2.0 * kPi * kPi);
        return {mean, var};
    }
    throw std::domain_error("counting_mean_var_asym: Wright or MeijerG only");
}

EnvelopeBand rigidity_envelope(const ProcessSpec& spec, int k, double eps) {
    if (k < 2) throw std::domain_error("rigidity_envelope: requires k >= 2");
    if (!(eps > 0.0)) throw std::domain_error("rigidity_envelope: requires eps > 0");
    const double delta = (1.0 / kPi + eps) * std::log(static_cast<double>(k));
    EnvelopeBand band;
    double low = static_cast<double>(k) - delta;
    if (low <= 0.0) {
        low = 0.0;
        band.clamped = true;
    }
    band.lower = mu_inverse(spec, low);
    band.upper = mu_inverse(spec, static_cast<double>(k) + delta);
    return band;
}

SaddleData SaddleData::from_spec(const ProcessSpec& spec) {
    spec.validate();
    SaddleData d;
    if (spec.kind == ProcessKind::Wright) {
        const double th = spec.theta, al = spec.alpha;
        d.c1 = 1.0;
        d.c2 = 1.0 / th;
        d.c3 = -(th + 1.0 + std::log(th)) / th;
        d.c4 = (th - 1.0) * (1.0 + al) / (2.0 * (th + 1.0));
        d.c5 = 0.5 * al;
        d.c6 = (th - al - 1.0) / (2.0 * th);
    } else if (spec.kind == ProcessKind::MeijerG) {
        const double rq = static_cast<double>(spec.r - spec.q);
        const double numin = *std::min_element(spec.nus.begin(), spec.nus.end());
        d.c1 = 1.0;
        d.c2 = rq;
        d.c3 = -(rq + 1.0);
        d.c4 = 0.5 * numin - (sum(spec.nus) - sum(spec.mus)) / (rq + 1.0);
        d.c5 = 0.5 * numin;
        d.c6 = rq * 0.5 * numin - sum(spec.nus) + sum(spec.mus);
    } else {
        throw std::domain_error("SaddleData: Wright or MeijerG only");
    }
    const double R = std::exp(-(d.c1 + d.c2 + d.c3) / (d.c1 + d.c2));
    const double phi = 0.5 * kPi * (d.c2 - d.c1) / (d.c1 + d.c2);
    d.b2 = R * std::exp(cplx(0.0, phi));
    d.b1 = -std::conj(d.b2);
    d.rho = 1.0 / (d.c1 + d.c2);
    d.fp_b2 = std::sqrt((d.c1 + d.c2) / d.b2);
    d.ell = -(d.c1 + d.c2) * R * std::sin(phi);
    d.ell_tilde = (d.c1 + d.c2) * R * std::cos(phi);
    return d;
}

double SaddleData::saddle_equation_residual() const {
    // h'(b2) = 0 with h(z) = -c1 z log(i z) - c2 z log(-i z) - c3 z
    const cplx i(0.0, 1.0);
    cplx res = -(c1 + c2 + c3) - c1 * std::log(i * b2) - c2 * std::log(-i * b2);
    return std::abs(res);
}

SaddleCrossCheck saddle_crosscheck(const ProcessSpec& spec, double nu) {
    SaddleData d = SaddleData::from_spec(spec);
    SaddleCrossCheck c;
    c.mu_coeff = d.b2.real() / (kPi * d.rho);
    c.sigma2_coeff = d.rho / (2.0 * kPi * kPi);
    c.log_C = -2.0 * kPi * nu * (d.c1 * d.c6 - d.c2 * d.c5) / (d.c1 + d.c2) +
              2.0 * nu * nu * std::log(std::abs((d.b2 - d.b1) * d.fp_b2)) +
              log_barnes_g_conjugate_pair(nu);
    return c;
}

double symmetry_check(double theta, double alpha, double s, double nu) {
    ProcessSpec a = ProcessSpec::wright(theta, alpha);
    const double alpha_star = (1.0 + alpha) / theta - 1.0;
    ProcessSpec b = ProcessSpec::wright(1.0 / theta, alpha_star);
    const double s_star = std::pow(s, theta);
    double d_mu = std::abs(mu_of(a, s) - mu_of(b, s_star));
    double d_s2 = std::abs(sigma2_of(a, s) - sigma2_of(b, s_star));
    double d_c = std::abs(log_constant_C(a, nu) - log_constant_C(b, nu));
    return std::max({d_mu, d_s2, d_c});
}

}  // namespace edgeproc::asymptotics
