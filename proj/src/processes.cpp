#include "edgeproc/processes.hpp"

#include <algorithm>
#include <stdexcept>

#include "edgeproc/specfun.hpp"

namespace edgeproc {

std::string to_string(ProcessKind k) {
    switch (k) {
        case ProcessKind::Airy: return "airy";
        case ProcessKind::Bessel: return "bessel";
        case ProcessKind::Wright: return "wright";
        case ProcessKind::MeijerG: return "meijerg";
    }
    return "?";
}

ProcessSpec ProcessSpec::airy() {
    ProcessSpec s;
    s.kind = ProcessKind::Airy;
    return s;
}

ProcessSpec ProcessSpec::bessel(double alpha) {
    ProcessSpec s;
    s.kind = ProcessKind::Bessel;
    s.alpha = alpha;
    s.validate();
    return s;
}

ProcessSpec ProcessSpec::wright(double theta, double alpha) {
    ProcessSpec s;
    s.kind = ProcessKind::Wright;
    s.theta = theta;
    s.alpha = alpha;
    s.validate();
    return s;
}

ProcessSpec ProcessSpec::meijer_g(int r, int q, std::vector<double> nus, std::vector<double> mus) {
    ProcessSpec s;
    s.kind = ProcessKind::MeijerG;
    s.r = r;
    s.q = q;
    s.nus = std::move(nus);
    s.mus = std::move(mus);
    s.validate();
    return s;
}

void ProcessSpec::validate() const {
    switch (kind) {
        case ProcessKind::Airy:
            return;
        case ProcessKind::Bessel:
            if (!(alpha > -1.0)) throw std::invalid_argument("Bessel: requires alpha > -1");
            return;
        case ProcessKind::Wright:
            if (!(alpha > -1.0)) throw std::invalid_argument("Wright: requires alpha > -1");
            if (!(theta > 0.0)) throw std::invalid_argument("Wright: requires theta > 0");
            return;
        case ProcessKind::MeijerG: {
            if (!(r > q && q >= 0)) throw std::invalid_argument("MeijerG: requires r > q >= 0");
            if (static_cast<int>(nus.size()) != r)
                throw std::invalid_argument("MeijerG: nus must have length r");
            if (static_cast<int>(mus.size()) != q)
                throw std::invalid_argument("MeijerG: mus must have length q");
            for (double v : nus)
                if (!(v >= 0.0)) throw std::invalid_argument("MeijerG: nu_j must be >= 0");
            for (int k = 0; k < q; ++k) {
                if (!(mus[k] > 0.0)) throw std::invalid_argument("MeijerG: mu_k must be > 0");
                if (!(mus[k] > nus[k])) throw std::invalid_argument("MeijerG: requires mu_k > nu_k");
            }
            return;
        }
    }
}

StructureFunction StructureFunction::meijer(std::vector<double> nus, std::vector<double> mus) {
    StructureFunction f;
    f.family = 1;
    f.nus = std::move(nus);
    f.mus = std::move(mus);
    return f;
}

StructureFunction StructureFunction::wright(double theta, double alpha) {
    StructureFunction f;
    f.family = 2;
    f.theta = theta;
    f.alpha = alpha;
    return f;
}

StructureFunction StructureFunction::for_spec(const ProcessSpec& spec) {
    if (spec.kind == ProcessKind::MeijerG) return meijer(spec.nus, spec.mus);
    if (spec.kind == ProcessKind::Wright) return wright(spec.theta, spec.alpha);
    throw std::invalid_argument("StructureFunction: only Wright and MeijerG have one");
}

cplx StructureFunction::log_value(cplx z) const {
    using specfun::log_gamma;
    if (family == 1) {
        cplx v = log_gamma(z);
        for (double mu : mus) v += log_gamma(1.0 + mu - z);
        for (double nu : nus) v -= log_gamma(1.0 + nu - z);
        return v;
    }
    return log_gamma(z + 0.5 * alpha) - log_gamma((0.5 * alpha + 1.0 - z) / theta);
}

std::pair<double, double> StructureFunction::apex_interval() const {
    if (family == 1) {
        double numin = *std::min_element(nus.begin(), nus.end());
        return {0.0, 1.0 + numin};
    }
    return {-0.5 * alpha, 1.0 + 0.5 * alpha};
}

}  // namespace edgeproc
