#include "edgeproc/rigidity.hpp"

#include <algorithm>
#include <cmath>

#include "edgeproc/asymptotics.hpp"
#include "edgeproc/parallel.hpp"

namespace edgeproc::rigidity {

using asymptotics::mu_inverse;
using asymptotics::mu_of;
using asymptotics::rigidity_envelope;
using asymptotics::sigma2_of;

std::size_t counting_function(const sampling::PointSample& sample, double x) {
    const auto& p = sample.points;
    return static_cast<std::size_t>(std::upper_bound(p.begin(), p.end(), x) - p.begin());
}

RigidityReport sup_point_deviation(const sampling::PointSample& sample, const ProcessSpec& spec,
                                   int k0, int k_max, double eps) {
    if (k0 < 2) throw std::domain_error("sup_point_deviation: requires k0 >= 2");
    if (k_max > static_cast<int>(sample.points.size()))
        throw std::invalid_argument("sup_point_deviation: k_max exceeds sample size");
    RigidityReport rep;
    rep.k0 = k0;
    rep.k_max = k_max;
    rep.eps = eps;
    rep.bound = 2.0 * kPi * std::sqrt(1.0 + eps);
    for (int k = k0; k <= k_max; ++k) {
        const double xk = sample.points[k - 1];
        const double dev = std::abs(mu_of(spec, xk) - k) / sigma2_of(spec, mu_inverse(spec, k));
        rep.per_k.push_back(dev);
        rep.sup_statistic = std::max(rep.sup_statistic, dev);
    }
    rep.violated = rep.sup_statistic > rep.bound;
    return rep;
}

double sup_counting_deviation(const sampling::PointSample& sample, const ProcessSpec& spec,
                              double s) {
    const auto& pts = sample.points;
    if (pts.empty()) throw std::invalid_argument("sup_counting_deviation: empty sample");
    double sup = 0.0;
    auto stat = [&](double x, double n) {
        if (x <= s) return;
        sup = std::max(sup, std::abs(n - mu_of(spec, x)) / sigma2_of(spec, x));
    };
    // the end point s itself
    stat(std::max(s, pts.front()), static_cast<double>(counting_function(sample, s)));
    for (std::size_t j = 0; j < pts.size(); ++j) {
        // at the jump: N = j+1; left limit: N = j
        stat(pts[j], static_cast<double>(j + 1));
        stat(pts[j], static_cast<double>(j));
    }
    return sup;
}

TailProbability tail_probability_mc(const ProcessSpec& spec, const McConfig& config, double eps,
                                    int k0) {
    if (config.reps < 50) throw std::invalid_argument("tail_probability_mc: requires reps >= 50");
    if (!config.sampler) throw std::invalid_argument("tail_probability_mc: sampler not set");
    std::vector<int> violated(config.reps, 0);
    parallel_for(config.reps, config.parallel, [&](int rep) {
        sampling::PointSample sample = config.sampler(static_cast<std::uint64_t>(rep));
        const int k_hi = std::min(config.k_max, static_cast<int>(sample.points.size()));
        for (int k = std::max(k0, 2); k <= k_hi; ++k) {
            auto band = rigidity_envelope(spec, k, eps);
            const double xk = sample.points[k - 1];
            if (xk < band.lower || xk > band.upper) {
                violated[rep] = 1;
                break;
            }
        }
    });
    int cnt = 0;
    for (int v : violated) cnt += v;
    const double n = static_cast<double>(config.reps);
    const double phat = cnt / n;
    const double z = 1.959963984540054;  // 95%
    const double denom = 1.0 + z * z / n;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
    return {phat, half};
}

}  // namespace edgeproc::rigidity
