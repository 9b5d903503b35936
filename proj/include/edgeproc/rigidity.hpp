#pragma once

// Counting-function and point-deviation statistics, envelope checks, and the
// Monte Carlo tail-probability estimator.

#include <cstddef>
#include <functional>
#include <vector>

#include "edgeproc/processes.hpp"
#include "edgeproc/sampling.hpp"

namespace edgeproc::rigidity {

// #{k : x_k <= x}, binary search on the sorted sample
std::size_t counting_function(const sampling::PointSample& sample, double x);

struct RigidityReport {
    int k0 = 0;
    int k_max = 0;
    double eps = 0.0;
    double sup_statistic = 0.0;
    double bound = 0.0;  // sqrt(2 (1+eps) / a) = 2 pi sqrt(1+eps), a = 1/(2 pi^2)
    bool violated = false;
    std::vector<double> per_k;  // |mu(x_k) - k| / sigma^2(mu^{-1}(k)), k = k0..k_max
};

// sup_{k in [k0, k_max]} |mu(x_k) - k| / sigma^2(mu^{-1}(k))
RigidityReport sup_point_deviation(const sampling::PointSample& sample, const ProcessSpec& spec,
                                   int k0, int k_max, double eps);

// sup_{x in [s, max point]} |N(x) - mu(x)| / sigma^2(x), evaluated at jump
// points and their left limits
double sup_counting_deviation(const sampling::PointSample& sample, const ProcessSpec& spec,
                              double s);

struct McConfig {
    int reps = 50;
    int k_max = 30;
    sampling::RngSeed seed;
    std::function<sampling::PointSample(std::uint64_t replica)> sampler;
    bool parallel = true;
};

struct TailProbability {
    double fraction = 0.0;     // replicas with any envelope violation in [k0, k_max]
    double wilson_half = 0.0;  // 95% Wilson interval half-width
};

TailProbability tail_probability_mc(const ProcessSpec& spec, const McConfig& config, double eps,
                                    int k0);

}  // namespace edgeproc::rigidity
