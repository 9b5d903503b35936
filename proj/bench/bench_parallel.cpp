// Timing comparison of the serial reference paths against the OpenMP ones:
// kernel matrix assembly (Bessel, Wright, Meijer-G) and a Monte Carlo batch.

#include <chrono>
#include <cstdio>
#include <vector>

#include "edgeproc/fredholm.hpp"
#include "edgeproc/kernels.hpp"
#include "edgeproc/parallel.hpp"
#include "edgeproc/sampling.hpp"

using namespace edgeproc;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void bench_matrix(const char* name, const kernels::KernelEvaluator& ev, double a, double b,
                  int m) {
    std::vector<double> xs(m), K;
    const double p = ev.node_power();
    QuadratureRule r = gauss_legendre_on(std::pow(std::max(a, 0.0), 1.0 / p),
                                         std::pow(b, 1.0 / p), m);
    for (int i = 0; i < m; ++i) xs[i] = std::pow(r.nodes[i], p);

    auto t0 = clock_type::now();
    ev.fill_tilted_matrix(xs, K, /*parallel=*/false);
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    ev.fill_tilted_matrix(xs, K, /*parallel=*/true);
    double tp = seconds_since(t0);
    std::printf("%-28s m=%4d   serial %8.3f s   parallel %8.3f s   speedup %.2fx\n", name, m, ts,
                tp, ts / tp);
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", max_threads());

    kernels::BesselKernelEvaluator bessel(0.0);
    bench_matrix("bessel kernel matrix", bessel, 0.0, 400.0, 192);

    kernels::WrightKernelEvaluator wright(2.0, 0.0);
    bench_matrix("wright kernel matrix", wright, 0.0, 400.0, 128);

    ProcessSpec mg = ProcessSpec::meijer_g(2, 0, {0.0, 0.0}, {});
    kernels::MeijerKernelEvaluator meijer(mg, 100.0);
    bench_matrix("meijer-g kernel matrix", meijer, 0.0, 100.0, 96);

    // Monte Carlo batch
    const int reps = 16, n = 400;
    std::vector<double> first(reps);
    auto t0 = clock_type::now();
    parallel_for(reps, false, [&](int rep) {
        first[rep] = sampling::sample_lue_hard_edge(n, 0, 10, {7}, rep).points[0];
    });
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    parallel_for(reps, true, [&](int rep) {
        first[rep] = sampling::sample_lue_hard_edge(n, 0, 10, {7}, rep).points[0];
    });
    double tp = seconds_since(t0);
    std::printf("%-28s reps=%2d  serial %8.3f s   parallel %8.3f s   speedup %.2fx\n",
                "lue sampling batch", reps, ts, tp, ts / tp);
    return 0;
}
