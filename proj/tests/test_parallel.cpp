#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "edgeproc/fredholm.hpp"
#include "edgeproc/kernels.hpp"
#include "edgeproc/parallel.hpp"
#include "edgeproc/sampling.hpp"

// Serial reference paths and the OpenMP paths must agree bit for bit: every
// parallel loop writes disjoint elements and each element's computation is
// independent of the schedule.

using namespace edgeproc;

namespace {

std::vector<double> nodes_for(const kernels::KernelEvaluator& ev, double b, int m) {
    const double p = ev.node_power();
    QuadratureRule r = gauss_legendre_on(0.0, std::pow(b, 1.0 / p), m);
    std::vector<double> xs(m);
    for (int i = 0; i < m; ++i) xs[i] = std::pow(r.nodes[i], p);
    return xs;
}

}  // namespace

TEST_CASE("bessel kernel matrix: serial == parallel (bitwise)") {
    kernels::BesselKernelEvaluator ev(0.5);
    auto xs = nodes_for(ev, 80.0, 48);
    std::vector<double> a, b;
    ev.fill_tilted_matrix(xs, a, false);
    ev.fill_tilted_matrix(xs, b, true);
    CHECK(a == b);
}

TEST_CASE("wright kernel matrix: serial == parallel (bitwise)") {
    kernels::WrightKernelEvaluator ev(2.0, 0.0);
    auto xs = nodes_for(ev, 120.0, 32);
    std::vector<double> a, b;
    ev.fill_tilted_matrix(xs, a, false);
    ev.fill_tilted_matrix(xs, b, true);
    CHECK(a == b);
}

TEST_CASE("meijer kernel matrix: serial == parallel (bitwise)") {
    ProcessSpec spec = ProcessSpec::meijer_g(2, 0, {0.0, 0.0}, {});
    kernels::MeijerKernelEvaluator ev(spec, 30.0);
    auto xs = nodes_for(ev, 30.0, 24);
    std::vector<double> a, b;
    ev.fill_tilted_matrix(xs, a, false);
    ev.fill_tilted_matrix(xs, b, true);
    CHECK(a == b);
}

TEST_CASE("determinant identical under both paths") {
    kernels::BesselKernelEvaluator ev(0.0);
    auto a = fredholm::nystrom_log_det(ev, 0.0, 60.0, 0.3, 64, false);
    auto b = fredholm::nystrom_log_det(ev, 0.0, 60.0, 0.3, 64, true);
    CHECK(a.log_det == b.log_det);
}

TEST_CASE("MC batch: per-replica streams independent of schedule") {
    const int reps = 12;
    std::vector<double> serial(reps), parallel(reps);
    parallel_for(reps, false, [&](int rep) {
        serial[rep] = sampling::sample_lue_hard_edge(120, 0, 5, {42}, rep).points[0];
    });
    parallel_for(reps, true, [&](int rep) {
        parallel[rep] = sampling::sample_lue_hard_edge(120, 0, 5, {42}, rep).points[0];
    });
    CHECK(serial == parallel);
}
