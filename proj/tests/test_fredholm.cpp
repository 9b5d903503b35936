#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "edgeproc/asymptotics.hpp"
#include "edgeproc/errors.hpp"
#include "edgeproc/fredholm.hpp"

using namespace edgeproc;
using namespace edgeproc::fredholm;

TEST_CASE("t = 1 gives log det 0 for every kernel") {
    kernels::BesselKernelEvaluator be(0.0);
    CHECK(nystrom_log_det(be, 0.0, 30.0, 1.0, 16).log_det == 0.0);
    kernels::AiryKernelEvaluator ai;
    CHECK(nystrom_log_det(ai, -4.0, 8.0, 1.0, 16).log_det == 0.0);
}

TEST_CASE("s -> 0+ gives vanishing log det") {
    kernels::BesselKernelEvaluator be(0.0);
    double ld = nystrom_log_det(be, 0.0, 1e-8, 0.5, 16).log_det;
    CHECK(std::abs(ld) < 1e-8);
}

TEST_CASE("nu = 0 short-circuits") {
    CHECK(exp_moment(ProcessSpec::bessel(0.0), 10.0, 0.0) == 0.0);
    CHECK(exp_moment(ProcessSpec::airy(), 3.0, 0.0) == 0.0);
}

TEST_CASE("self-convergence: Bessel s = 100 stable between m = 64 and 128") {
    kernels::BesselKernelEvaluator be(0.0);
    const double t = std::exp(-2.0 * kPi * 0.25);
    double a = nystrom_log_det(be, 0.0, 100.0, t, 64).log_det;
    double b = nystrom_log_det(be, 0.0, 100.0, t, 128).log_det;
    CHECK(std::abs(a - b) < 1e-8);
}

TEST_CASE("monotonicity in s for fixed nu > 0") {
    ProcessSpec be = ProcessSpec::bessel(0.5);
    double prev = 0.0;
    for (double s : {5.0, 25.0, 80.0}) {
        double ld = exp_moment(be, s, 0.3);
        CHECK(ld < prev);
        prev = ld;
    }
}

TEST_CASE("airy truncation independence") {
    kernels::AiryKernelEvaluator ai;
    const double t = std::exp(-2.0 * kPi * 0.2);
    double T = airy_upper_cutoff(6.0);
    double a = nystrom_log_det_auto(ai, -6.0, T, t, 1e-9).log_det;
    double b = nystrom_log_det_auto(ai, -6.0, T + 3.0, t, 1e-9).log_det;
    CHECK(std::abs(a - b) < 1e-9);
}

TEST_CASE("nu < -1.5 guard") {
    CHECK_THROWS_AS(exp_moment(ProcessSpec::bessel(0.0), 5.0, -2.0), std::domain_error);
}

TEST_CASE("negative nu within the guard works") {
    double ld = exp_moment(ProcessSpec::bessel(0.0), 5.0, -0.3);
    CHECK(ld > 0.0);  // E[e^{+|gamma| N}] > 1
}

TEST_CASE("Bessel exp moment matches asymptote at s = 400") {
    ProcessSpec be = ProcessSpec::bessel(0.0);
    double ld = exp_moment(be, 400.0, 0.25);
    double asy = asymptotics::moment_asymptote(be, 400.0, 0.25);
    CHECK(std::abs(ld - asy) < 0.02);
}

TEST_CASE("Wright theta=1 moment equals Bessel at 4s") {
    ProcessSpec wr = ProcessSpec::wright(1.0, 0.0);
    ProcessSpec be = ProcessSpec::bessel(0.0);
    double a = exp_moment(wr, 20.0, 0.25, 1e-8);
    double b = exp_moment(be, 80.0, 0.25, 1e-8);
    CHECK(a == doctest::Approx(b).epsilon(1e-6));
}

TEST_CASE("mean via trace equals mean via derivative (Bessel s = 50)") {
    ProcessSpec be = ProcessSpec::bessel(0.0);
    double trace = counting_mean_trace(be, 50.0);
    auto [mean, var] = counting_mean_var_numeric(be, 50.0);
    CHECK(std::abs(mean - trace) < 1e-5);
    CHECK(var >= 0.0);
}

TEST_CASE("MeijerG determinant is invariant under kernel transpose (small m)") {
    // the kernel is non-symmetric; the determinant must not care
    ProcessSpec mg = ProcessSpec::meijer_g(2, 0, {0.0, 0.0}, {});
    kernels::MeijerKernelEvaluator ev(mg, 10.0);
    const int m = 24;
    const double t = std::exp(-2.0 * kPi * 0.2);
    QuadratureRule r = gauss_legendre_on(0.0, std::pow(10.0, 1.0 / 3.0), m);
    std::vector<double> xs(m), ws(m);
    for (int i = 0; i < m; ++i) {
        xs[i] = std::pow(r.nodes[i], 3.0);
        ws[i] = r.weights[i] * 3.0 * r.nodes[i] * r.nodes[i];
    }
    std::vector<double> K;
    ev.fill_tilted_matrix(xs, K, false);
    auto logdet_of = [&](bool transpose) {
        std::vector<double> M(static_cast<size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                double kij = transpose ? K[static_cast<size_t>(j) * m + i]
                                       : K[static_cast<size_t>(i) * m + j];
                M[static_cast<size_t>(i) * m + j] =
                    (i == j ? 1.0 : 0.0) - (1.0 - t) * std::sqrt(ws[i] * ws[j]) * kij;
            }
        return lu_log_det(M, m).value;
    };
    CHECK(logdet_of(false) == doctest::Approx(logdet_of(true)).epsilon(1e-10));
}
