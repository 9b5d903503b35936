#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "edgeproc/errors.hpp"
#include "edgeproc/kernels.hpp"
#include "edgeproc/specfun.hpp"

using namespace edgeproc;
using namespace edgeproc::kernels;

TEST_CASE("airy kernel symmetry and diagonal") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> U(-6.0, 6.0);
    for (int i = 0; i < 30; ++i) {
        double x = U(gen), y = U(gen);
        CHECK(std::abs(airy_kernel(x, y) - airy_kernel(y, x)) < 1e-13);
    }
    // K(0,0) = Ai'(0)^2
    CHECK(airy_kernel(0.0, 0.0) == doctest::Approx(0.06698748).epsilon(1e-6));
    // analytic diagonal vs difference quotient at |x-y| = 1e-4
    for (double x : {-4.0, -1.0, 0.5, 2.0}) {
        double dq = airy_kernel(x + 5e-5, x - 5e-5);
        CHECK(airy_kernel_diagonal(x) == doctest::Approx(dq).epsilon(1e-7));
    }
}

TEST_CASE("airy kernel diagonal positivity") {
    for (double x = -10.0; x <= 4.0; x += 0.35)
        CHECK(airy_kernel_diagonal(x) >= 0.0);
}

TEST_CASE("bessel kernel symmetry, diagonal, positivity") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> U(0.05, 60.0);
    for (double alpha : {0.0, 0.5, 2.0}) {
        for (int i = 0; i < 20; ++i) {
            double x = U(gen), y = U(gen);
            CHECK(std::abs(bessel_kernel(alpha, x, y) - bessel_kernel(alpha, y, x)) < 1e-13);
        }
        for (double x : {0.3, 2.0, 17.0, 44.0}) {
            double dq = bessel_kernel(alpha, x + 5e-5, x - 5e-5);
            CHECK(bessel_kernel_diagonal(alpha, x) == doctest::Approx(dq).epsilon(1e-6));
            CHECK(bessel_kernel_diagonal(alpha, x) >= 0.0);
        }
    }
    CHECK_THROWS_AS(bessel_kernel(0.0, -1.0, 2.0), std::domain_error);
}

TEST_CASE("bessel kernel half-integer closed form") {
    // alpha = 1/2: J_{1/2}(z) = sqrt(2/(pi z)) sin z
    const double alpha = 0.5;
    for (double x : {1.0, 6.2}) {
        for (double y : {2.5, 9.9}) {
            auto f = [](double v) { return std::sqrt(2.0 / (kPi * std::sqrt(v))) * std::sin(std::sqrt(v)); };
            auto fp = [](double v) {
                // d/dz sqrt(2/(pi z)) sin z at z = sqrt(v)
                double z = std::sqrt(v);
                return std::sqrt(2.0 / (kPi * z)) * (std::cos(z) - 0.5 * std::sin(z) / z);
            };
            double want = (std::sqrt(y) * f(x) * fp(y) - std::sqrt(x) * f(y) * fp(x)) / (2.0 * (x - y));
            CHECK(bessel_kernel(alpha, x, y) == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("wright kernel theta=1 equals rescaled Bessel on (0,10]^2") {
    for (double alpha : {0.0, 0.5, 2.0}) {
        WrightKernelEvaluator ev(1.0, alpha);
        double worst = 0.0;
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) {
                double x = 2.0 * i, y = 2.0 * j;
                double a = ev.value(x, y);
                double b = 4.0 * bessel_kernel(alpha, 4.0 * x, 4.0 * y);
                worst = std::max(worst, std::abs(a - b));
            }
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("wright kernel diagonal continuity") {
    WrightKernelEvaluator ev(2.0, 0.0);
    for (double x : {1.0, 5.0, 20.0}) {
        double diag = ev.value(x, x);
        double dq = 0.5 * (ev.value(x * (1.0 + 1e-5), x) + ev.value(x, x * (1.0 + 1e-5)));
        CHECK(diag == doctest::Approx(dq).epsilon(1e-3));
    }
}

TEST_CASE("wright kernel against double-contour route") {
    // theta = 2, alpha = 0 at small arguments
    StructureFunction f = StructureFunction::wright(2.0, 0.0);
    ContourSpec spec = default_contour(f, 8.0);
    WrightKernelEvaluator ev(2.0, 0.0);
    for (auto [x, y] : {std::pair{1.0, 2.0}, std::pair{3.0, 1.5}, std::pair{5.0, 5.0}}) {
        double direct = ev.value(x, y);
        double contour = double_contour_kernel(f, spec, x, y);
        CHECK(direct == doctest::Approx(contour).epsilon(1e-7));
    }
}

TEST_CASE("contour-route deformation invariance") {
    StructureFunction f = StructureFunction::wright(0.5, 0.5);
    ContourSpec a = default_contour(f, 6.0);
    ContourSpec b = a;
    auto [lo, hi] = f.apex_interval();
    b.apex_gamma = lo + 0.22 * (hi - lo);
    b.apex_gamma_tilde = lo + 0.81 * (hi - lo);
    b.panel_count += 12;
    for (auto [x, y] : {std::pair{0.8, 1.7}, std::pair{4.0, 2.0}}) {
        double va = double_contour_kernel(f, a, x, y);
        double vb = double_contour_kernel(f, b, x, y);
        CHECK(va == doctest::Approx(vb).epsilon(1e-8));
    }
}

TEST_CASE("contour apex validation") {
    StructureFunction f = StructureFunction::wright(1.0, 0.0);
    ContourSpec c = default_contour(f, 5.0);
    c.apex_gamma = -3.0;
    CHECK_THROWS_AS(double_contour_kernel(f, c, 1.0, 1.0), edgeproc::config_error);
}

TEST_CASE("meijer kernel: r=1 reduces to Wright theta=1 route") {
    StructureFunction f = StructureFunction::meijer({0.0}, {});
    ContourSpec cs = default_contour(f, 8.0);
    WrightKernelEvaluator wr(1.0, 0.0);
    for (auto [x, y] : {std::pair{0.5, 1.0}, std::pair{3.0, 2.0}, std::pair{6.0, 6.0}}) {
        double me = double_contour_kernel(f, cs, x, y);
        double w = wr.value(x, y);
        CHECK(me == doctest::Approx(w).epsilon(1e-7));
    }
}

TEST_CASE("meijer-wright identity Eq-style (r, theta, alpha) grids") {
    struct Case {
        int r;
        double alpha;
        double tol;
    };
    for (Case c : {Case{2, 0.0, 1e-6}, Case{3, 1.0, 1e-6}}) {
        std::vector<double> nus(static_cast<size_t>(c.r));
        for (int j = 0; j < c.r; ++j) nus[j] = c.alpha + static_cast<double>(j) / c.r;
        StructureFunction f = StructureFunction::meijer(nus, {});
        ContourSpec cs = default_contour(f, 4.0);
        WrightKernelEvaluator wr(1.0 / c.r, c.alpha);
        const double rr = std::pow(static_cast<double>(c.r), c.r);
        double worst = 0.0;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                double x = 0.35 * i, y = 0.35 * j;
                double me = double_contour_kernel(f, cs, x, y);
                double wv = rr * wr.value(rr * x, rr * y);
                worst = std::max(worst, std::abs(std::pow(x / y, 0.5 * c.alpha) * me - wv));
            }
        CHECK(worst < c.tol);
    }
}

TEST_CASE("meijer kernel evaluator matrix matches pointwise route") {
    ProcessSpec spec = ProcessSpec::meijer_g(2, 0, {0.0, 0.0}, {});
    MeijerKernelEvaluator ev(spec, 10.0);
    std::vector<double> xs{0.7, 2.2, 5.0, 9.0};
    std::vector<double> K;
    ev.fill_tilted_matrix(xs, K, false);
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = 0; j < xs.size(); ++j)
            CHECK(K[i * xs.size() + j] ==
                  doctest::Approx(ev.tilted(xs[i], xs[j])).epsilon(1e-10));
}

TEST_CASE("wright evaluator tilt bookkeeping") {
    WrightKernelEvaluator ev(2.0, 0.0);
    // untilted vs tilted consistency at moderate arguments
    double x = 7.0, y = 3.0;
    double k0 = ev.tilted(x, y);
    double k = ev.value(x, y);
    CHECK(k0 == doctest::Approx(k * std::exp(ev.tilt(x) - ev.tilt(y))).epsilon(1e-12));
    // tilted kernel stays bounded at large spread
    CHECK(std::abs(ev.tilted(3.0, 1600.0)) < 10.0);
    CHECK(std::abs(ev.tilted(1600.0, 3.0)) < 10.0);
}

TEST_CASE("wright kernel matrix matches pointwise route (including branches)") {
    WrightKernelEvaluator ev(2.0, 0.0);
    std::vector<double> xs{0.5, 4.0, 25.0, 120.0, 400.0};
    std::vector<double> K;
    ev.fill_tilted_matrix(xs, K, false);
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = 0; j < xs.size(); ++j) {
            double want = ev.tilted(xs[i], xs[j]);
            CHECK(K[i * xs.size() + j] ==
                  doctest::Approx(want).epsilon(5e-6));
        }
}
