#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "edgeproc/asymptotics.hpp"
#include "edgeproc/specfun.hpp"

using namespace edgeproc;
using namespace edgeproc::asymptotics;

TEST_CASE("closed-form coefficients") {
    ProcessSpec be = ProcessSpec::bessel(0.0);
    CHECK(mu_of(be, 100.0) == doctest::Approx(10.0 / kPi).epsilon(1e-14));
    CHECK(sigma2_of(be, 100.0) ==
          doctest::Approx(std::log(100.0) / (4.0 * kPi * kPi)).epsilon(1e-14));

    ProcessSpec wr = ProcessSpec::wright(2.0, 0.0);
    CHECK(mu_of(wr, 1.0) == doctest::Approx(0.520975).epsilon(1e-5));

    ProcessSpec ai = ProcessSpec::airy();
    CHECK(mu_of(ai, 4.0) == doctest::Approx(2.0 / (3.0 * kPi) * 8.0).epsilon(1e-14));
    CHECK(sigma2_of(ai, 4.0) ==
          doctest::Approx(3.0 / (4.0 * kPi * kPi) * std::log(4.0)).epsilon(1e-14));
}

TEST_CASE("sigma2 consistency: 2 pi^2 sigma2_coeff = rho for Wright and MeijerG") {
    for (double th : {0.4, 1.0, 2.5}) {
        auto m = moment_asymptotics(ProcessSpec::wright(th, 0.3));
        CHECK(2.0 * kPi * kPi * m.sigma2_coeff == doctest::Approx(m.rho).epsilon(1e-14));
    }
    auto m = moment_asymptotics(ProcessSpec::meijer_g(3, 1, {0.0, 1.0, 2.0}, {3.0}));
    CHECK(2.0 * kPi * kPi * m.sigma2_coeff == doctest::Approx(m.rho).epsilon(1e-14));
}

TEST_CASE("log C at zero and special forms") {
    for (auto spec : {ProcessSpec::airy(), ProcessSpec::bessel(1.0),
                      ProcessSpec::wright(2.0, 0.5),
                      ProcessSpec::meijer_g(2, 0, {0.0, 1.0}, {})}) {
        CHECK(log_constant_C(spec, 0.0) == 0.0);
    }
    // Wright theta = 1: log C = pi nu alpha + nu^2 log 8 + log G-pair
    for (double al : {0.0, 0.7}) {
        for (double nu : {0.2, 0.9}) {
            double want = kPi * nu * al + nu * nu * std::log(8.0) +
                          specfun::log_barnes_g_conjugate_pair(nu);
            CHECK(log_constant_C(ProcessSpec::wright(1.0, al), nu) ==
                  doctest::Approx(want).epsilon(1e-13));
        }
    }
}

TEST_CASE("log C even/odd decomposition") {
    // G-pair and bracket^{nu^2} parts are even; the linear term flips sign
    ProcessSpec wr = ProcessSpec::wright(2.0, 0.7);
    for (double nu : {0.3, 1.1}) {
        double even = 0.5 * (log_constant_C(wr, nu) + log_constant_C(wr, -nu));
        double th = 2.0, rho = th / (1.0 + th);
        double bracket =
            4.0 * (1.0 + th) * std::pow(th, -rho) * std::pow(std::sin(kPi * th / (1.0 + th)), 2);
        double want = nu * nu * std::log(bracket) + specfun::log_barnes_g_conjugate_pair(nu);
        CHECK(even == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("moment asymptote trivial") {
    CHECK(moment_asymptote(ProcessSpec::bessel(0.0), 50.0, 0.0) == 0.0);
}

TEST_CASE("Wright theta=1 at s equals Bessel at 4s") {
    ProcessSpec wr = ProcessSpec::wright(1.0, 0.4);
    ProcessSpec be = ProcessSpec::bessel(0.4);
    for (double s : {3.0, 40.0, 900.0}) {
        for (double nu : {0.15, 0.6}) {
            CHECK(moment_asymptote(wr, s, nu) ==
                  doctest::Approx(moment_asymptote(be, 4.0 * s, nu)).epsilon(1e-12));
        }
    }
}

TEST_CASE("counting mean/var asymptotics") {
    // Wright theta = 1, alpha = 0: mean = 2 sqrt(s)/pi,
    // variance constant = (1/2pi^2) log 8 + (1+gamma_E)/(2pi^2)
    ProcessSpec wr = ProcessSpec::wright(1.0, 0.0);
    auto [mean, var] = counting_mean_var_asym(wr, 25.0);
    CHECK(mean == doctest::Approx(2.0 * 5.0 / kPi).epsilon(1e-13));
    double wantc = (std::log(8.0) + 1.0 + kEulerGamma) / (2.0 * kPi * kPi);
    CHECK(var - sigma2_of(wr, 25.0) == doctest::Approx(wantc).epsilon(1e-12));
    CHECK_THROWS_AS(counting_mean_var_asym(ProcessSpec::airy(), 4.0), std::domain_error);
}

TEST_CASE("rigidity envelope values") {
    // Bessel, k = 100, eps = 0.05: pi^2 (k -+ (1/pi + 0.05) log k)^2
    ProcessSpec be = ProcessSpec::bessel(0.0);
    auto band = rigidity_envelope(be, 100, 0.05);
    double d = (1.0 / kPi + 0.05) * std::log(100.0);
    CHECK(band.lower == doctest::Approx(kPi * kPi * std::pow(100.0 - d, 2)).epsilon(1e-13));
    CHECK(band.upper == doctest::Approx(kPi * kPi * std::pow(100.0 + d, 2)).epsilon(1e-13));
    CHECK_FALSE(band.clamped);

    // Airy form
    ProcessSpec ai = ProcessSpec::airy();
    auto ba = rigidity_envelope(ai, 100, 0.05);
    CHECK(ba.lower ==
          doctest::Approx(std::pow(1.5 * kPi * (100.0 - d), 2.0 / 3.0)).epsilon(1e-13));

    // monotone in eps
    double w1 = rigidity_envelope(be, 20, 0.1).upper - rigidity_envelope(be, 20, 0.1).lower;
    double w2 = rigidity_envelope(be, 20, 1.0).upper - rigidity_envelope(be, 20, 1.0).lower;
    double w3 = rigidity_envelope(be, 20, 10.0).upper - rigidity_envelope(be, 20, 10.0).lower;
    CHECK(w1 < w2);
    CHECK(w2 < w3);

    // clamping for small k
    auto bc = rigidity_envelope(be, 2, 10.0);
    CHECK(bc.clamped);
    CHECK(bc.lower == 0.0);
    CHECK_THROWS_AS(rigidity_envelope(be, 1, 0.05), std::domain_error);
}

TEST_CASE("saddle data invariants") {
    for (auto spec : {ProcessSpec::wright(0.5, 1.0), ProcessSpec::wright(3.0, 0.0),
                      ProcessSpec::meijer_g(2, 0, {0.0, 0.0}, {}),
                      ProcessSpec::meijer_g(3, 1, {0.0, 1.0, 2.0}, {3.0})}) {
        auto d = SaddleData::from_spec(spec);
        CHECK(d.saddle_equation_residual() < 1e-12);
        CHECK(d.ell_tilde == doctest::Approx(d.b2.real() / d.rho).epsilon(1e-13));
        CHECK(d.b1 == -std::conj(d.b2));
    }
    // MeijerG: |b2| = 1 since c1 + c2 + c3 = 0
    auto d = SaddleData::from_spec(ProcessSpec::meijer_g(3, 0, {0.0, 1.0, 2.0}, {}));
    CHECK(std::abs(d.b2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("saddle cross-check equals closed forms to 1e-12") {
    const double nu = 0.3;
    for (double th : {1.0 / 3.0, 0.5, 1.0, 2.0, 3.0}) {
        for (double al : {0.0, 1.0}) {
            ProcessSpec spec = ProcessSpec::wright(th, al);
            auto sc = saddle_crosscheck(spec, nu);
            auto m = moment_asymptotics(spec);
            CHECK(std::abs(sc.mu_coeff - m.mu_coeff) < 1e-12);
            CHECK(std::abs(sc.sigma2_coeff - m.sigma2_coeff) < 1e-12);
            CHECK(std::abs(sc.log_C - log_constant_C(spec, nu)) < 1e-12);
        }
    }
    for (auto spec : {ProcessSpec::meijer_g(1, 0, {0.0}, {}),
                      ProcessSpec::meijer_g(2, 0, {0.0, 0.0}, {}),
                      ProcessSpec::meijer_g(3, 1, {0.0, 1.0, 2.0}, {3.0})}) {
        auto sc = saddle_crosscheck(spec, nu);
        auto m = moment_asymptotics(spec);
        CHECK(std::abs(sc.mu_coeff - m.mu_coeff) < 1e-12);
        CHECK(std::abs(sc.sigma2_coeff - m.sigma2_coeff) < 1e-12);
        CHECK(std::abs(sc.log_C - log_constant_C(spec, nu)) < 1e-12);
    }
}

TEST_CASE("Bessel specialization of the saddle route: Re b2 = 1, rho = 1/2") {
    auto d = SaddleData::from_spec(ProcessSpec::wright(1.0, 0.6));
    CHECK(d.b2.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.rho == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(d.c5 == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(d.c6 == doctest::Approx(-0.3).epsilon(1e-14));
    // log-prefactor pi nu alpha + nu^2 log 8
    double nu = 0.25;
    auto sc = saddle_crosscheck(ProcessSpec::wright(1.0, 0.6), nu);
    double want = kPi * nu * 0.6 + nu * nu * std::log(8.0) +
                  specfun::log_barnes_g_conjugate_pair(nu);
    CHECK(sc.log_C == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("symmetry of Eq-(1.13) type") {
    CHECK(symmetry_check(1.0, 0.3, 5.0, 0.4) < 1e-12);  // fixed point
    CHECK(symmetry_check(2.0, 0.5, 10.0, 0.3) < 1e-12);
    CHECK(symmetry_check(1.0 / 3.0, 1.0, 10.0, 0.3) < 1e-12);
}

TEST_CASE("MeijerG-Wright constant relation (1.21-type) for r = 1,2,3") {
    const double nu = 0.3, alpha = 0.0;
    for (int r : {1, 2, 3}) {
        double th = 1.0 / r;
        std::vector<double> nus(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j) nus[j] = alpha + static_cast<double>(j) / r;
        ProcessSpec me = ProcessSpec::meijer_g(r, 0, nus, {});
        ProcessSpec wr = ProcessSpec::wright(th, alpha);
        double want = log_constant_C(wr, nu) + r * nu * nu * th / (th + 1.0) * std::log(r);
        CHECK(log_constant_C(me, nu) == doctest::Approx(want).epsilon(1e-12));
        // mu^Me(s) = mu^Wr(r^r s), sigma identical
        double s = 7.0;
        CHECK(mu_of(me, s) ==
              doctest::Approx(mu_of(wr, std::pow(static_cast<double>(r), r) * s)).epsilon(1e-12));
        CHECK(moment_asymptotics(me).sigma2_coeff ==
              doctest::Approx(moment_asymptotics(wr).sigma2_coeff).epsilon(1e-14));
    }
}
