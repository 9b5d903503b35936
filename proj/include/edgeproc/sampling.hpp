#pragma once

// Finite random-matrix samplers whose rescaled extreme eigenvalues
// approximate the four limit processes, plus the deterministic RNG they run
// on (SplitMix64 counter stream; Gaussians by Box-Muller).

#include <cstdint>
#include <string>
#include <vector>

#include "edgeproc/processes.hpp"

namespace edgeproc::sampling {

struct RngSeed {
    std::uint64_t seed = 0;
};

// SplitMix64: 64-bit counter generator, identical stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    // replica substream: seed mixed with the replica index
    Rng(RngSeed seed, std::uint64_t replica);

    std::uint64_t next_u64();
    double uniform01();         // in (0,1)
    double normal();            // standard normal, Box-Muller
    double gamma(double shape); // shape > 0, unit scale (Marsaglia-Tsang)
    double chi(double dof) { return std::sqrt(2.0 * gamma(0.5 * dof)); }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

struct Provenance {
    std::string ensemble;
    int n = 0;
    double param = 0.0;            // alpha or r
    double scaling_constant = 0.0;
    std::uint64_t seed = 0;
    std::string generator = "splitmix64+box-muller";
};

// Ordered point configuration x_1 < x_2 < ...
struct PointSample {
    std::vector<double> points;
    Provenance provenance;
};

// x_k = n^{1/6} (2 sqrt(n) - lambda_{(n+1-k)}), k = 1..k_max, from the
// beta = 2 tridiagonal ensemble; approximates the (negated) Airy process.
PointSample sample_gue_edge(int n, int k_max, RngSeed seed, std::uint64_t replica = 0);

// x_k = 4 n lambda_{(k)} from the beta = 2 bidiagonal Laguerre model with
// integer parameter alpha; approximates the Bessel process.
PointSample sample_lue_hard_edge(int n, int alpha, int k_max, RngSeed seed,
                                 std::uint64_t replica = 0);

// smallest squared singular values of a product of r independent n x n
// complex Ginibre matrices, rescaled by the hard-edge constant; approximates
// the Meijer-G process with q = 0, nu_j = (j-1)/r.
PointSample sample_ginibre_product_hard_edge(int n, int r, int k_max, RngSeed seed,
                                             std::uint64_t replica = 0);

// Hard-edge scaling x = c_r * n * lambda. c_1 = 1 exactly (Bessel/4
// correspondence); for r >= 2 the constant is calibrated once by matching
// the empirical E[N(s)] to the Meijer-G mean and cached.
double ginibre_hard_edge_scale(int r);

// eigenvalues of a symmetric tridiagonal matrix (implicit-shift QL),
// ascending
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off);

// squared singular values of a complex matrix (Golub-Kahan bidiagonalization
// + tridiagonal QL), ascending; a is row-major n x n and is destroyed
std::vector<double> squared_singular_values(std::vector<cplx>& a, int n);

}  // namespace edgeproc::sampling
