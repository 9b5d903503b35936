#include "edgeproc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "edgeproc/asymptotics.hpp"
#include "edgeproc/errors.hpp"

namespace edgeproc::sampling {

namespace {

std::uint64_t splitmix_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(RngSeed seed, std::uint64_t replica) : state_(seed.seed) {
    // decorrelate replica substreams by scrambling the pair (seed, replica)
    state_ ^= splitmix_next(replica) + 0x632be59bd9b4e019ULL;
    (void)splitmix_next(state_);
}

std::uint64_t Rng::next_u64() { return splitmix_next(state_); }

double Rng::uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0)) throw std::domain_error("Rng::gamma: requires shape > 0");
    if (shape < 1.0) {
        // boost to shape+1 and scale back
        double u = uniform01();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

// ---------------------------------------------------------------------------
// symmetric tridiagonal QL with implicit shifts, eigenvalues only
// ---------------------------------------------------------------------------
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    if (static_cast<int>(e.size()) != std::max(0, n - 1))
        throw std::invalid_argument("tridiagonal_eigenvalues: off-diagonal size mismatch");
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw numerical_error("tridiagonal_eigenvalues: no convergence");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

// ---------------------------------------------------------------------------
// GUE edge: beta = 2 tridiagonal model (diag N(0,2)/sqrt2, off chi_{2(n-k)}/sqrt2)
// ---------------------------------------------------------------------------
PointSample sample_gue_edge(int n, int k_max, RngSeed seed, std::uint64_t replica) {
    if (n < 100) throw std::invalid_argument("sample_gue_edge: requires n >= 100");
    if (k_max > n / 4) throw std::invalid_argument("sample_gue_edge: requires k_max <= n/4");
    Rng rng(seed, replica);
    std::vector<double> diag(n), off(n - 1);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i) diag[i] = std::sqrt(2.0) * rng.normal() * inv_sqrt2;
    for (int i = 0; i < n - 1; ++i) off[i] = rng.chi(2.0 * (n - 1 - i)) * inv_sqrt2;
    std::vector<double> lam = tridiagonal_eigenvalues(std::move(diag), std::move(off));
    PointSample out;
    out.points.resize(k_max);
    const double edge = 2.0 * std::sqrt(static_cast<double>(n));
    const double scale = std::pow(static_cast<double>(n), 1.0 / 6.0);
    for (int k = 1; k <= k_max; ++k) out.points[k - 1] = scale * (edge - lam[n - k]);
    out.provenance = {"gue", n, 0.0, scale, seed.seed};
    return out;
}

// ---------------------------------------------------------------------------
// LUE hard edge: L = B B^T / 2, B bidiagonal with diag chi_{2(n+alpha-i)},
// sub chi_{2(n-1-i)}; eigenvalue density prop. to prod lambda^alpha e^-lambda.
// ---------------------------------------------------------------------------
PointSample sample_lue_hard_edge(int n, int alpha, int k_max, RngSeed seed,
                                 std::uint64_t replica) {
    if (n < 100) throw std::invalid_argument("sample_lue_hard_edge: requires n >= 100");
    if (alpha < 0) throw std::invalid_argument("sample_lue_hard_edge: requires alpha >= 0");
    if (k_max > n) throw std::invalid_argument("sample_lue_hard_edge: k_max > n");
    Rng rng(seed, replica);
    const int m = n + alpha;
    std::vector<double> bd(n), be(n - 1);
    for (int i = 0; i < n; ++i) bd[i] = rng.chi(2.0 * (m - i));
    for (int i = 0; i < n - 1; ++i) be[i] = rng.chi(2.0 * (n - 1 - i));
    // T = B B^T / 2 for lower-bidiagonal B with diag bd, subdiag be:
    //   T_ii = (bd_i^2 + be_{i-1}^2)/2,  T_{i,i+1} = bd_i be_i / 2
    std::vector<double> d(n), e(n - 1);
    for (int i = 0; i < n; ++i) d[i] = 0.5 * (bd[i] * bd[i] + (i > 0 ? be[i - 1] * be[i - 1] : 0.0));
    for (int i = 0; i < n - 1; ++i) e[i] = 0.5 * bd[i] * be[i];
    std::vector<double> lam = tridiagonal_eigenvalues(std::move(d), std::move(e));
    PointSample out;
    out.points.resize(k_max);
    for (int k = 0; k < k_max; ++k) out.points[k] = 4.0 * n * lam[k];
    out.provenance = {"lue", n, static_cast<double>(alpha), 4.0 * n, seed.seed};
    return out;
}

// ---------------------------------------------------------------------------
// complex Golub-Kahan bidiagonalization (unblocked Householder)
// ---------------------------------------------------------------------------
namespace {

// Hermitian reflector H = I - 2 w w^H with H x = beta e_1; returns |beta|
// (phases of the bidiagonal are irrelevant for singular values). w is
// normalized; w = 0 signals H = I.
double hermitian_reflector(std::vector<cplx>& x) {
    const int n = static_cast<int>(x.size());
    double norm2 = 0.0;
    for (const cplx& v : x) norm2 += std::norm(v);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) {
        for (auto& v : x) v = 0.0;
        return 0.0;
    }
    cplx phase = (x[0] == cplx(0.0, 0.0)) ? cplx(1.0, 0.0) : x[0] / std::abs(x[0]);
    x[0] += phase * norm;
    double vnorm2 = 0.0;
    for (const cplx& v : x) vnorm2 += std::norm(v);
    if (vnorm2 == 0.0) {
        for (auto& v : x) v = 0.0;
        return norm;
    }
    const double inv = 1.0 / std::sqrt(vnorm2);
    for (auto& v : x) v *= inv;
    return norm;  // |beta| = ||x||
}

}  // namespace

std::vector<double> squared_singular_values(std::vector<cplx>& a, int n) {
    // Golub-Kahan bidiagonalization with Hermitian reflectors; entry phases
    // are dropped, so d, e hold the bidiagonal magnitudes
    std::vector<double> d(n, 0.0), e(std::max(0, n - 1), 0.0);
    std::vector<cplx> w(n);
    for (int k = 0; k < n; ++k) {
        // left reflector zeroing column k below the diagonal
        const int len = n - k;
        w.assign(len, 0.0);
        for (int i = 0; i < len; ++i) w[i] = a[static_cast<size_t>(k + i) * n + k];
        d[k] = hermitian_reflector(w);
        for (int j = k; j < n; ++j) {
            cplx dot = 0.0;
            for (int i = 0; i < len; ++i)
                dot += std::conj(w[i]) * a[static_cast<size_t>(k + i) * n + j];
            dot *= 2.0;
            for (int i = 0; i < len; ++i) a[static_cast<size_t>(k + i) * n + j] -= dot * w[i];
        }
        if (k < n - 1) {
            // right reflector zeroing row k beyond the superdiagonal; built
            // from the conjugated row so that A := A (I - 2 w w^H)
            const int rlen = n - k - 1;
            w.assign(rlen, 0.0);
            for (int j = 0; j < rlen; ++j)
                w[j] = std::conj(a[static_cast<size_t>(k) * n + (k + 1 + j)]);
            e[k] = hermitian_reflector(w);
            for (int i = k; i < n; ++i) {
                cplx dot = 0.0;
                for (int j = 0; j < rlen; ++j)
                    dot += a[static_cast<size_t>(i) * n + (k + 1 + j)] * w[j];
                dot *= 2.0;
                for (int j = 0; j < rlen; ++j)
                    a[static_cast<size_t>(i) * n + (k + 1 + j)] -= dot * std::conj(w[j]);
            }
        }
    }
    // eigenvalues of B^T B (tridiagonal)
    std::vector<double> td(n), te(std::max(0, n - 1));
    for (int i = 0; i < n; ++i)
        td[i] = d[i] * d[i] + (i > 0 ? e[i - 1] * e[i - 1] : 0.0);
    for (int i = 0; i < n - 1; ++i) te[i] = d[i] * e[i];
    std::vector<double> lam = tridiagonal_eigenvalues(std::move(td), std::move(te));
    for (double& v : lam) v = std::max(v, 0.0);
    return lam;
}

namespace {

std::vector<double> ginibre_product_squared_svals(int n, int r, Rng& rng) {
    // product of r standard complex Ginibre matrices (entries CN(0,1))
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    auto draw = [&](std::vector<cplx>& g) {
        g.resize(static_cast<size_t>(n) * n);
        for (auto& z : g) z = cplx(rng.normal() * inv_sqrt2, rng.normal() * inv_sqrt2);
    };
    std::vector<cplx> prod, g, tmp;
    draw(prod);
    for (int k = 1; k < r; ++k) {
        draw(g);
        tmp.assign(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                cplx pil = prod[static_cast<size_t>(i) * n + l];
                if (pil == cplx(0.0, 0.0)) continue;
                const cplx* grow = &g[static_cast<size_t>(l) * n];
                cplx* trow = &tmp[static_cast<size_t>(i) * n];
                for (int j = 0; j < n; ++j) trow[j] += pil * grow[j];
            }
        prod.swap(tmp);
    }
    return squared_singular_values(prod, n);
}

std::mutex g_scale_mutex;
std::map<int, double> g_scale_cache;

double calibrate_ginibre_scale(int r) {
    // first-moment matching: with x = c n lambda, E[N(s)] should follow
    // mu^Me(s) = mu_c s^{1/(1+r)}. Estimate the empirical growth coefficient
    // m_hat from E[#{lambda : n lambda <= u}] ~ m_hat u^{1/(1+r)} and set
    // c = (m_hat / mu_c)^{1+r}.
    const int n = 200, reps = 48, kcap = 40;
    std::vector<double> nus(r);
    for (int j = 0; j < r; ++j) nus[j] = static_cast<double>(j) / r;
    ProcessSpec spec = ProcessSpec::meijer_g(r, 0, nus, {});
    const double mu_c = asymptotics::moment_asymptotics(spec).mu_coeff;
    RngSeed cal_seed{0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(r)};
    // average the k-th point location over replicas, then regress
    std::vector<double> mean_u(kcap, 0.0);
    for (int rep = 0; rep < reps; ++rep) {
        Rng rng(cal_seed, static_cast<std::uint64_t>(rep));
        std::vector<double> lam = ginibre_product_squared_svals(n, r, rng);
        for (int k = 0; k < kcap; ++k) mean_u[k] += n * lam[k];
    }
    for (double& v : mean_u) v /= reps;
    // mu(x_k) grows like m_hat * u_k^{1/(1+r)} + const; the intercept absorbs
    // the order-one offset, the slope fixes the scale
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    int cnt = 0;
    for (int k = 9; k < kcap; ++k) {
        double t = std::pow(mean_u[k], 1.0 / (1.0 + r));
        double y = static_cast<double>(k + 1);  // x_k is the (k+1)-th point (0-based k)
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
        ++cnt;
    }
    double m_hat = (cnt * sty - st * sy) / (cnt * stt - st * st);
    return std::pow(m_hat / mu_c, 1.0 + r);
}

}  // namespace

double ginibre_hard_edge_scale(int r) {
    if (r == 1) return 1.0;
    std::lock_guard<std::mutex> lock(g_scale_mutex);
    auto it = g_scale_cache.find(r);
    if (it != g_scale_cache.end()) return it->second;
    double c = calibrate_ginibre_scale(r);
    g_scale_cache[r] = c;
    return c;
}

PointSample sample_ginibre_product_hard_edge(int n, int r, int k_max, RngSeed seed,
                                             std::uint64_t replica) {
    if (n < 50) throw std::invalid_argument("sample_ginibre_product_hard_edge: requires n >= 50");
    if (r < 1 || r > 3)
        throw std::invalid_argument("sample_ginibre_product_hard_edge: r in {1,2,3}");
    if (k_max > n) throw std::invalid_argument("sample_ginibre_product_hard_edge: k_max > n");
    Rng rng(seed, replica);
    std::vector<double> lam = ginibre_product_squared_svals(n, r, rng);
    const double c = ginibre_hard_edge_scale(r);
    PointSample out;
    out.points.resize(k_max);
    for (int k = 0; k < k_max; ++k) out.points[k] = c * n * lam[k];
    out.provenance = {"ginibre-product", n, static_cast<double>(r), c * n, seed.seed};
    return out;
}

}  // namespace edgeproc::sampling
