#include "edgeproc/numeric.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>

namespace edgeproc {

// Newton iteration on the Legendre recurrence; exploits root symmetry.
static GaussLegendre compute_gauss_legendre(int n) {
    GaussLegendre rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int m = (n + 1) / 2;
    const double fac = kPi / (0.5 + n);
    for (int i = 0; i < m; ++i) {
        double z = std::cos((i + 0.75) * fac);
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double dz = -p1 / pp;
            z += dz;
            if (std::abs(dz) < std::numeric_limits<double>::epsilon()) break;
        }
        rule.x[i] = -z;
        rule.x[n - 1 - i] = z;
        rule.w[i] = rule.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return rule;
}

const GaussLegendre& gauss_legendre(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

QuadratureRule gauss_legendre_on(double a, double b, int n) {
    const GaussLegendre& gl = gauss_legendre(n);
    QuadratureRule r;
    r.a = a;
    r.b = b;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = mid + half * gl.x[i];
        r.weights[i] = half * gl.w[i];
    }
    return r;
}

LogDet lu_log_det(std::vector<double>& a, int n) {
    LogDet r;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double amax = std::abs(a[k * n + k]);
        for (int i = k + 1; i < n; ++i) {
            double v = std::abs(a[i * n + k]);
            if (v > amax) {
                amax = v;
                piv = i;
            }
        }
        if (amax == 0.0) {
            r.sign = 0;
            r.value = -std::numeric_limits<double>::infinity();
            return r;
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            r.sign = -r.sign;
        }
        double d = a[k * n + k];
        if (d < 0.0) r.sign = -r.sign;
        r.value += std::log(std::abs(d));
        for (int i = k + 1; i < n; ++i) {
            double f = a[i * n + k] / d;
            a[i * n + k] = f;
            for (int j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return r;
}

std::vector<double> panel_edges(double a, double b, double max_len, double rate, double max_phase) {
    std::vector<double> edges{a};
    double x = a;
    const double span = b - a;
    int guard = 0;
    while (x < b - 1e-15 * std::max(1.0, std::abs(b)) && guard++ < 100000) {
        double h = std::min(max_len, span);
        if (rate > 0.0) h = std::min(h, max_phase / rate);
        h = std::min(h, b - x);
        x += h;
        edges.push_back(x);
    }
    edges.back() = b;
    return edges;
}

}  // namespace edgeproc
