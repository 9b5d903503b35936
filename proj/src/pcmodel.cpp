#include "edgeproc/pcmodel.hpp"

#include <cmath>
#include <stdexcept>

#include "edgeproc/specfun.hpp"

namespace edgeproc::pcmodel {

namespace {

const cplx kI(0.0, 1.0);

bool is_imaginary_axis(cplx q) { return q.real() == 0.0 && q.imag() >= 0.0; }

}  // namespace

double Matrix2C::norm_inf() const {
    return std::max(std::abs(a11) + std::abs(a12), std::abs(a21) + std::abs(a22));
}

PCParams PCParams::from_q(cplx q) {
    const bool real_branch = (q.imag() == 0.0 && q.real() >= 0.0 && q.real() < 1.0);
    if (!real_branch && !is_imaginary_axis(q))
        throw std::domain_error("PCParams: q must lie in [0,1) or i[0,inf)");
    PCParams p;
    p.q = q;
    const cplx one_m_q2 = 1.0 - q * q;  // real positive on both branches
    p.nu = -std::log(one_m_q2.real()) / (2.0 * kPi);
    return p;
}

PCParams PCParams::from_nu(double nu) {
    // 1 - q^2 = e^{-2 pi nu}; nu >= 0 -> q in [0,1), nu < 0 -> q in i(0,inf)
    PCParams p;
    p.nu = nu;
    const double t = std::exp(-2.0 * kPi * nu);
    if (nu >= 0.0)
        p.q = cplx(std::sqrt(1.0 - t), 0.0);
    else
        p.q = cplx(0.0, std::sqrt(t - 1.0));
    return p;
}

std::pair<cplx, cplx> beta_coefficients(const PCParams& p) {
    if (p.q == cplx(0.0, 0.0))
        throw std::domain_error("beta_coefficients: q = 0 degenerate (nu = 0)");
    const double nu = p.nu;
    const double s2pi = std::sqrt(2.0 * kPi);
    const cplx g_inu = specfun::gamma(cplx(0.0, nu));
    const cplx g_minu = specfun::gamma(cplx(0.0, -nu));
    cplx b12 = std::exp(cplx(0.0, -0.75 * kPi)) * std::exp(-0.5 * kPi * nu) * s2pi / (p.q * g_inu);
    cplx b21 = std::exp(cplx(0.0, 0.75 * kPi)) * std::exp(-0.5 * kPi * nu) * s2pi / (p.q * g_minu);
    return {b12, b21};
}

Matrix2C psi_matrix(cplx z, const PCParams& p) {
    if (z.imag() == 0.0) throw std::domain_error("psi_matrix: real axis is the jump locus");
    const double nu = p.nu;
    const cplx a_m(0.0, -nu);  // order of psi11
    const cplx a_p(0.0, nu);   // order of psi22
    const bool upper = z.imag() > 0.0;

    // psi11 = c11 D_{-i nu}(w11 z), psi22 = c22 D_{i nu}(w22 z)
    const cplx w11 = upper ? std::exp(cplx(0.0, -0.25 * kPi)) : std::exp(cplx(0.0, 0.75 * kPi));
    const double c11 = upper ? std::exp(0.25 * kPi * nu) : std::exp(-0.75 * kPi * nu);
    const cplx w22 = upper ? std::exp(cplx(0.0, -0.75 * kPi)) : std::exp(cplx(0.0, 0.25 * kPi));
    const double c22 = upper ? std::exp(-0.75 * kPi * nu) : std::exp(0.25 * kPi * nu);

    auto [d11, d11p] = specfun::parabolic_cylinder_d(a_m, w11 * z);
    auto [d22, d22p] = specfun::parabolic_cylinder_d(a_p, w22 * z);
    const cplx psi11 = c11 * d11;
    const cplx psi11_dz = c11 * w11 * d11p;
    const cplx psi22 = c22 * d22;
    const cplx psi22_dz = c22 * w22 * d22p;

    if (p.q == cplx(0.0, 0.0)) {
        // nu = 0: off-diagonal numerators vanish identically
        return {psi11, 0.0, 0.0, psi22};
    }
    auto [b12, b21] = beta_coefficients(p);
    Matrix2C m;
    m.a11 = psi11;
    m.a22 = psi22;
    m.a12 = (-kI * psi22_dz + 0.5 * z * psi22) / b21;
    m.a21 = (kI * psi11_dz + 0.5 * z * psi11) / b12;
    return m;
}

namespace {

// sector factor B(z) of the solution Phi_PC = Psi B^{-1}
Matrix2C sector_b(cplx z, const PCParams& p) {
    const double ph = std::arg(z);
    const cplx q = p.q;
    const cplx r = q / (1.0 - q * q);
    const double pi4 = 0.25 * kPi;
    if (ph > 0.0 && ph < pi4) return {1.0, -q, 0.0, 1.0};
    if (ph > 3.0 * pi4 && ph < kPi) return {1.0, 0.0, r, 1.0};
    if (ph > -kPi && ph < -3.0 * pi4) return {1.0, r, 0.0, 1.0};
    if (ph > -pi4 && ph < 0.0) return {1.0, 0.0, -q, 1.0};
    return Matrix2C::identity();
}

bool on_ray(cplx z) {
    const double ph = std::arg(z);
    const double pi4 = 0.25 * kPi;
    for (double ray : {pi4, 3.0 * pi4, -pi4, -3.0 * pi4, kPi})
        if (std::abs(ph - ray) < 1e-12) return true;
    return z.imag() == 0.0 && z.real() <= 0.0;
}

}  // namespace

Matrix2C phi_pc(cplx z, const PCParams& p) {
    if (on_ray(z)) throw std::domain_error("phi_pc: z on the jump contour");
    return psi_matrix(z, p) * sector_b(z, p).inverse();
}

std::vector<JumpResidual> verify_jumps(const PCParams& p, double radius) {
    const cplx q = p.q;
    const cplx om = 1.0 - q * q;
    struct Ray {
        double angle;
        cplx travel;  // orientation of the contour on this ray
        Matrix2C jump;
        const char* name;
    };
    // the four wedge rays run outward; R- runs toward the origin
    const std::vector<Ray> rays = {
        {0.25 * kPi, std::exp(cplx(0.0, 0.25 * kPi)), {1.0, -q, 0.0, 1.0}, "e^{i pi/4} R+"},
        {0.75 * kPi, std::exp(cplx(0.0, 0.75 * kPi)), {1.0, 0.0, -q / om, 1.0}, "e^{3i pi/4} R+"},
        {-0.75 * kPi, std::exp(cplx(0.0, -0.75 * kPi)), {1.0, q / om, 0.0, 1.0}, "e^{-3i pi/4} R+"},
        {-0.25 * kPi, std::exp(cplx(0.0, -0.25 * kPi)), {1.0, 0.0, q, 1.0}, "e^{-i pi/4} R+"},
        {kPi, {1.0, 0.0}, {1.0 / om, 0.0, 0.0, om}, "R-"},
    };
    std::vector<JumpResidual> out;
    const double h = 1e-7;
    for (const Ray& ray : rays) {
        // + side lies left of the travel direction; boundary values by linear
        // extrapolation of the 1e-7 and 2e-7 offsets
        const cplx z0 = radius * std::exp(cplx(0.0, ray.angle));
        const cplx off = kI * ray.travel * (h * radius);
        auto limit = [&](double side) {
            Matrix2C m1 = phi_pc(z0 + side * off, p);
            Matrix2C m2 = phi_pc(z0 + 2.0 * side * off, p);
            return Matrix2C{2.0 * m1.a11 - m2.a11, 2.0 * m1.a12 - m2.a12,
                            2.0 * m1.a21 - m2.a21, 2.0 * m1.a22 - m2.a22};
        };
        Matrix2C plus = limit(1.0);
        Matrix2C minus = limit(-1.0);
        Matrix2C rhs = minus * ray.jump;
        Matrix2C diff{plus.a11 - rhs.a11, plus.a12 - rhs.a12, plus.a21 - rhs.a21,
                      plus.a22 - rhs.a22};
        out.push_back({ray.name, diff.norm_inf() / std::max(1.0, minus.norm_inf())});
    }
    return out;
}

namespace {

// z (Phi e^{-i z^2 sigma3 / 4} z^{i nu sigma3} - I), column-scaled to avoid
// premature overflow
Matrix2C scaled_remainder(cplx z, const PCParams& p) {
    Matrix2C phi = phi_pc(z, p);
    const cplx e1 = std::exp(-kI * z * z / 4.0) * std::pow(z, cplx(0.0, p.nu));
    const cplx e2 = std::exp(kI * z * z / 4.0) * std::pow(z, cplx(0.0, -p.nu));
    Matrix2C m{phi.a11 * e1, phi.a12 * e2, phi.a21 * e1, phi.a22 * e2};
    m.a11 -= 1.0;
    m.a22 -= 1.0;
    return {z * m.a11, z * m.a12, z * m.a21, z * m.a22};
}

std::vector<double> check_directions() {
    return {kPi / 16.0,          0.25 * kPi + kPi / 16.0, 0.5 * kPi,       0.75 * kPi + kPi / 16.0,
            kPi - kPi / 16.0,    -kPi / 16.0,             -0.5 * kPi,      -0.75 * kPi - kPi / 16.0};
}

}  // namespace

double asymptotic_coefficient_check(const PCParams& p, double radius) {
    if (radius < 10.0) throw std::domain_error("asymptotic_coefficient_check: radius >= 10");
    cplx b12 = 0.0, b21 = 0.0;
    if (p.q != cplx(0.0, 0.0)) {
        auto bb = beta_coefficients(p);
        b12 = bb.first;
        b21 = bb.second;
    }
    double worst = 0.0;
    for (double ang : check_directions()) {
        Matrix2C r = scaled_remainder(radius * std::exp(cplx(0.0, ang)), p);
        Matrix2C diff{r.a11, r.a12 - b12, r.a21 - b21, r.a22};
        worst = std::max(worst, diff.norm_inf());
    }
    return worst;
}

double second_coefficient_check(const PCParams& p, double radius) {
    if (radius < 10.0) throw std::domain_error("second_coefficient_check: radius >= 10");
    cplx b12 = 0.0, b21 = 0.0;
    if (p.q != cplx(0.0, 0.0)) {
        auto bb = beta_coefficients(p);
        b12 = bb.first;
        b21 = bb.second;
    }
    const double nu = p.nu;
    const cplx phi2_11 = 0.5 * nu * cplx(1.0, nu);
    const cplx phi2_22 = 0.5 * nu * cplx(1.0, -nu);
    double worst = 0.0;
    for (double ang : check_directions()) {
        const cplx z = radius * std::exp(cplx(0.0, ang));
        Matrix2C r = scaled_remainder(z, p);
        // z^2 (... - I - Phi_1 / z) - Phi_2 = z (r - Phi_1) - Phi_2
        Matrix2C diff{z * r.a11 - phi2_11, z * (r.a12 - b12), z * (r.a21 - b21),
                      z * r.a22 - phi2_22};
        worst = std::max(worst, diff.norm_inf());
    }
    return worst;
}

}  // namespace edgeproc::pcmodel
