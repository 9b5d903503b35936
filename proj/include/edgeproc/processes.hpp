#pragma once

// The four universal edge processes and their Mellin-Barnes structure
// functions.

#include <string>
#include <vector>

#include "edgeproc/numeric.hpp"

namespace edgeproc {

enum class ProcessKind { Airy, Bessel, Wright, MeijerG };

std::string to_string(ProcessKind k);

// Which limit process, with validated parameters.
//   Bessel:  alpha > -1
//   Wright:  theta > 0, alpha > -1
//   MeijerG: r > q >= 0, nu_j >= 0, mu_k > 0, mu_k > nu_k (k = 1..q).
// The standard Meijer-G process has integer nu_j, mu_k; real values are
// accepted because the kernel and the moment formulas extend to them and the
// Wright correspondence (theta = 1/r) needs fractional nu_j.
struct ProcessSpec {
    ProcessKind kind = ProcessKind::Airy;
    double alpha = 0.0;
    double theta = 1.0;
    int r = 0;
    int q = 0;
    std::vector<double> nus;
    std::vector<double> mus;

    static ProcessSpec airy();
    static ProcessSpec bessel(double alpha);
    static ProcessSpec wright(double theta, double alpha);
    static ProcessSpec meijer_g(int r, int q, std::vector<double> nus, std::vector<double> mus);

    void validate() const;  // throws std::invalid_argument
};

// F^{(1)} (Meijer-G family) or F^{(2)} (Wright family): the ratio of gamma
// factors in the double contour representation of the kernel.
struct StructureFunction {
    int family = 2;  // 1 = MeijerG, 2 = Wright
    double theta = 1.0;
    double alpha = 0.0;
    std::vector<double> nus;
    std::vector<double> mus;

    static StructureFunction meijer(std::vector<double> nus, std::vector<double> mus);
    static StructureFunction wright(double theta, double alpha);
    static StructureFunction for_spec(const ProcessSpec& spec);

    cplx log_value(cplx z) const;
    // open interval of admissible contour apexes on the real axis
    std::pair<double, double> apex_interval() const;
};

}  // namespace edgeproc
