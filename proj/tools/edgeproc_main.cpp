// Command-line front end: moment experiments, rigidity Monte Carlo, kernel
// identity checks, parabolic-cylinder model verification, and sampling.
//
// Exit codes: 0 ok, 1 invalid configuration, 2 accuracy failure, 3 I/O.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgeproc/asymptotics.hpp"
#include "edgeproc/errors.hpp"
#include "edgeproc/fredholm.hpp"
#include "edgeproc/io.hpp"
#include "edgeproc/kernels.hpp"
#include "edgeproc/parallel.hpp"
#include "edgeproc/pcmodel.hpp"
#include "edgeproc/rigidity.hpp"
#include "edgeproc/sampling.hpp"

using json = nlohmann::json;
using namespace edgeproc;

namespace {

struct Options {
    std::string config_path;
    std::string process = "bessel";
    double theta = 1.0;
    double alpha = 0.0;
    int r = 2;
    int q = 0;
    std::vector<double> nus;
    std::vector<double> mus;
    std::vector<double> s_list;
    std::vector<double> nu_list;
    std::string ensemble = "lue";
    int n = 1000;
    int reps = 50;
    std::uint64_t seed = 1;
    int k_max = 30;
    std::vector<int> k0_list{5};
    double eps = 0.05;
    double x = 1.0, y = 1.0;
    std::string identity;
    std::string out;
    std::string svg;
    int jobs = 0;
    double tol = 1e-8;
};

// config file values become defaults; explicit flags override them
void load_config(Options& o) {
    if (o.config_path.empty()) return;
    std::ifstream in(o.config_path);
    if (!in) throw config_error("cannot open config file: " + o.config_path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw config_error("config must be a JSON object");
    auto get = [&](const char* key, auto& slot) {
        if (j.contains(key)) slot = j.at(key).get<std::decay_t<decltype(slot)>>();
    };
    get("process", o.process);
    get("theta", o.theta);
    get("alpha", o.alpha);
    get("r", o.r);
    get("q", o.q);
    get("nus", o.nus);
    get("mus", o.mus);
    get("s_list", o.s_list);
    get("nu_list", o.nu_list);
    get("ensemble", o.ensemble);
    get("n", o.n);
    get("reps", o.reps);
    get("seed", o.seed);
    get("k_max", o.k_max);
    get("k0_list", o.k0_list);
    get("eps", o.eps);
    get("out", o.out);
    get("svg", o.svg);
    get("jobs", o.jobs);
    get("tol", o.tol);
}

ProcessSpec build_spec(const Options& o) {
    if (o.process == "airy") return ProcessSpec::airy();
    if (o.process == "bessel") return ProcessSpec::bessel(o.alpha);
    if (o.process == "wright") return ProcessSpec::wright(o.theta, o.alpha);
    if (o.process == "meijerg") {
        std::vector<double> nus = o.nus;
        if (nus.empty()) nus.assign(static_cast<size_t>(o.r), 0.0);
        return ProcessSpec::meijer_g(o.r, o.q, nus, o.mus);
    }
    throw config_error("unknown process: " + o.process);
}

json provenance_json(const sampling::Provenance& p) {
    return json{{"ensemble", p.ensemble},
                {"n", p.n},
                {"param", p.param},
                {"scaling_constant", p.scaling_constant},
                {"seed", p.seed},
                {"generator", p.generator},
                {"version", io::version_string()}};
}

// ----------------------------------------------------------------------------

int cmd_moments(const Options& o) {
    if (o.s_list.empty() || o.nu_list.empty())
        throw config_error("moments: s_list and nu_list must be non-empty");
    if (o.out.empty()) throw config_error("moments: --out required");
    ProcessSpec spec = build_spec(o);
    io::CsvWriter csv(o.out);
    csv.header({"s", "nu", "log_det", "asymptote", "residual"});
    for (double s : o.s_list) {
        for (double nu : o.nu_list) {
            double ld = fredholm::exp_moment(spec, s, nu, o.tol);
            double asy = asymptotics::moment_asymptote(spec, s, nu);
            csv.row({s, nu, ld, asy, ld - asy});
        }
    }
    return 0;
}

sampling::PointSample draw_sample(const Options& o, std::uint64_t replica) {
    sampling::RngSeed seed{o.seed};
    if (o.ensemble == "gue") return sampling::sample_gue_edge(o.n, o.k_max, seed, replica);
    if (o.ensemble == "lue")
        return sampling::sample_lue_hard_edge(o.n, static_cast<int>(o.alpha), o.k_max, seed,
                                              replica);
    if (o.ensemble == "ginibre")
        return sampling::sample_ginibre_product_hard_edge(o.n, o.r, o.k_max, seed, replica);
    throw config_error("unknown ensemble: " + o.ensemble);
}

ProcessSpec ensemble_limit_spec(const Options& o) {
    if (o.ensemble == "gue") return ProcessSpec::airy();
    if (o.ensemble == "lue") return ProcessSpec::bessel(o.alpha);
    if (o.ensemble == "ginibre") {
        std::vector<double> nus(static_cast<size_t>(o.r));
        for (int j = 0; j < o.r; ++j) nus[j] = static_cast<double>(j) / o.r;
        return ProcessSpec::meijer_g(o.r, 0, nus, {});
    }
    throw config_error("unknown ensemble: " + o.ensemble);
}

int cmd_rigidity(const Options& o) {
    if (o.out.empty()) throw config_error("rigidity: --out required");
    ProcessSpec spec = ensemble_limit_spec(o);

    // replicas with common random numbers across k0 values
    std::vector<sampling::PointSample> samples(o.reps);
    parallel_for(o.reps, true, [&](int rep) {
        samples[rep] = draw_sample(o, static_cast<std::uint64_t>(rep));
    });

    // per-replica reports
    json reports = json::array();
    const int k0_first = std::max(2, o.k0_list.empty() ? 2 : o.k0_list.front());
    for (int rep = 0; rep < o.reps; ++rep) {
        const int khi = std::min<int>(o.k_max, static_cast<int>(samples[rep].points.size()));
        if (khi < k0_first) continue;
        auto r = rigidity::sup_point_deviation(samples[rep], spec, k0_first, khi, o.eps);
        reports.push_back(json{{"replica", rep},
                               {"k0", r.k0},
                               {"k_max", r.k_max},
                               {"eps", r.eps},
                               {"sup_statistic", r.sup_statistic},
                               {"bound", r.bound},
                               {"violated", r.violated},
                               {"per_k", r.per_k}});
    }
    io::write_text_file(o.out + "_reports.json", reports.dump(1));

    io::CsvWriter csv(o.out + "_summary.csv");
    csv.header({"k0", "violation_fraction", "wilson_half"});
    for (int k0 : o.k0_list) {
        int cnt = 0;
        for (const auto& sample : samples) {
            const int khi = std::min<int>(o.k_max, static_cast<int>(sample.points.size()));
            bool bad = false;
            for (int k = std::max(2, k0); k <= khi; ++k) {
                auto band = asymptotics::rigidity_envelope(spec, k, o.eps);
                double xk = sample.points[k - 1];
                if (xk < band.lower || xk > band.upper) {
                    bad = true;
                    break;
                }
            }
            cnt += bad ? 1 : 0;
        }
        const double n = static_cast<double>(o.reps);
        const double phat = cnt / n;
        const double z = 1.959963984540054;
        const double half =
            z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / (1.0 + z * z / n);
        csv.row({static_cast<double>(k0), phat, half});
    }

    if (!o.svg.empty()) {
        const auto& s0 = samples.front();
        const int khi = std::min<int>(o.k_max, static_cast<int>(s0.points.size()));
        std::vector<double> ks, xs, lo, hi, center;
        for (int k = 2; k <= khi; ++k) {
            ks.push_back(k);
            xs.push_back(s0.points[k - 1]);
            auto band = asymptotics::rigidity_envelope(spec, k, o.eps);
            lo.push_back(band.lower);
            hi.push_back(band.upper);
            center.push_back(asymptotics::mu_inverse(spec, k));
        }
        double ymax = *std::max_element(hi.begin(), hi.end());
        io::SvgPlot plot(0.0, khi + 1.0, 0.0, 1.05 * ymax);
        plot.add_path(ks, lo, "envelope", "blue");
        plot.add_path(ks, hi, "envelope", "blue");
        plot.add_path(ks, center, "center", "orange");
        plot.add_points(ks, xs, "pt", "steelblue");
        io::write_text_file(o.svg, plot.render());

        // normalized view with the +-(1/pi + eps) bands
        std::vector<double> devs;
        for (int k = 2; k <= khi; ++k)
            devs.push_back((asymptotics::mu_of(spec, s0.points[k - 1]) - k) /
                           std::log(static_cast<double>(std::max(k, 2))));
        io::SvgPlot nplot(0.0, khi + 1.0, -1.2 * (1.0 / kPi + o.eps), 1.2 * (1.0 / kPi + o.eps));
        for (double sgn : {1.0, -1.0}) {
            nplot.add_hline(sgn * (1.0 / kPi + o.eps), "band", "orange");
            nplot.add_hline(sgn * (1.0 / kPi - o.eps), "band", "orange");
        }
        nplot.add_points(ks, devs, "pt", "steelblue");
        io::write_text_file(o.svg + ".normalized.svg", nplot.render());
    }
    return 0;
}

int cmd_kernel(const Options& o) {
    if (o.identity == "wright-bessel") {
        // Wright kernel at theta = 1 against the rescaled Bessel kernel
        std::vector<double> alphas = {0.0, 0.5, 2.0};
        double worst = 0.0;
        for (double al : alphas) {
            kernels::WrightKernelEvaluator wr(1.0, al);
            for (int i = 1; i <= 5; ++i)
                for (int j = 1; j <= 5; ++j) {
                    double xx = 2.0 * i, yy = 2.0 * j;
                    double a = wr.value(xx, yy);
                    double b = 4.0 * kernels::bessel_kernel(al, 4.0 * xx, 4.0 * yy);
                    worst = std::max(worst, std::abs(a - b));
                }
        }
        std::printf("wright-bessel identity max |error| = %.3e\n", worst);
        return worst < 1e-8 ? 0 : 2;
    }
    if (o.identity == "meijer-wright") {
        // (x/y)^{alpha/2} K^Me = r^r K^Wr(r^r x, r^r y), theta = 1/r
        const int r = o.r;
        const double al = o.alpha;
        std::vector<double> nus(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j) nus[j] = al + static_cast<double>(j) / r;
        StructureFunction f = StructureFunction::meijer(nus, {});
        kernels::ContourSpec cs = kernels::default_contour(f, 12.0);
        kernels::WrightKernelEvaluator wr(1.0 / r, al);
        const double rr = std::pow(static_cast<double>(r), r);
        double worst = 0.0;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                double xx = 0.6 * i, yy = 0.6 * j;
                double me = kernels::double_contour_kernel(f, cs, xx, yy);
                double wv = rr * wr.value(rr * xx, rr * yy);
                worst = std::max(worst, std::abs(std::pow(xx / yy, 0.5 * al) * me - wv));
            }
        std::printf("meijer-wright identity (r=%d, alpha=%g) max |error| = %.3e\n", r, al, worst);
        return worst < 1e-6 ? 0 : 2;
    }
    if (!o.identity.empty()) throw config_error("unknown identity: " + o.identity);
    ProcessSpec spec = build_spec(o);
    double v = 0.0;
    switch (spec.kind) {
        case ProcessKind::Airy: v = kernels::airy_kernel(o.x, o.y); break;
        case ProcessKind::Bessel: v = kernels::bessel_kernel(spec.alpha, o.x, o.y); break;
        case ProcessKind::Wright: v = kernels::wright_kernel(spec.theta, spec.alpha, o.x, o.y); break;
        case ProcessKind::MeijerG: v = kernels::meijer_kernel(spec, o.x, o.y); break;
    }
    std::printf("K(%.17g, %.17g) = %.17g\n", o.x, o.y, v);
    return 0;
}

int cmd_pc_verify(const Options& o) {
    const double nu = o.nu_list.empty() ? 0.5 : o.nu_list.front();
    pcmodel::PCParams p = pcmodel::PCParams::from_nu(nu);
    json out;
    out["nu"] = nu;
    out["q"] = {p.q.real(), p.q.imag()};
    if (p.q != cplx(0.0, 0.0)) {
        auto [b12, b21] = pcmodel::beta_coefficients(p);
        out["beta_product_residual"] = std::abs(b12 * b21 - cplx(nu, 0.0));
    }
    json jumps = json::array();
    for (double radius : {1.0, 3.0}) {
        for (const auto& jr : pcmodel::verify_jumps(p, radius))
            jumps.push_back(json{{"ray", jr.ray}, {"radius", radius}, {"residual", jr.residual}});
    }
    out["jumps"] = jumps;
    const double r20 = pcmodel::asymptotic_coefficient_check(p, 20.0);
    const double r40 = pcmodel::asymptotic_coefficient_check(p, 40.0);
    out["phi1_residual_radius20"] = r20;
    out["phi1_residual_radius40"] = r40;
    out["phi1_residual_ratio"] = r40 / r20;
    std::string text = out.dump(1) + "\n";
    if (!o.out.empty())
        io::write_text_file(o.out, text);
    else
        std::fputs(text.c_str(), stdout);
    return 0;
}

int cmd_sample(const Options& o) {
    if (o.out.empty()) throw config_error("sample: --out required");
    sampling::PointSample s = draw_sample(o, 0);
    io::CsvWriter csv(o.out);
    csv.header({"k", "x_k"});
    for (size_t k = 0; k < s.points.size(); ++k)
        csv.row({static_cast<double>(k + 1), s.points[k]});
    io::write_text_file(o.out + ".json", provenance_json(s.provenance).dump(1) + "\n");
    return 0;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--config", o.config_path, "JSON config file (flags override)");
    cmd->add_option("--jobs", o.jobs, "worker threads (0 = default)");
    cmd->add_option("--process", o.process, "airy|bessel|wright|meijerg");
    cmd->add_option("--theta", o.theta, "Wright theta");
    cmd->add_option("--alpha", o.alpha, "Bessel/Wright alpha (LUE parameter)");
    cmd->add_option("--r", o.r, "MeijerG r / Ginibre factor count");
    cmd->add_option("--q", o.q, "MeijerG q");
    cmd->add_option("--nus", o.nus, "MeijerG nu list")->delimiter(',');
    cmd->add_option("--mus", o.mus, "MeijerG mu list")->delimiter(',');
    cmd->add_option("--nu-list", o.nu_list, "nu grid")->delimiter(',');
    cmd->add_option("--s-list", o.s_list, "s grid")->delimiter(',');
    cmd->add_option("--n", o.n, "matrix size");
    cmd->add_option("--reps", o.reps, "Monte Carlo replicas");
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--eps", o.eps, "envelope slack epsilon");
    cmd->add_option("--k0", o.k0_list, "k0 list")->delimiter(',');
    cmd->add_option("--k-max", o.k_max, "largest point index");
    cmd->add_option("--ensemble", o.ensemble, "gue|lue|ginibre");
    cmd->add_option("--x", o.x, "kernel argument x");
    cmd->add_option("--y", o.y, "kernel argument y");
    cmd->add_option("--identity", o.identity, "kernel identity check name");
    cmd->add_option("--out", o.out, "output path");
    cmd->add_option("--svg", o.svg, "SVG output path");
    cmd->add_option("--tol", o.tol, "determinant refinement tolerance");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge point process toolkit"};
    app.require_subcommand(1);
    Options o;

    // the config file supplies defaults; explicit flags override them
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") o.config_path = argv[i + 1];
    try {
        load_config(o);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    CLI::App* c_moments = app.add_subcommand("moments", "Fredholm determinants vs asymptotics");
    CLI::App* c_rigidity = app.add_subcommand("rigidity", "rigidity Monte Carlo");
    CLI::App* c_kernel = app.add_subcommand("kernel", "kernel evaluations and identities");
    CLI::App* c_pc = app.add_subcommand("pc-verify", "parabolic cylinder model residuals");
    CLI::App* c_sample = app.add_subcommand("sample", "random matrix edge samples");
    for (CLI::App* c : {c_moments, c_rigidity, c_kernel, c_pc, c_sample}) add_common(c, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        set_threads(o.jobs);
        if (app.got_subcommand(c_moments)) return cmd_moments(o);
        if (app.got_subcommand(c_rigidity)) return cmd_rigidity(o);
        if (app.got_subcommand(c_kernel)) return cmd_kernel(o);
        if (app.got_subcommand(c_pc)) return cmd_pc_verify(o);
        if (app.got_subcommand(c_sample)) return cmd_sample(o);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const accuracy_error& e) {
        std::cerr << "accuracy error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "I/O or runtime error: " << e.what() << "\n";
        return 3;
    }
}
