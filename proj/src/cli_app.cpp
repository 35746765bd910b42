#include "rksamp/cli_app.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rksamp/io.hpp"
#include "rksamp/jacobi.hpp"
#include "rksamp/pw.hpp"
#include "rksamp/reconstruct.hpp"
#include "rksamp/verify.hpp"

namespace rksamp {

namespace {

// One bag of bound values; exactly one subcommand parses per run, so the
// slots can be shared.  Presence is queried on the active subcommand.
struct CliValues {
    std::string model_path;
    std::string state_path;
    std::string out_path;
    std::string points_path;
    std::string grid_text = "-3:3:25";
    double tau = 0.0;
    double theta = 0.0;
    double x_star = 0.0;
    double tol_override = 0.0;
    std::size_t n_override = 0;
    std::size_t window = 8;
    std::size_t terms = 0;
    std::uint64_t seed = 42;
};

double extension_param_for(const LoadedModel& lm, const CLI::App& sub,
                           const CliValues& v) {
    if (lm.type == "jacobi") {
        if (sub.count("--theta") > 0)
            throw std::invalid_argument("jacobi models take --tau, not --theta");
        return v.tau;
    }
    if (sub.count("--tau") > 0)
        throw std::invalid_argument("pw models take --theta, not --tau");
    return v.theta;
}

std::optional<std::size_t> n_override_of(const CLI::App& sub, const CliValues& v) {
    if (sub.count("--N") > 0) return v.n_override;
    return std::nullopt;
}

int with_output(const CLI::App& sub, const CliValues& v, std::ostream& out,
                std::ostream& err, const std::function<void(std::ostream&)>& body) {
    if (sub.count("--out") > 0) {
        std::ofstream f(v.out_path);
        if (!f) {
            err << "cannot open output file: " << v.out_path << "\n";
            return 2;
        }
        body(f);
        return 0;
    }
    body(out);
    return 0;
}

int cmd_points(const CLI::App& sub, const CliValues& v, std::ostream& out,
               std::ostream& err) {
    const LoadedModel lm = load_model_file(v.model_path, n_override_of(sub, v));
    const double param = extension_param_for(lm, sub, v);
    const SamplingSet set = lm.model->extension_spectrum(param, v.window);

    if (sub.count("--points") > 0) {
        std::ifstream f(v.points_path);
        if (!f) {
            err << "cannot open points file: " << v.points_path << "\n";
            return 2;
        }
        const SamplingSet other = read_points_csv(f);
        bool same = other.size() == set.size();
        for (std::size_t i = 0; same && i < set.size(); ++i)
            same = other.points[i] == set.points[i] &&
                   other.kernel_norms[i] == set.kernel_norms[i] &&
                   other.weights[i] == set.weights[i];
        if (!same) {
            err << "points round-trip mismatch against " << v.points_path << "\n";
            return 1;
        }
        out << "points round-trip OK (" << set.size() << " points)\n";
        return 0;
    }
    return with_output(sub, v, out, err,
                       [&](std::ostream& o) { write_points_csv(o, set); });
}

int cmd_reconstruct(const CLI::App& sub, const CliValues& v, std::ostream& out,
                    std::ostream& err) {
    const LoadedModel lm = load_model_file(v.model_path, n_override_of(sub, v));
    const StateVector phi = load_state_file(v.state_path, *lm.model);
    const double param = extension_param_for(lm, sub, v);
    const std::vector<Complex> grid = parse_grid(v.grid_text);

    const SamplingSet set = lm.model->extension_spectrum(param, v.window);
    const std::size_t terms = sub.count("--terms") > 0 ? v.terms : set.size();
    if (terms == 0 || terms > set.size())
        throw std::invalid_argument("--terms must lie in [1, number of samples]");

    const SampledSignal signal = sample_transform(*lm.model, phi, set);
    const std::vector<std::size_t> order = series_order(set);
    const LagrangeGenerator gen =
        make_lagrange_generator(*lm.model, set, order[0]);

    return with_output(sub, v, out, err, [&](std::ostream& o) {
        o << "z_re,z_im,f_true_re,f_true_im,f_kernel_re,f_kernel_im,"
             "f_lagrange_re,f_lagrange_im,err_kernel,err_lagrange\n";
        for (const Complex& z : grid) {
            const Complex truth = lm.model->transform(phi, z);
            const Complex fk = kernel_series(*lm.model, signal, z, terms);
            const Complex fl = lagrange_series(gen, signal, z, terms);
            o << format_g17(z.real()) << ',' << format_g17(z.imag()) << ','
              << format_g17(truth.real()) << ',' << format_g17(truth.imag()) << ','
              << format_g17(fk.real()) << ',' << format_g17(fk.imag()) << ','
              << format_g17(fl.real()) << ',' << format_g17(fl.imag()) << ','
              << format_g17(std::abs(fk - truth)) << ','
              << format_g17(std::abs(fl - truth)) << '\n';
        }
    });
}

int cmd_place(const CLI::App& sub, const CliValues& v, std::ostream& out,
              std::ostream& err) {
    const LoadedModel lm = load_model_file(v.model_path, n_override_of(sub, v));
    const auto* jm = dynamic_cast<const JacobiModel*>(lm.model.get());
    if (jm == nullptr)
        throw std::invalid_argument("place requires a jacobi model");

    const BoundaryAngle tau =
        place_sampling_point(jm->coefficients(), jm->dimension(), v.x_star);
    const SamplingSet set = jm->extension_spectrum(tau.tau, 0);

    double best = std::numeric_limits<double>::infinity();
    for (double x : set.points) best = std::min(best, std::fabs(x - v.x_star));
    if (!(best <= 1e-8)) {
        err << "internal assertion: placed angle misses x* by " << format_g17(best)
            << "\n";
        return 3;
    }

    nlohmann::json j;
    j["tau"] = tau.tau;
    j["points"] = set.points;
    return with_output(sub, v, out, err,
                       [&](std::ostream& o) { o << j.dump(2) << "\n"; });
}

int cmd_verify(const CLI::App& sub, const CliValues& v, std::ostream& out,
               std::ostream& err) {
    if (sub.count("--model") > 0) {
        const LoadedModel lm = load_model_file(v.model_path, n_override_of(sub, v));
        out << "model file OK: " << lm.model->basis_tag() << "\n";
    }
    VerifyOptions opts;
    opts.seed = v.seed;
    if (sub.count("--tol") > 0) {
        opts.tol_override = v.tol_override;
        opts.has_tol_override = true;
    }
    const std::vector<CheckResult> results = run_verification(opts);

    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        if (r.pass) ++passed;
        std::ostringstream line;
        line << (r.pass ? "[ ok ] " : "[FAIL] ") << std::left << std::setw(40)
             << r.name << " max " << std::setprecision(3) << std::scientific
             << r.max_err << "  tol " << r.tolerance;
        out << line.str();
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
    }
    out << passed << "/" << results.size() << " checks passed (seed " << v.seed
        << ")\n";
    if (passed != results.size()) {
        err << "verification failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"reproducing-kernel sampling toolkit"};
    app.require_subcommand(1);
    CliValues v;

    CLI::App* points = app.add_subcommand(
        "points", "Print the sampling set of one self-adjoint extension");
    points->add_option("--model", v.model_path, "model JSON file")->required();
    points->add_option("--tau", v.tau, "boundary angle in [0, pi), jacobi models");
    points->add_option("--theta", v.theta, "phase in [0, 2 pi), pw models");
    points->add_option("--N", v.n_override, "override the model dimension");
    points->add_option("--window", v.window, "two-sided lattice window (pw)");
    points->add_option("--out", v.out_path, "write CSV here instead of stdout");
    points->add_option("--points", v.points_path,
                       "re-ingest a points CSV and compare instead of printing");

    CLI::App* reconstruct = app.add_subcommand(
        "reconstruct", "Tabulate kernel and Lagrange reconstructions on a grid");
    reconstruct->add_option("--model", v.model_path, "model JSON file")->required();
    reconstruct->add_option("--state", v.state_path, "state JSON file")->required();
    reconstruct->add_option("--tau", v.tau, "boundary angle in [0, pi), jacobi models");
    reconstruct->add_option("--theta", v.theta, "phase in [0, 2 pi), pw models");
    reconstruct->add_option("--N", v.n_override, "override the model dimension");
    reconstruct->add_option("--window", v.window, "two-sided lattice window (pw)");
    reconstruct->add_option("--terms", v.terms, "series terms (default: all samples)");
    reconstruct->add_option("--grid", v.grid_text, "evaluation grid lo:hi:count[,imag]");
    reconstruct->add_option("--out", v.out_path, "write CSV here instead of stdout");

    CLI::App* place = app.add_subcommand(
        "place", "Find the boundary angle whose sampling set contains x*");
    place->add_option("--model", v.model_path, "model JSON file")->required();
    place->add_option("--x-star", v.x_star, "point to place")->required();
    place->add_option("--N", v.n_override, "override the model dimension");
    place->add_option("--out", v.out_path, "write JSON here instead of stdout");

    CLI::App* verify =
        app.add_subcommand("verify", "Run the seeded invariant checks");
    verify->add_option("--seed", v.seed, "generator seed (default 42)");
    verify->add_option("--tol", v.tol_override, "override every check tolerance");
    verify->add_option("--model", v.model_path, "also validate this model file");
    verify->add_option("--N", v.n_override, "override the model dimension");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("rksamp");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (points->parsed()) return cmd_points(*points, v, out, err);
        if (reconstruct->parsed()) return cmd_reconstruct(*reconstruct, v, out, err);
        if (place->parsed()) return cmd_place(*place, v, out, err);
        if (verify->parsed()) return cmd_verify(*verify, v, out, err);
        err << "no subcommand given\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal assertion: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace rksamp
