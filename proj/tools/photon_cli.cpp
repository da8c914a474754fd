// Batch front end: profiles as CSV, validation suites as JSON.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "phq/validate.hpp"

namespace {

phq::Vec3 parse_axis(const std::string& s) {
    std::stringstream ss(s);
    phq::Vec3 v{};
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= 3) throw CLI::ValidationError("--axis", "expected three components mx,my,mz");
        try {
            std::size_t used = 0;
            v[i++] = std::stod(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--axis", "not a number: " + part);
        }
    }
    if (i != 3) throw CLI::ValidationError("--axis", "expected three components mx,my,mz");
    const double n = phq::norm(v);
    if (!(n > 0.0)) throw CLI::ValidationError("--axis", "axis must be nonzero");
    return {v[0] / n, v[1] / n, v[2] / n};
}

// Returns false on I/O failure.
bool emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return static_cast<bool>(std::cout.flush());
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << text;
    return static_cast<bool>(f.flush());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon localization and position-operator toolkit"};
    phq::RunConfig cfg;
    std::string axis = "0,0,1";
    app.add_option("--command", cfg.command, "t_profiles, gaussian_rho or validate")
        ->check(CLI::IsMember({"t_profiles", "gaussian_rho", "validate"}))
        ->capture_default_str();
    std::vector<std::string> suites{"all"};
    for (const auto& s : phq::suite_names()) suites.push_back(s);
    app.add_option("--suite", cfg.suite, "validation suite (validate only)")
        ->check(CLI::IsMember(suites))
        ->capture_default_str();
    app.add_option("--n", cfg.n, "grid points per side (even)")->capture_default_str();
    app.add_option("--box-len", cfg.box_len, "box side length")->capture_default_str();
    app.add_option("--ell", cfg.ell, "length scale in the inner product")->capture_default_str();
    app.add_option("--axis", axis, "symmetry axis mx,my,mz (normalized)")->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "Gaussian widths")->delimiter(',')->capture_default_str();
    app.add_option("--theta-steps", cfg.theta_steps, "rows in the theta grid")->capture_default_str();
    app.add_option("--r-max", cfg.r_max, "largest radius")->capture_default_str();
    app.add_option("--r-steps", cfg.r_steps, "rows in the radial grid")->capture_default_str();
    app.add_option("--out", cfg.out, "output file (stdout if omitted)");
    app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
    app.add_option("--tol-scale", cfg.tol_scale, "multiplies every tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
        cfg.axis = parse_axis(axis);
        cfg.validate();
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (cfg.command == "t_profiles") return emit(phq::t_profiles_csv(cfg), cfg.out) ? 0 : 2;
        if (cfg.command == "gaussian_rho") return emit(phq::gaussian_rho_csv(cfg), cfg.out) ? 0 : 2;

        std::vector<phq::SuiteReport> reports;
        if (cfg.suite == "all")
            for (const auto& s : phq::suite_names()) reports.push_back(phq::run_suite(s, cfg));
        else
            reports.push_back(phq::run_suite(cfg.suite, cfg));
        bool ok = true;
        for (const auto& r : reports) {
            ok = ok && r.pass();
            for (const auto& c : r.checks)
                if (!c.pass) std::cerr << "FAIL " << r.suite << '/' << c.name << " measured " << c.measured << '\n';
        }
        if (!emit(phq::report_json(reports, cfg), cfg.out)) {
            std::cerr << "error: cannot write " << cfg.out << '\n';
            return 2;
        }
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
