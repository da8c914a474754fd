#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phq/common.hpp"

namespace phq {

struct RunConfig {
    std::string command = "validate";
    std::string suite = "all";
    int n = 32;
    double box_len = 2.0 * pi;
    double ell = 1.0;
    Vec3 axis{0.0, 0.0, 1.0};
    std::vector<double> alpha{1.0, 2.0, 3.0, 5.0};
    int theta_steps = 181;
    double r_max = 6.0;
    int r_steps = 121;
    std::string out;
    std::uint64_t seed = 42;
    double tol_scale = 1.0;

    void validate() const;
};

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const;
};

const std::vector<std::string>& suite_names();

// Runs one suite; throws DomainError for an unknown name. A check passes when
// measured <= tolerance * tol_scale (NaN never passes).
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

// JSON report with the configuration echoed. Byte-identical for identical input.
std::string report_json(const std::vector<SuiteReport>& reports, const RunConfig& cfg);

// CSV rows theta, T1..T6, u / u(0), singular. Divergent entries inside the guard band are "nan".
std::string t_profiles_csv(const RunConfig& cfg);

// CSV rows r, rho for each alpha (one column per alpha).
std::string gaussian_rho_csv(const RunConfig& cfg);

// 17 significant digits, scientific notation.
std::string format_real(double v);

}  // namespace phq
