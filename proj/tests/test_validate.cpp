#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "phq/validate.hpp"

using namespace phq;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) cells.push_back(c);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("config defaults and validation") {
    RunConfig c;
    CHECK(c.n == 32);
    CHECK(c.box_len == doctest::Approx(2.0 * pi));
    CHECK(c.seed == 42);
    CHECK_NOTHROW(c.validate());
    c.n = 31;
    CHECK_THROWS_AS(c.validate(), ShapeError);
    c = RunConfig{};
    c.alpha = {1.0, -2.0};
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = RunConfig{};
    c.axis = {1.0, 1.0, 0.0};
    CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("polarization suite passes and a zero tolerance scale fails it") {
    RunConfig c;
    CHECK(run_suite("polarization", c).pass());
    c.tol_scale = 0.0;
    CHECK_FALSE(run_suite("polarization", c).pass());
    CHECK_THROWS_AS(run_suite("nonsense", c), DomainError);
}

TEST_CASE("report JSON echoes the configuration and is deterministic") {
    RunConfig c;
    c.seed = 9;
    const std::vector<SuiteReport> reps{run_suite("specfun", c), run_suite("polarization", c)};
    const std::string a = report_json(reps, c);
    CHECK(a == report_json({run_suite("specfun", c), run_suite("polarization", c)}, c));
    const auto j = nlohmann::json::parse(a);
    CHECK(j["config"]["seed"] == 9);
    CHECK(j["config"]["n"] == 32);
    CHECK(j["suites"].size() == 2);
    CHECK(j["pass"] == true);
    CHECK(j["suites"][1]["checks"][0]["name"] == "orthonormality");
}

TEST_CASE("T profile CSV layout") {
    RunConfig c;
    const auto rows = parse_csv(t_profiles_csv(c));
    REQUIRE(rows.size() == 182);
    CHECK(rows[0] == std::vector<std::string>{"theta", "T1", "T2", "T3", "T4", "T5", "T6", "u_normalized", "singular"});
    CHECK(std::stod(rows[1][1]) == 0.0);
    CHECK(std::stod(rows[1][2]) == 0.0);
    CHECK(std::stod(rows[1][7]) == doctest::Approx(1.0));
    CHECK(rows[91][8] == "1");
    CHECK(rows[91][1] == "nan");
    CHECK(rows[91][3] != "nan");
    for (int i = 1; i <= 45; ++i) CHECK(std::stod(rows[i][7]) == doctest::Approx(std::stod(rows[182 - i][7])).epsilon(1e-10));
    CHECK(rows[1][0] == "0.0000000000000000e+00");
}

TEST_CASE("Gaussian rho CSV layout") {
    RunConfig c;
    c.alpha = {1.0, 5.0};
    c.r_steps = 11;
    c.r_max = 2.0;
    const auto rows = parse_csv(gaussian_rho_csv(c));
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].size() == 3);
    CHECK(rows[0][0] == "r");
    CHECK(std::stod(rows[1][2]) > std::stod(rows[1][1]));
    CHECK(std::stod(rows[11][0]) == doctest::Approx(2.0));
}

TEST_CASE("format_real uses 17 significant digits") {
    CHECK(format_real(0.1) == "1.0000000000000001e-01");
    CHECK(format_real(std::numeric_limits<double>::quiet_NaN()) == "nan");
}
