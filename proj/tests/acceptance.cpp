// Acceptance run: one PASS/FAIL line per criterion 1..11.
//
//   acceptance [--expect-fail 6,10]
//
// Exit status is 0 when the set of failing criteria equals the expected set
// (empty by default). A criterion listed as expected to fail that passes is
// also an error, so the list cannot silently go stale.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "phq/localized.hpp"
#include "phq/spectral.hpp"
#include "phq/validate.hpp"
#include "phq/wavefun.hpp"

using namespace phq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void need(bool ok, const std::string& what, double v) {
        pass = pass && ok;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s%s=%.3e", detail.empty() ? "" : ", ", what.c_str(), v);
        detail += buf;
        if (!ok) detail += "(!)";
    }
};

double measured(const SuiteReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c.measured;
    std::fprintf(stderr, "acceptance: check %s/%s missing\n", r.suite.c_str(), name.c_str());
    std::exit(2);
}

void bound(Outcome& o, const SuiteReport& r, const std::string& name, double tol) {
    const double v = measured(r, name);
    o.need(v <= tol, name, v);
}

Outcome polarization() {
    const SuiteReport r = run_suite("polarization", RunConfig{});
    Outcome o;
    for (const char* n : {"orthonormality", "completeness", "transversality", "helicity_eigenrelation",
                          "phase_unimodular", "phase_maps_canonical_to_general"})
        bound(o, r, n, 1e-12);
    return o;
}

Outcome plane_wave_orthonormality() {
    const GridSpec g{16, 2.0 * pi};
    const double ell = 1.7, x0 = 0.37;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> fd(-7, 8);
    std::set<std::size_t> picks{g.index_of_freq(1, 0, 0), g.index_of_freq(-1, 0, 0), g.index_of_freq(0, 0, 1),
                                g.index_of_freq(0, 0, -1), g.index_of_freq(8, 8, 8)};
    while (picks.size() < 24) {
        const std::size_t i = g.index_of_freq(fd(rng), fd(rng), fd(rng));
        if (i != 0) picks.insert(i);
    }
    std::vector<PhotonState> basis;
    for (std::size_t i : picks)
        for (int eps : {1, -1})
            for (int sigma : {1, -1}) basis.push_back(plane_wave_state(g, i, eps, sigma, ell, x0));
    double worst = 0.0;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
            worst = std::max(worst, std::abs(inner_product(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)));
    Outcome o;
    o.need(worst <= 1e-10, "max|G-1|", worst);
    return o;
}

Outcome operator_algebra(const SuiteReport& r) {
    Outcome o;
    for (const char* n : {"commutator_h_helicity", "commutator_C_helicity", "commutator_C_h", "commutator_X_helicity",
                          "commutator_X_C", "hermiticity", "position_preserves_transversality"})
        bound(o, r, n, 1e-8);
    bound(o, r, "commutator_X_P_minus_i_delta", 1e-4);
    return o;
}

Outcome hawton(const SuiteReport& r) {
    Outcome o;
    bound(o, r, "hawton_circular_vs_linear", 1e-8);
    return o;
}

Outcome localized_vs_oracle(const SuiteReport& r) {
    Outcome o;
    bound(o, r, "t_profiles_vs_oracle", 1e-4);
    bound(o, r, "j_integrals_vs_closed_form", 1e-5);
    return o;
}

Outcome singularity(const SuiteReport& r) {
    Outcome o;
    // Smallest |T| over the band edge samples; each must exceed 1e6.
    for (int w : {1, 2, 4, 5}) {
        double smallest = std::numeric_limits<double>::infinity();
        for (double d : {-1e-6, -5e-7, 5e-7, 1e-6})
            smallest = std::min(smallest, std::abs(t_profile_unchecked(w, 0.5 * pi + d)));
        o.need(smallest > 1e6, "min|T" + std::to_string(w) + "|", smallest);
    }
    // Boundedness of T3 and T6: sample on [0, pi] down to 1e-9 from the plane.
    for (int w : {3, 6}) {
        double biggest = 0.0;
        for (int i = 0; i <= 2000; ++i) biggest = std::max(biggest, std::abs(t_profile_unchecked(w, pi * i / 2000.0)));
        for (double d = 1e-1; d >= 1e-9; d /= 10.0)
            for (double s : {-1.0, 1.0})
                biggest = std::max(biggest, std::abs(t_profile_unchecked(w, 0.5 * pi + s * d)));
        o.need(biggest < 1e3, "max|T" + std::to_string(w) + "|", biggest);
    }
    bound(o, r, "poynting_closed_form", 0.0);
    bound(o, r, "poynting_oracle_over_4pi_u", 1e-6);
    return o;
}

Outcome power_laws(const SuiteReport& r) {
    Outcome o;
    bound(o, r, "power_laws", 1e-10);
    return o;
}

Outcome scalar_sector() {
    const SuiteReport r = run_suite("scalar", RunConfig{});
    Outcome o;
    bound(o, r, "massless_at_reference_time", 1e-12);
    bound(o, r, "massive_zero_mass_limit", 1e-3);
    bound(o, r, "massive_vs_oracle", 1e-4);
    bound(o, r, "massless_vs_oracle", 1e-4);
    return o;
}

Outcome wavefunction_pipeline(const SuiteReport& r) {
    Outcome o;
    bound(o, r, "plane_wave_formula", 1e-12);
    bound(o, r, "plane_wave_no_definite_helicity", 1e-12);
    bound(o, r, "definite_sign_of_energy", 1e-12);
    bound(o, r, "norm_identity", 1e-8);
    bound(o, r, "schrodinger_packet", 1e-5);
    return o;
}

Outcome gaussian_example() {
    Outcome o;
    double worst = 0.0, marg = 0.0;
    for (double alpha : {1.0, 2.0, 3.0, 5.0}) {
        const GridSpec g{64, 16.0 / std::sqrt(alpha)};
        const PositionWaveFunction f =
            position_wavefunction(gaussian_example_field(g, alpha, 1.0), SpectralField::zeros(g));
        const ProbabilityDensity pd = probability_density(f);
        marg = std::max({marg, std::abs(pd.helicity_plus - 0.5), std::abs(pd.helicity_minus - 0.5)});
        const int mid = g.n / 2;  // x = 0
        for (int l = mid; l < g.n; ++l) {
            const double r = (l - mid) * g.h();
            if (r > 3.0 / std::sqrt(alpha) + 1e-12) break;
            const std::size_t idx = g.index(mid, mid, l);
            for (int eps : {1, -1})
                for (int sigma : {1, -1}) {
                    const cplx exact = gaussian_example_wavefunction(alpha, 1.0, r, eps, sigma);
                    worst = std::max(worst, std::abs(f(eps, sigma)[idx] - exact) / std::abs(exact));
                }
        }
    }
    o.need(worst <= 1e-3, "grid_vs_closed_form", worst);
    o.need(marg <= 1e-6, "helicity_marginals", marg);

    std::vector<double> r(121);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = 6.0 * i / 120.0;
    double prev_moment = std::numeric_limits<double>::infinity(), norm_err = 0.0;
    bool finite = true, nonneg = true, tighter = true;
    for (double alpha : {1.0, 2.0, 3.0, 5.0}) {
        const GaussianRhoProfile p = gaussian_rho_profile(alpha, r);
        finite = finite && std::isfinite(p.rho[0]);
        for (double v : p.rho) nonneg = nonneg && v >= 0.0 && std::isfinite(v);
        tighter = tighter && p.first_moment < prev_moment;
        prev_moment = p.first_moment;
        norm_err = std::max(norm_err, std::abs(p.radial_integral - 1.0));
    }
    o.need(finite, "rho_finite_at_0", finite ? 0.0 : 1.0);
    o.need(nonneg, "rho_nonnegative", nonneg ? 0.0 : 1.0);
    o.need(tighter, "moment_decreasing", tighter ? 0.0 : 1.0);
    o.need(norm_err <= 1e-6, "rho_normalization", norm_err);
    return o;
}

Outcome determinism() {
    RunConfig cfg;
    auto once = [&] {
        std::vector<SuiteReport> reps;
        for (const auto& s : suite_names()) reps.push_back(run_suite(s, cfg));
        return report_json(reps, cfg);
    };
    const std::string a = once(), b = once();
    Outcome o;
    o.need(a == b, "json_bytes_differ", a == b ? 0.0 : 1.0);
    return o;
}

std::set<int> parse_list(const std::string& s) {
    std::set<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) out.insert(std::stoi(part));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--expect-fail" && i + 1 < argc)
            expected = parse_list(argv[++i]);
        else {
            std::fprintf(stderr, "usage: acceptance [--expect-fail N,M,...]\n");
            return 2;
        }
    }

    const RunConfig cfg;
    SuiteReport ops, loc, wf;
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {1, "polarization algebra", polarization},
        {2, "plane-wave orthonormality", plane_wave_orthonormality},
        {3, "operator algebra", [&] { ops = run_suite("operators", cfg); return operator_algebra(ops); }},
        {4, "Hawton form equivalence", [&] { return hawton(ops); }},
        {5, "localized closed forms vs oracle", [&] { loc = run_suite("localized", cfg); return localized_vs_oracle(loc); }},
        {6, "singularity structure", [&] { return singularity(loc); }},
        {7, "power laws", [&] { return power_laws(loc); }},
        {8, "scalar sector", scalar_sector},
        {9, "wave-function pipeline", [&] { wf = run_suite("wavefun", cfg); return wavefunction_pipeline(wf); }},
        {10, "Gaussian example", gaussian_example},
        {11, "determinism", determinism},
    };

    std::set<int> failed;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), sec);
        std::fflush(stdout);
        if (!o.pass) failed.insert(c.id);
    }

    if (failed == expected) {
        std::printf("failing criteria match the expected set (%zu)\n", expected.size());
        return 0;
    }
    for (int id : failed)
        if (!expected.count(id)) std::printf("unexpected failure: criterion %d\n", id);
    for (int id : expected)
        if (!failed.count(id)) std::printf("expected failure did not occur: criterion %d\n", id);
    return 1;
}
