#include <doctest.h>

#include "phq/operators.hpp"
#include "phq/wavefun.hpp"

using namespace phq;

namespace {

double gaussian_worst_error(int n, double box, double alpha) {
    const GridSpec g{n, box};
    const PositionWaveFunction f = position_wavefunction(gaussian_example_field(g, alpha, 1.0), SpectralField::zeros(g));
    double worst = 0.0;
    const int mid = n / 2;
    for (int l = mid; l < n; ++l) {
        const double r = (l - mid) * g.h();
        if (r > 3.0 / std::sqrt(alpha)) break;
        const cplx exact = gaussian_example_wavefunction(alpha, 1.0, r, 1, 1);
        worst = std::max(worst, std::abs(f(1, 1)[g.index(mid, mid, l)] - exact) / std::abs(exact));
    }
    return worst;
}

}  // namespace

// tools/reference_values.py: the defining k-integral evaluated by mpmath.
TEST_CASE("Gaussian closed form against high-precision quadrature") {
    struct Row {
        double alpha, r, im;
    };
    for (const Row& x : std::vector<Row>{{1.0, 0.0, -0.34245420633321091869},
                                         {1.0, 0.7, -0.27668822925849499412},
                                         {2.0, 1.1, -0.072868637949653303524},
                                         {5.0, 0.4, -0.072394250698040614889},
                                         {3.0, 2.5, -0.00099942099327297858439}}) {
        const cplx f = gaussian_example_wavefunction(x.alpha, 1.0, x.r, 1, 1);
        CHECK(std::abs(f.real()) < 1e-15);
        CHECK(std::abs(f.imag() - x.im) < 1e-12 * std::abs(x.im));
        CHECK(std::abs(gaussian_example_quadrature(x.alpha, 1.0, x.r, 1, 1) - f) < 1e-10 * std::abs(f));
    }
}

TEST_CASE("Gaussian channels differ only by eps sigma") {
    const cplx f = gaussian_example_wavefunction(2.0, cplx(0.3, 0.4), 0.9, 1, 1);
    CHECK(std::abs(gaussian_example_wavefunction(2.0, cplx(0.3, 0.4), 0.9, -1, 1) + f) < 1e-16);
    CHECK(std::abs(gaussian_example_wavefunction(2.0, cplx(0.3, 0.4), 0.9, -1, -1) - f) < 1e-16);
}

TEST_CASE("Gaussian grid error falls with the box size") {
    // Periodic images of the r^{-7/2} tail dominate; doubling the resolution at fixed box changes little.
    const double e16 = gaussian_worst_error(64, 16.0, 1.0);
    const double e24 = gaussian_worst_error(96, 24.0, 1.0);
    CHECK(e16 > 1e-3);
    CHECK(e24 < e16 / 2.5);
}

TEST_CASE("Gaussian norm and helicity marginals on the grid") {
    const GridSpec g{32, 16.0};
    const SpectralField E = gaussian_example_field(g, 1.0, 1.0);
    const PositionWaveFunction f = position_wavefunction(E, SpectralField::zeros(g));
    const PhotonState s = state_from_fields(E, SpectralField::zeros(g));
    CHECK(std::abs(wavefunction_norm(f) - inner_product(s, s).real()) < 1e-10 * wavefunction_norm(f));
    // At box 16 the grid norm is within a few percent of the continuum value.
    CHECK(std::abs(wavefunction_norm(f) / gaussian_example_norm(1.0, 1.0) - 1.0) < 5e-2);
    const ProbabilityDensity p = probability_density(f);
    CHECK(std::abs(p.helicity_plus - 0.5) < 1e-12);
    CHECK(std::abs(p.chirality_plus - 0.5) < 1e-12);
}

TEST_CASE("rho profile is a normalized radial density that tightens with alpha") {
    std::vector<double> r;
    for (int i = 0; i <= 60; ++i) r.push_back(0.1 * i);
    double prev_moment = 1e300, prev_peak = 0.0;
    for (double a : {1.0, 2.0, 3.0, 5.0}) {
        const GaussianRhoProfile p = gaussian_rho_profile(a, r);
        CHECK(std::abs(p.radial_integral - 1.0) < 1e-6);
        CHECK(p.first_moment < prev_moment);
        CHECK(p.rho[0] > prev_peak);
        for (double v : p.rho) CHECK(v >= 0.0);
        prev_moment = p.first_moment;
        prev_peak = p.rho[0];
    }
    CHECK_THROWS_AS(gaussian_rho_profile(0.0, r), DomainError);
}

TEST_CASE("fields round trip through the state") {
    const GridSpec g{16, 2.0 * pi};
    const PhotonState s = gaussian_packet(g, {0.1, 0.0, -0.2}, {3.0, 1.0, 2.0}, 0.8, {cplx(1.0), cplx(0.0, 1.0), 0.5, 0.0});
    const auto [E, B] = fields_from_state(s);
    const PhotonState t = state_from_fields(E, B);
    CHECK(max_abs_diff(t.a, s.a) < 1e-12 * max_abs(s.a));
    CHECK(max_abs_diff(t.adot, s.adot) < 1e-12 * max_abs(s.adot));
}

TEST_CASE("non-transverse input is rejected") {
    const GridSpec g{8, 2.0 * pi};
    SpectralField E = SpectralField::zeros(g);
    E.coeffs[g.index_of_freq(1, 0, 0)] = {1.0, 0.0, 0.0};
    CHECK_THROWS_AS(position_wavefunction(E, SpectralField::zeros(g)), DomainError);
}

TEST_CASE("position wave function of a definite-channel packet lives in one channel") {
    const GridSpec g{16, 2.0 * pi};
    const PhotonState s = gaussian_packet(g, {0.0, 0.0, 0.0}, {2.0, 2.0, 1.0}, 0.8, {0.0, 0.0, cplx(1.0), 0.0});
    const PositionWaveFunction f = position_wavefunction(s);
    const ProbabilityDensity p = probability_density(f);
    CHECK(std::abs(p.chirality_minus - 1.0) < 1e-12);
    CHECK(std::abs(p.helicity_plus - 1.0) < 1e-12);
}

TEST_CASE("Schrodinger residual is small for a random packet") {
    const GridSpec g{16, 2.0 * pi};
    const PhotonState s = gaussian_packet(g, {0.3, 0.0, 0.0}, {2.0, 1.0, 2.0}, 0.8, {cplx(0.5), cplx(0.2, 0.1), cplx(0.0, 0.4), 0.3},
                                          Vec3{0.0, 0.6, 0.8});
    CHECK(schrodinger_step_check(s, 1e-4, Vec3{0.0, 0.6, 0.8}) < 1e-5);
}

TEST_CASE("LP convolution oracle agrees with the k^{-1/2} multiplier") {
    const GridSpec g{32, 2.0 * pi};
    const PhotonState s = gaussian_packet(g, {0.2, -0.1, 0.3}, {4.0, 3.0, 0.0}, 0.9, {cplx(1.0), 0.0, 0.0, 0.0});
    const auto [E, B] = fields_from_state(s);
    const SpectralField rs = rs_wavefunction(E, B, 1, 1);
    const auto lp = samples(lp_wavefunction(rs));
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < g.size(); i += 97) at.push_back(i);
    const auto o = lp_convolution_oracle(rs, at);
    double mx = 0.0, err = 0.0;
    for (const auto& v : lp)
        for (const auto& c : v) mx = std::max(mx, std::abs(c));
    for (std::size_t p = 0; p < at.size(); ++p)
        for (int q = 0; q < 3; ++q) err = std::max(err, std::abs(o[p][q] - lp[at[p]][q]));
    CHECK(err < 1e-2 * mx);
}
