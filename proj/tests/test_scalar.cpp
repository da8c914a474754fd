#include <doctest.h>

#include "phq/scalar.hpp"

using namespace phq;

namespace {

ScalarLocalizedQuery at(double r, double delta = 0.0, int eps = 1, double mass = 0.0) {
    ScalarLocalizedQuery q;
    q.point = {0.0, 0.0, r};
    q.delta_x0 = delta;
    q.epsilon = eps;
    q.mass = mass;
    return q;
}

bool near(cplx a, double re, double im, double tol) { return std::abs(a - cplx(re, im)) <= tol * std::abs(cplx(re, im)); }

}  // namespace

// tools/reference_values.py: the Abel-regularized k-integral in closed form at 40 digits.
TEST_CASE("massless localized state inside and outside the light cone") {
    CHECK(near(scalar_localized_massless(at(1.0, 0.5, 1)), 0.053537169973121233038, 0.036256391089462047806, 1e-13));
    CHECK(near(scalar_localized_massless(at(1.0, 0.5, -1)), 0.053537169973121233038, -0.036256391089462047806, 1e-13));
    CHECK(near(scalar_localized_massless(at(1.0, 2.0, 1)), -0.012818570000355065824, 0.012818570000355065824, 1e-13));
    CHECK(near(scalar_localized_massless(at(1.0, 2.0, -1)), -0.012818570000355065824, -0.012818570000355065824, 1e-13));
    CHECK(near(scalar_localized_massless(at(1.3, -3.5, 1)), -0.0025808180192442966725, -0.0025808180192442966725, 1e-13));
    CHECK(near(scalar_localized_massless(at(2.0)), 0.0056120975664114550528, 0.0, 1e-14));
}

TEST_CASE("massive localized state against high-precision values") {
    CHECK(std::abs(scalar_localized_massive(at(1.0, 0.0, 1, 1.0)) / 0.021534026599429047571 - 1.0) < 1e-12);
    CHECK(std::abs(scalar_localized_massive(at(0.7, 0.0, 1, 2.0)) / 0.040838305361120353314 - 1.0) < 1e-12);
    CHECK(std::abs(scalar_localized_massive(at(3.0, 0.0, 1, 0.5)) / 0.0010042469105685602638 - 1.0) < 1e-12);
}

TEST_CASE("massive form reduces to the massless one as m r -> 0") {
    const double m0 = scalar_localized_massless(at(1.0)).real();
    double prev = 1.0;
    for (double m : {1e-2, 1e-3, 1e-4}) {
        const double e = std::abs(scalar_localized_massive(at(1.0, 0.0, 1, m)) / m0 - 1.0);
        CHECK(e < prev);
        prev = e;
    }
    CHECK(prev < 1e-7);
}

TEST_CASE("oracle reproduces both closed forms") {
    for (double d : {0.5, -0.3, 2.0}) {
        const auto q = at(1.0, d, -1);
        const cplx c = scalar_localized_massless(q);
        CHECK(std::abs(scalar_localized_oracle(q).value - c) < 1e-4 * std::abs(c));
    }
    const auto q = at(1.5, 0.0, 1, 0.8);
    CHECK(std::abs(scalar_localized_oracle(q).value.real() / scalar_localized_massive(q) - 1.0) < 1e-4);
}

TEST_CASE("invalid scalar queries") {
    CHECK_THROWS_AS(scalar_localized_massless(at(1.0, 1.0)), SingularPoint);
    CHECK_THROWS_AS(scalar_localized_massless(at(0.0)), SingularPoint);
    CHECK_THROWS_AS(scalar_localized_massive(at(1.0, 0.2, 1, 1.0)), DomainError);
    CHECK_THROWS_AS(scalar_localized_massive(at(1.0)), DomainError);
    CHECK_THROWS_AS(scalar_localized_massless(at(1.0, 0.0, 0)), DomainError);
}

TEST_CASE("plane wave density is uniform and a two-mode beat oscillates along the difference wavevector") {
    const GridSpec g{16, 2.0 * pi};
    const ScalarState a = scalar_plane_wave(g, g.index_of_freq(2, 0, 0), 1, 0.3);
    for (double v : scalar_probability_density(a)) CHECK(std::abs(v * g.volume() - 1.0) < 1e-12);
    const ScalarState b = add(a, scalar_plane_wave(g, g.index_of_freq(-1, 0, 0), 1, 0.3));
    const auto rho = scalar_probability_density(b);
    double tot = 0.0, spread = 0.0, lo = 1e300, hi = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        tot += rho[i];
        const int i1 = static_cast<int>(i / (16 * 16));
        spread = std::max(spread, std::abs(rho[i] - rho[g.index(i1, 0, 0)]));
        lo = std::min(lo, rho[i]);
        hi = std::max(hi, rho[i]);
    }
    CHECK(std::abs(tot * g.cell_volume() - 1.0) < 1e-10);
    CHECK(spread < 1e-14);  // depends on x1 only
    CHECK(hi - lo > 0.1 * hi);
}

TEST_CASE("evolution preserves the norm and returns after one period") {
    const GridSpec g{16, 2.0 * pi};
    const ScalarState s = add(scalar_plane_wave(g, g.index_of_freq(0, 3, 4), 1), scalar_plane_wave(g, g.index_of_freq(0, 0, 5), -1),
                              cplx(0.2, 0.7));
    const ScalarState t = scalar_evolve(s, 2.0 * pi / 5.0);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(t.psi.coeffs[i] - s.psi.coeffs[i]) < 1e-12);
    CHECK(std::abs(scalar_norm(scalar_evolve(s, 0.31)) - scalar_norm(s)) < 1e-12 * scalar_norm(s));
}
