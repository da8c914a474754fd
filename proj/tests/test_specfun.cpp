#include <doctest.h>

#include <cmath>

#include "phq/specfun.hpp"

using namespace phq;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

// Reference values: tools/reference_values.py (mpmath, 40 digits).
TEST_CASE("gamma and digamma against high-precision values") {
    CHECK(rel(phq::gamma(0.1), 9.5135076986687318363) < 1e-13);
    CHECK(rel(phq::gamma(5.5), 52.342777784553520181) < 1e-13);
    CHECK(rel(phq::gamma(-1.5), 2.3632718012073547031) < 1e-13);
    CHECK(rel(phq::gamma(0.25), 3.6256099082219083119) < 1e-14);
    CHECK(rel(phq::digamma(0.4), -2.5613845445851161457) < 1e-13);
    CHECK_THROWS_AS(phq::gamma(-2.0), DomainError);
    CHECK_THROWS_AS(phq::gamma(0.0), DomainError);
    CHECK(phq::rgamma(-3.0) == 0.0);
}

TEST_CASE("gamma recurrence") {
    for (double x = -3.7; x < 12.0; x += 0.37) {
        if (std::abs(x - std::round(x)) < 1e-9) continue;
        CHECK(rel(phq::gamma(x + 1.0), x * phq::gamma(x)) < 1e-13);
    }
}

TEST_CASE("bessel J against high-precision values") {
    CHECK(rel(bessel_j(0, 1.0), 0.76519768655796655145) < 1e-13);
    CHECK(rel(bessel_j(1, 2.5), 0.49709410246427403801) < 1e-13);
    CHECK(rel(bessel_j(2, 7.3), -0.26559491188343688293) < 1e-12);
    CHECK(rel(bessel_j(1, 30.0), -0.11875106261662293652) < 1e-11);
    CHECK(rel(bessel_j(0, 12.0), 0.047689310796833536624) < 1e-11);
    CHECK(rel(bessel_j(2, 40.0), -0.0010649746823580395933) < 1e-9);
    CHECK_THROWS_AS(bessel_j(3, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0, -1.0), DomainError);
}

TEST_CASE("bessel J continuity across the method boundaries") {
    // The jump across x = 8 and x = 25 must match the slope, J0' = -J1, J1' = J0 - J1/x, J2' = J1 - 2 J2/x.
    for (double x : {8.0, 25.0}) {
        const double d = 1e-7 * x;
        const double j0 = bessel_j(0, x), j1 = bessel_j(1, x), j2 = bessel_j(2, x);
        const double slope[3] = {-j1, j0 - j1 / x, j1 - 2.0 * j2 / x};
        for (int n = 0; n <= 2; ++n)
            CHECK(std::abs(bessel_j(n, x + d) - bessel_j(n, x - d) - 2.0 * d * slope[n]) < 1e-12);
    }
}

TEST_CASE("bessel K against high-precision values") {
    CHECK(rel(bessel_k(0.25, 0.5), 0.96031632493188602295) < 1e-12);
    CHECK(rel(bessel_k(1.25, 1.0), 0.73114518792021139091) < 1e-12);
    CHECK(rel(bessel_k(0.75, 10.0), 0.000018263751436705312794) < 1e-12);
    CHECK(rel(bessel_k(1.25, 0.001), 6061.4727744889875407) < 1e-12);
    CHECK_THROWS_AS(bessel_k(0.5, 0.0), DomainError);
}

TEST_CASE("bessel K order recurrence") {
    for (double x : {0.3, 1.9, 2.1, 7.0})
        CHECK(rel(bessel_k(2.25, x), bessel_k(0.25, x) + 2.5 / x * bessel_k(1.25, x)) < 1e-12);
}

TEST_CASE("2F1 against high-precision values") {
    CHECK(rel(hyp2f1(0.25, 0.5, 1.0, 0.9), 1.2560677000495326915) < 1e-12);
    CHECK(rel(hyp2f1(1.25, 1.5, 2.0, 0.95), 13.218062675379746986) < 1e-12);
    CHECK(rel(hyp2f1(0.5, 0.75, 1.0, 0.999), 8.6254798812895247735) < 1e-12);
    CHECK(rel(hyp2f1(2.25, 2.5, 3.0, 0.8), 19.138795054467098241) < 1e-12);
    CHECK(rel(hyp2f1(3.25, 3.5, 4.0, 0.3), 2.7484371858961186446) < 1e-13);
}

TEST_CASE("2F1 logarithmic cases") {
    // c - a - b = 0, 1 and 1 again near z = 1
    CHECK(rel(hyp2f1(0.5, 0.5, 1.0, 0.9), 1.6412644143423707333) < 1e-12);
    CHECK(rel(hyp2f1(1.0, 1.0, 3.0, 0.9), 1.6536826930878899546) < 1e-12);
    CHECK(rel(hyp2f1(0.5, 0.5, 2.0, 0.9999), 1.2729535764534028964) < 1e-12);
}

TEST_CASE("2F1 with separate 1 - z keeps precision at the branch point") {
    const double t = 1e-9;
    const double z = std::sin(0.5 * 3.141592653589793 - t);
    // z^2 rounds to 1 but w = sin^2 t is accurate; c - a - b = 1/4 > 0, so the value tends to
    // Gamma(1) Gamma(1/4) / (Gamma(3/4) Gamma(1/2)) with a w^{1/4} correction.
    const double v = hyp2f1(0.25, 0.5, 1.0, z * z, std::pow(std::sin(t), 2));
    const double lim = phq::gamma(0.25) / (phq::gamma(0.75) * std::sqrt(3.141592653589793));
    CHECK(std::abs(v / lim - 1.0) < 1e-3);
    CHECK(v < lim);
    CHECK_THROWS_AS(hyp2f1(0.25, 0.5, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(hyp2f1(0.25, 0.5, 1.0, -0.1), DomainError);
    CHECK_THROWS_AS(hyp2f1(0.25, 0.5, 0.0, 0.5), DomainError);
}

TEST_CASE("2F1 is symmetric in a and b") {
    for (double z : {0.1, 0.69, 0.71, 0.99}) CHECK(rel(hyp2f1(0.25, 1.5, 2.0, z), hyp2f1(1.5, 0.25, 2.0, z)) < 1e-13);
}

TEST_CASE("1F1 against high-precision values") {
    CHECK(rel(hyp1f1(2.75, 3.0, -2.0), 0.16780405546696090084) < 1e-12);
    CHECK(rel(hyp1f1(-1.25, 1.0, 3.7), -2.0059184146217693393) < 1e-12);
    CHECK(rel(hyp1f1(1.75, 1.0, -4.0), -0.066299660004509190259) < 1e-11);
    CHECK(rel(laguerre_l(-1.75, -4.0), -0.066299660004509190259) < 1e-11);
}
