#include <doctest.h>

#include <random>

#include "phq/polarization.hpp"

using namespace phq;

namespace {

double helicity_defect(const KVector& k, const CVec3& u, int sigma) {
    const CVec3 hu = apply(helicity_matrix(k), u);
    double d = 0.0;
    for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(hu[i] - double(sigma) * u[i]));
    return d;
}

}  // namespace

TEST_CASE("canonical basis on the k3 axis has the right helicity for both signs of k3") {
    for (double k3 : {2.0, -2.0})
        for (int sigma : {1, -1}) {
            const KVector k(0.0, 0.0, k3);
            CHECK(helicity_defect(k, u_canonical(k, sigma), sigma) < 1e-15);
        }
}

TEST_CASE("canonical basis is continuous onto the k3 axis up to a phase") {
    for (double k3 : {1.0, -1.0})
        for (int sigma : {1, -1}) {
            const CVec3 on = u_canonical(KVector(0.0, 0.0, k3), sigma);
            const CVec3 near = u_canonical(KVector(1e-7, 0.0, k3), sigma);
            CHECK(std::abs(std::abs(cdot(on, near)) - 1.0) < 1e-10);
        }
}

TEST_CASE("general axis basis stays accurate when k is nearly parallel to m") {
    const Vec3 m{0.0, 0.6, 0.8};
    for (double tilt : {1e-3, 1e-5, 1e-7}) {
        const KVector k(tilt, 0.6 * 3.0, 0.8 * 3.0);
        for (int sigma : {1, -1}) {
            const CVec3 u = u_general(k, sigma, m);
            CHECK(std::abs(cnorm2(u) - 1.0) < 1e-14);
            CHECK(helicity_defect(k, u, sigma) < 1e-14);
            CHECK(std::abs(std::abs(phase_factor(k, sigma, m)) - 1.0) < 1e-14);
        }
    }
}

TEST_CASE("u_axis falls back to the canonical basis when m is parallel to k") {
    const KVector k(0.0, 3.0, 4.0);
    const Vec3 m{0.0, 0.6, 0.8};
    CHECK_THROWS_AS(u_general(k, 1, m), DomainError);
    const CVec3 a = u_axis(k, 1, m), b = u_canonical(k, 1);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(a[i] - b[i]) == 0.0);
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(u_canonical(KVector(0.0, 0.0, 0.0), 1), DomainError);
    CHECK_THROWS_AS(u_canonical(KVector(1.0, 0.0, 0.0), 2), DomainError);
    CHECK_THROWS_AS(phase_factor(KVector(0.0, 0.0, 1.0), 1, Vec3{1.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("phase gradient matches a finite difference of the phase") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ud(-2.0, 2.0);
    const Vec3 m{0.48, -0.6, 0.64};
    for (int it = 0; it < 50; ++it) {
        const Vec3 kv{ud(rng), ud(rng), ud(rng)};
        for (int sigma : {1, -1}) {
            const Vec3 g = phase_gradient(KVector(kv), sigma, m);
            for (int j = 0; j < 3; ++j) {
                const double h = 1e-6;
                Vec3 a = kv, b = kv;
                a[j] += h;
                b[j] -= h;
                const cplx r = phase_factor(KVector(a), sigma, m) / phase_factor(KVector(b), sigma, m);
                CHECK(std::abs(std::arg(r) / (2.0 * h) - g[j]) < 1e-6 * (1.0 + std::abs(g[j])));
            }
        }
    }
}

TEST_CASE("derivative of the general basis matches a finite difference") {
    const Vec3 kv{0.7, -1.1, 0.4};
    const Vec3 m{0.0, 0.6, 0.8};
    const auto du = du_general(KVector(kv), 1, m);
    for (int j = 0; j < 3; ++j) {
        const double h = 1e-6;
        Vec3 a = kv, b = kv;
        a[j] += h;
        b[j] -= h;
        const CVec3 ua = u_general(KVector(a), 1, m), ub = u_general(KVector(b), 1, m);
        for (int i = 0; i < 3; ++i) CHECK(std::abs((ua[i] - ub[i]) / (2.0 * h) - du[j][i]) < 1e-8);
    }
}
