#pragma once

#include "phq/common.hpp"

namespace phq {

struct KVector {
    double k1 = 0.0, k2 = 0.0, k3 = 0.0;
    double k = 0.0;  // cached magnitude

    KVector() = default;
    KVector(double a, double b, double c) : k1(a), k2(b), k3(c), k(std::sqrt(a * a + b * b + c * c)) {}
    explicit KVector(const Vec3& v) : KVector(v[0], v[1], v[2]) {}
    Vec3 vec() const { return {k1, k2, k3}; }
};

struct PolarizationBasis {
    CVec3 u_plus{};
    CVec3 u_minus{};
    Vec3 u_zero{};  // k / |k|
    Vec3 m{0.0, 0.0, 1.0};
};

inline constexpr Vec3 e_axis3{0.0, 0.0, 1.0};

// Relative tolerance on |k x m| / k below which the axis is treated as parallel to k.
inline constexpr double tol_parallel = 1e-8;

// h(k) = k^{-1} k.S, (S_j)_{ab} = -i eps_{jab}; h xi = i k x xi / |k|.
CMat3 helicity_matrix(const KVector& k);

// Canonical helicity eigenvector (symmetry axis e_3), with the sgn(k3) branch on k1 = k2 = 0.
CVec3 u_canonical(const KVector& k, int sigma);

// Helicity eigenvector relative to the unit axis m; requires |k x m| > tol_parallel k.
CVec3 u_general(const KVector& k, int sigma, const Vec3& m);

// e^{i phi}: u_general(k, sigma, m) = phase_factor * u_canonical(k, sigma).
cplx phase_factor(const KVector& k, int sigma, const Vec3& m);

// Gradient of phi with respect to k (the k-pointwise piece of the axis change).
Vec3 phase_gradient(const KVector& k, int sigma, const Vec3& m);

// d u_general / d k_j for j = 0,1,2 (analytic).
std::array<CVec3, 3> du_general(const KVector& k, int sigma, const Vec3& m);

// u_general, except where k is parallel to m, where the canonical vector is used.
CVec3 u_axis(const KVector& k, int sigma, const Vec3& m);

PolarizationBasis polarization_basis(const KVector& k, const Vec3& m = e_axis3);

CVec3 apply(const CMat3& a, const CVec3& v);

}  // namespace phq
