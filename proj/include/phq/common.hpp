#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace phq {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<cplx, 3>;
using CMat3 = std::array<std::array<cplx, 3>, 3>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Argument outside the domain of a function (poles, k = 0, axis parallel to k, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Series, continued fraction or extrapolation failed to reach its tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation point on a divergence locus (theta = pi/2 plane, r = 0, light cone).
struct SingularPoint : std::domain_error {
    using std::domain_error::domain_error;
};

// Grids, lengths or other shapes that do not match.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// u^dagger v
inline cplx cdot(const CVec3& u, const CVec3& v) {
    return std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1] + std::conj(u[2]) * v[2];
}
inline double cnorm2(const CVec3& u) { return std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2]); }

}  // namespace phq
