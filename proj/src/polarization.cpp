#include "phq/polarization.hpp"

namespace phq {

namespace {

void require_nonzero(const KVector& k) {
    if (!(k.k > 0.0)) throw DomainError("polarization: k = 0 has no polarization basis");
}

void require_sigma(int sigma) {
    if (sigma != 1 && sigma != -1) throw DomainError("polarization: sigma must be +1 or -1");
}

bool parallel(const KVector& k, const Vec3& m) { return norm(cross(k.vec(), m)) <= tol_parallel * k.k; }

}  // namespace

CMat3 helicity_matrix(const KVector& k) {
    require_nonzero(k);
    const cplx f = I / k.k;
    CMat3 h{};
    h[0] = {0.0, -f * k.k3, f * k.k2};
    h[1] = {f * k.k3, 0.0, -f * k.k1};
    h[2] = {-f * k.k2, f * k.k1, 0.0};
    return h;
}

CVec3 apply(const CMat3& a, const CVec3& v) {
    CVec3 r{};
    for (int i = 0; i < 3; ++i) r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
    return r;
}

CVec3 u_canonical(const KVector& k, int sigma) {
    require_nonzero(k);
    require_sigma(sigma);
    const double q = k.k1 * k.k1 + k.k2 * k.k2;
    if (q == 0.0) {
        // On the k3 axis; the helicity of (1, i sigma, 0) flips with the sign of k3.
        const double sg = k.k3 > 0.0 ? 1.0 : -1.0;
        const double s = sg / std::sqrt(2.0);
        return {s, I * (sigma * sg * s), 0.0};
    }
    const double d = k.k * std::sqrt(2.0 * q);
    return {cplx(-k.k1 * k.k3, sigma * k.k * k.k2) / d, cplx(-k.k2 * k.k3, -sigma * k.k * k.k1) / d, q / d};
}

CVec3 u_general(const KVector& k, int sigma, const Vec3& m) {
    require_nonzero(k);
    require_sigma(sigma);
    if (parallel(k, m)) throw DomainError("u_general: axis m is parallel to k");
    // k^2 m - (k.m) k and k^2 - (k.m)^2 via cross products; the differences cancel near k || m.
    const Vec3 kv = k.vec();
    const Vec3 kxm = cross(kv, m);
    const Vec3 re = cross(kv, cross(m, kv));
    const double d = k.k * std::sqrt(2.0) * norm(kxm);
    CVec3 u{};
    for (int i = 0; i < 3; ++i) u[i] = cplx(re[i], sigma * k.k * kxm[i]) / d;
    return u;
}

cplx phase_factor(const KVector& k, int sigma, const Vec3& m) {
    require_nonzero(k);
    require_sigma(sigma);
    const double q = k.k1 * k.k1 + k.k2 * k.k2;
    if (q <= (tol_parallel * k.k) * (tol_parallel * k.k)) throw DomainError("phase_factor: k is parallel to e3");
    if (parallel(k, m)) throw DomainError("phase_factor: axis m is parallel to k");
    const Vec3 kv = k.vec();
    const Vec3 kxm = cross(kv, m);
    const cplx z(cross(kv, cross(m, kv))[2], sigma * k.k * kxm[2]);
    return z / (std::sqrt(q) * norm(kxm));
}

Vec3 phase_gradient(const KVector& k, int sigma, const Vec3& m) {
    require_nonzero(k);
    require_sigma(sigma);
    const Vec3 kv = k.vec();
    const double km = dot(kv, m);
    const double cz = k.k1 * m[1] - k.k2 * m[0];
    const cplx z(k.k * k.k * m[2] - k.k3 * km, sigma * k.k * cz);
    if (std::abs(z) == 0.0) throw DomainError("phase_gradient: degenerate branch");
    Vec3 g{};
    const Vec3 dcz{m[1], -m[0], 0.0};
    for (int j = 0; j < 3; ++j) {
        const double re = 2.0 * kv[j] * m[2] - (j == 2 ? km : 0.0) - k.k3 * m[j];
        const double im = sigma * ((kv[j] / k.k) * cz + k.k * dcz[j]);
        g[j] = std::imag(cplx(re, im) / z);
    }
    return g;
}

std::array<CVec3, 3> du_general(const KVector& k, int sigma, const Vec3& m) {
    require_nonzero(k);
    require_sigma(sigma);
    if (parallel(k, m)) throw DomainError("du_general: axis m is parallel to k");
    const Vec3 kv = k.vec();
    const double km = dot(kv, m);
    const Vec3 kxm = cross(kv, m);
    const double q = k.k * k.k - km * km;
    const double sq = std::sqrt(2.0 * q);
    const double d = k.k * sq;
    CVec3 w{};
    for (int i = 0; i < 3; ++i) w[i] = cplx(k.k * k.k * m[i] - km * kv[i], sigma * k.k * kxm[i]);
    std::array<CVec3, 3> out{};
    for (int j = 0; j < 3; ++j) {
        Vec3 ej{0.0, 0.0, 0.0};
        ej[j] = 1.0;
        const Vec3 ejxm = cross(ej, m);
        const double dq = 2.0 * kv[j] - 2.0 * km * m[j];
        const double dd = (kv[j] / k.k) * sq + k.k * dq / sq;
        for (int i = 0; i < 3; ++i) {
            const cplx dw(2.0 * kv[j] * m[i] - m[j] * kv[i] - km * ej[i],
                          sigma * ((kv[j] / k.k) * kxm[i] + k.k * ejxm[i]));
            out[j][i] = dw / d - w[i] * dd / (d * d);
        }
    }
    return out;
}

CVec3 u_axis(const KVector& k, int sigma, const Vec3& m) {
    if (m == e_axis3 || parallel(k, m)) return u_canonical(k, sigma);
    return u_general(k, sigma, m);
}

PolarizationBasis polarization_basis(const KVector& k, const Vec3& m) {
    require_nonzero(k);
    PolarizationBasis b;
    b.m = m;
    b.u_plus = u_axis(k, 1, m);
    b.u_minus = u_axis(k, -1, m);
    b.u_zero = {k.k1 / k.k, k.k2 / k.k, k.k3 / k.k};
    return b;
}

}  // namespace phq
