#include "phq/localized.hpp"

#include <functional>

#include "phq/quadrature.hpp"
#include "phq/specfun.hpp"

namespace phq {

void LocalizedQuery::validate() const {
    if (epsilon != 1 && epsilon != -1) throw DomainError("localized: epsilon must be +1 or -1");
    if (sigma != 1 && sigma != -1) throw DomainError("localized: sigma must be +1 or -1");
    if (!(ell > 0.0)) throw DomainError("localized: ell must be positive");
    if (std::abs(norm(axis) - 1.0) > 1e-12) throw DomainError("localized: axis must be a unit vector");
}

LocalFrame local_frame(const LocalizedQuery& q) {
    q.validate();
    LocalFrame f;
    f.e3 = q.axis;
    if (q.axis == e_axis3) {
        f.e1 = {1.0, 0.0, 0.0};
        f.e2 = {0.0, 1.0, 0.0};
    } else {
        const Vec3& m = q.axis;
        Vec3 t{0.0, 0.0, 0.0};
        int least = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(m[i]) < std::abs(m[least])) least = i;
        t[least] = 1.0;
        Vec3 e1 = cross(t, m);
        const double n1 = norm(e1);
        for (auto& v : e1) v /= n1;
        f.e1 = e1;
        f.e2 = cross(m, e1);
    }
    const Vec3 d{q.point[0] - q.center[0], q.point[1] - q.center[1], q.point[2] - q.center[2]};
    f.r = norm(d);
    if (!(f.r > 0.0)) throw SingularPoint("localized: the centre r = 0 is singular");
    const double l1 = dot(d, f.e1), l2 = dot(d, f.e2), l3 = dot(d, f.e3);
    f.theta = std::atan2(std::hypot(l1, l2), l3);
    f.phi = std::atan2(l2, l1);
    if (f.phi < 0.0) f.phi += 2.0 * pi;
    return f;
}

namespace {

bool divergent_profile(int which) { return which == 1 || which == 2 || which == 4 || which == 5 || which == 6; }

double F(double a, double b, double c, double s2, double c2) { return hyp2f1(a, b, c, s2, c2); }

// All six profiles from cos(theta) and sin(theta).
double t_value(int which, double c, double s) {
    const double c2 = c * c, s2 = s * s;
    const double cos2 = c2 - s2, sin2 = 2.0 * s * c;
    const double g14 = gamma(0.25), g34 = gamma(0.75);
    switch (which) {
        case 1: {
            const double pre = 5.0 * g14 / (64.0 * pi * g34);
            return pre * sin2 *
                   (F(0.25, 0.5, 1.0, s2, c2) - 0.5 * cos2 * F(1.25, 1.5, 2.0, s2, c2) -
                    (3.0 / 32.0) * sin2 * sin2 * F(2.25, 2.5, 3.0, s2, c2));
        }
        case 2: {
            const double pre = 3.0 * g34 * g34 / (16.0 * std::sqrt(2.0) * pi * pi);
            return pre * s * (-2.0 * F(0.5, 0.75, 1.0, s2, c2) + c2 * F(1.5, 1.75, 2.0, s2, c2));
        }
        case 3: {
            const double pre = g14 / (32.0 * pi * g34);
            return pre * ((4.0 - 5.0 * s2) * F(0.25, 0.5, 1.0, s2, c2) -
                          c2 * (5.0 * c2 - 3.0) * F(1.25, 1.5, 2.0, s2, c2) -
                          (15.0 / 8.0) * s2 * c2 * c2 * F(2.25, 2.5, 3.0, s2, c2));
        }
        case 4: {
            const double pre = 21.0 * g34 * g34 / (1024.0 * std::sqrt(2.0) * pi * pi);
            return pre * sin2 *
                   (32.0 * F(0.5, 0.75, 1.0, s2, c2) - 16.0 * cos2 * F(1.5, 1.75, 2.0, s2, c2) -
                    3.0 * sin2 * sin2 * F(2.5, 2.75, 3.0, s2, c2));
        }
        case 5: {
            const double pre = -5.0 * g14 * g14 / (1024.0 * std::sqrt(2.0) * pi * pi);
            return pre * s *
                   (16.0 * F(0.25, 0.5, 1.0, s2, c2) - 4.0 * (7.0 + 11.0 * cos2) * F(1.25, 1.5, 2.0, s2, c2) -
                    3.0 * c2 * (3.0 - 19.0 * cos2) * F(2.25, 2.5, 3.0, s2, c2) +
                    45.0 * c2 * c2 * s2 * F(3.25, 3.5, 4.0, s2, c2));
        }
        case 6: {
            const double pre = 3.0 * g34 / (128.0 * pi * g14);
            return pre * (4.0 * (1.0 + 7.0 * cos2) * F(0.5, 0.75, 1.0, s2, c2) +
                          4.0 * c2 * (3.0 - 7.0 * cos2) * F(1.5, 1.75, 2.0, s2, c2) -
                          21.0 * c2 * c2 * s2 * F(2.5, 2.75, 3.0, s2, c2));
        }
        default: throw DomainError("t_profile: which must be in 1..6");
    }
}

void check_theta(double theta) {
    if (!(theta >= 0.0 && theta <= pi)) throw DomainError("t_profile: theta must lie in [0, pi]");
}

void guard(int which, double theta) {
    if (divergent_profile(which) && std::abs(theta - 0.5 * pi) < tol_sing)
        throw SingularPoint("t_profile: profile diverges on the plane theta = pi/2");
}

struct Angles {
    double c, s, cphi, sphi;
};

Angles angles_of(const LocalFrame& f) {
    return {std::cos(f.theta), std::sin(f.theta), std::cos(f.phi), std::sin(f.phi)};
}

CVec3 to_global(const LocalFrame& f, const CVec3& v) {
    CVec3 g{};
    for (int i = 0; i < 3; ++i) g[i] = v[0] * f.e1[i] + v[1] * f.e2[i] + v[2] * f.e3[i];
    return g;
}

CVec3 assemble(const LocalFrame& f, int sigma, double ta, double tb, double tc, cplx pre) {
    const double cp = std::cos(f.phi), sp = std::sin(f.phi);
    const CVec3 local{pre * (cp * ta + sigma * sp * tb), pre * (sp * ta - sigma * cp * tb), pre * tc};
    return to_global(f, local);
}

}  // namespace

double t_profile_unchecked(int which, double theta) {
    check_theta(theta);
    return t_value(which, std::cos(theta), std::sin(theta));
}

double t_profile(int which, double theta) {
    check_theta(theta);
    guard(which, theta);
    return t_value(which, std::cos(theta), std::sin(theta));
}

CVec3 localized_vector_potential(const LocalizedQuery& q) {
    const LocalFrame f = local_frame(q);
    for (int w : {1, 2}) guard(w, f.theta);
    const Angles a = angles_of(f);
    const double t1 = t_value(1, a.c, a.s), t2 = t_value(2, a.c, a.s), t3 = t_value(3, a.c, a.s);
    return assemble(f, q.sigma, t1, t2, t3, 1.0 / (std::sqrt(q.ell) * std::pow(f.r, 2.5)));
}

CVec3 localized_electric_field(const LocalizedQuery& q) {
    const LocalFrame f = local_frame(q);
    for (int w : {4, 5, 6}) guard(w, f.theta);
    const Angles a = angles_of(f);
    const double t4 = t_value(4, a.c, a.s), t5 = t_value(5, a.c, a.s), t6 = t_value(6, a.c, a.s);
    return assemble(f, q.sigma, t4, t5, t6, I * (q.epsilon / (std::sqrt(q.ell) * std::pow(f.r, 3.5))));
}

CVec3 localized_magnetic_field(const LocalizedQuery& q) {
    CVec3 e = localized_electric_field(q);
    for (auto& v : e) v *= -I * static_cast<double>(q.epsilon * q.sigma);
    return e;
}

double localized_energy_density(const LocalizedQuery& q) {
    const LocalFrame f = local_frame(q);
    for (int w : {4, 5, 6}) guard(w, f.theta);
    const Angles a = angles_of(f);
    const double t4 = t_value(4, a.c, a.s), t5 = t_value(5, a.c, a.s), t6 = t_value(6, a.c, a.s);
    return (t4 * t4 + t5 * t5 + t6 * t6) / (4.0 * pi * q.ell * std::pow(f.r, 7.0));
}

Vec3 poynting_from_field(const CVec3& E, int epsilon, int sigma) {
    const CVec3 Ec{std::conj(E[0]), std::conj(E[1]), std::conj(E[2])};
    const CVec3 x{E[1] * Ec[2] - E[2] * Ec[1], E[2] * Ec[0] - E[0] * Ec[2], E[0] * Ec[1] - E[1] * Ec[0]};
    const cplx pre = I * static_cast<double>(epsilon * sigma) / (8.0 * pi);
    return {std::real(pre * x[0]), std::real(pre * x[1]), std::real(pre * x[2])};
}

Vec3 localized_poynting(const LocalizedQuery& q) {
    return poynting_from_field(localized_electric_field(q), q.epsilon, q.sigma);
}

double j_minus_closed(double r, double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    return gamma(0.25) * hyp2f1(0.25, 0.5, 1.0, s * s, c * c) / (std::sqrt(2.0) * gamma(0.75) * std::sqrt(r));
}

double j_plus_closed(double r, double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    return std::sqrt(2.0) * gamma(0.75) * hyp2f1(0.75, 0.5, 1.0, s * s, c * c) / (gamma(0.25) * std::pow(r, 1.5));
}

namespace {

// Components: 0 Jm, 1 Jp, 2 Xm, 3 Yp, 4 Lm, 5 Xp, 6 Y32, 7 Lp, where
// X = d_rho d_r3 J, Y = d_rho J, L = (d_rho^2 + rho^{-1} d_rho) J, and the
// suffix gives the power of k (m: -1/2, p: +1/2, 32: +3/2).
using Vec8 = std::array<double, 8>;

Vec8 integrand(double k, double rho, double r3) {
    const double r = std::hypot(rho, r3);
    const double a = 0.5 * (r + r3), b = 0.5 * (r - r3);
    const double u = a * k, v = b * k;
    const double F0 = bessel_j(0, u), F1 = bessel_j(1, u);
    const double G0 = bessel_j(0, v), G1 = bessel_j(1, v);
    const double F1u = u < 1e-4 ? 0.5 - u * u / 16.0 : F1 / u;
    const double G1v = v < 1e-4 ? 0.5 - v * v / 16.0 : G1 / v;
    const double Fp = -F1, Gp = -G1;
    const double Fpp = -F0 + F1u, Gpp = -G0 + G1v;
    const double P = F0 * G0;
    const double S1 = Fp * G0 + F0 * Gp;
    const double a_rho = rho / (2.0 * r);
    const double a_rhorho = r3 * r3 / (2.0 * r * r * r);
    const double a_rhor3 = -rho * r3 / (2.0 * r * r * r);
    const double a_r3 = a / r, b_r3 = -b / r;
    const double P_rho = k * a_rho * S1;
    const double P_rhorho = k * a_rhorho * S1 + k * k * a_rho * a_rho * (Fpp * G0 + 2.0 * Fp * Gp + F0 * Gpp);
    const double P_rhor3 =
        k * a_rhor3 * S1 + k * k * a_rho * (a_r3 * (Fpp * G0 + Fp * Gp) + b_r3 * (Fp * Gp + F0 * Gpp));
    const double lap = P_rhorho + P_rho / rho;
    const double km = 1.0 / std::sqrt(k), kp = std::sqrt(k), k32 = k * kp;
    return {km * P, kp * P, km * P_rhor3, kp * P_rho, km * lap, kp * P_rhor3, k32 * P_rho, kp * lap};
}

Extrapolated<8> oracle_integrals(double rho, double r3, const OracleOptions& opt) {
    const double r = std::hypot(rho, r3);
    const double eta0 = opt.eta_coeff * std::min(r, std::abs(r3));
    if (!(eta0 > 0.0) || !(rho > 0.0)) throw SingularPoint("oracle: needs rho > 0 and r3 != 0");
    const double panel = pi / r;
    std::function<Vec8(double)> f = [rho, r3](double k) { return integrand(k, rho, r3); };
    std::function<Vec8(double)> at_eta = [&](double eta) { return abel_integral<8>(f, eta, panel, opt.order); };
    return richardson3<8>(at_eta, eta0);
}

double group_residual(const Extrapolated<8>& e, std::initializer_list<int> idx) {
    double scale = 0.0, res = 0.0;
    for (int i : idx) {
        scale = std::max(scale, std::abs(e.value[i]));
        res = std::max(res, e.residual[i]);
    }
    return scale > 0.0 ? res / scale : res;
}

void reject_singular_plane(const LocalFrame& f) {
    if (std::abs(f.theta - 0.5 * pi) < tol_sing) throw SingularPoint("oracle: too close to the plane theta = pi/2");
    if (f.theta == 0.0 || f.theta == pi) throw SingularPoint("oracle: the symmetry axis needs rho > 0");
}

constexpr double kFourier = 1.4142135623730951 / (8.0 * pi);  // sqrt(2) pi^2 / (2 pi)^3

}  // namespace

JIntegrals oracle_j_integrals(double r, double theta, const OracleOptions& opt) {
    const double rho = r * std::sin(theta), r3 = r * std::cos(theta);
    const auto e = oracle_integrals(rho, r3, opt);
    JIntegrals out{e.value[0], e.value[1], group_residual(e, {0, 1})};
    if (out.rel_residual > opt.max_rel_residual) throw NonConvergence("oracle: extrapolation residual too large");
    return out;
}

OracleReport oracle_vector_potential_report(const LocalizedQuery& q, const OracleOptions& opt) {
    const LocalFrame f = local_frame(q);
    reject_singular_plane(f);
    const double rho = f.r * std::sin(f.theta), r3 = f.r * std::cos(f.theta);
    const auto e = oracle_integrals(rho, r3, opt);
    OracleReport rep;
    rep.rel_residual = group_residual(e, {2, 3, 4});
    if (rep.rel_residual > opt.max_rel_residual) throw NonConvergence("oracle: extrapolation residual too large");
    rep.value = assemble(f, q.sigma, e.value[2], e.value[3], -e.value[4], kFourier / std::sqrt(q.ell));
    return rep;
}

OracleReport oracle_electric_field_report(const LocalizedQuery& q, const OracleOptions& opt) {
    const LocalFrame f = local_frame(q);
    reject_singular_plane(f);
    const double rho = f.r * std::sin(f.theta), r3 = f.r * std::cos(f.theta);
    const auto e = oracle_integrals(rho, r3, opt);
    OracleReport rep;
    rep.rel_residual = group_residual(e, {5, 6, 7});
    if (rep.rel_residual > opt.max_rel_residual) throw NonConvergence("oracle: extrapolation residual too large");
    rep.value = assemble(f, q.sigma, e.value[5], e.value[6], -e.value[7], I * (q.epsilon * kFourier / std::sqrt(q.ell)));
    return rep;
}

CVec3 oracle_vector_potential(const LocalizedQuery& q, const OracleOptions& opt) {
    return oracle_vector_potential_report(q, opt).value;
}

CVec3 oracle_electric_field(const LocalizedQuery& q, const OracleOptions& opt) {
    return oracle_electric_field_report(q, opt).value;
}

TProfileOracle oracle_t_profiles(double theta, const OracleOptions& opt) {
    LocalFrame f;
    f.theta = theta;
    reject_singular_plane(f);
    const auto e = oracle_integrals(std::sin(theta), std::cos(theta), opt);
    TProfileOracle out;
    out.t = {kFourier * e.value[2], kFourier * e.value[3], -kFourier * e.value[4],
             kFourier * e.value[5], kFourier * e.value[6], -kFourier * e.value[7]};
    out.rel_residual = std::max(group_residual(e, {2, 3, 4}), group_residual(e, {5, 6, 7}));
    if (out.rel_residual > opt.max_rel_residual) throw NonConvergence("oracle: extrapolation residual too large");
    return out;
}

namespace detail {

double t1_printed(double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    const double s2 = s * s, c2 = c * c;
    const double g54 = gamma(1.25);
    const double pre = 5.0 * g54 * g54 / (8.0 * std::sqrt(2.0) * pi * pi);
    return pre * 2.0 * s * c *
           (2.0 * F(0.25, 0.5, 1.0, s2, c2) - c2 * F(1.5, 2.25, 2.0, s2, c2) + s2 * F(2.5, 1.5, 2.0, s2, c2));
}

double t3_printed(double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    const double s2 = s * s, c2 = c * c, cos2 = c2 - s2;
    const double g14 = gamma(0.25);
    const double pre = g14 * g14 / (64.0 * pi * gamma(0.75));
    return pre * ((3.0 + 5.0 * cos2) * F(0.25, 0.5, 1.0, s2, c2) + c2 * (1.0 - 5.0 * cos2) * F(2.5, 1.5, 2.0, s2, c2) -
                  3.75 * F(4.5, 2.5, 3.0, s2, c2));
}

}  // namespace detail

}  // namespace phq
