#pragma once

#include "phq/common.hpp"
#include "phq/polarization.hpp"

namespace phq {

// Localized photon state centred at y, evaluated at x0 = x0_0.
struct LocalizedQuery {
    int epsilon = 1;
    int sigma = 1;
    Vec3 center{0.0, 0.0, 0.0};
    Vec3 point{0.0, 0.0, 1.0};
    double ell = 1.0;
    Vec3 axis = e_axis3;  // symmetry axis m

    void validate() const;
};

// Spherical coordinates of x - y in a right-handed frame whose third axis is m.
struct LocalFrame {
    Vec3 e1, e2, e3;
    double r = 0.0, theta = 0.0, phi = 0.0;
};
LocalFrame local_frame(const LocalizedQuery& q);

inline constexpr double tol_sing = 1e-3;

// T_1..T_6 angular profiles. Throws SingularPoint for the profiles that
// diverge on the plane theta = pi/2 (1, 2, 4, 5, 6) within tol_sing.
double t_profile(int which, double theta);
// Same closed forms without the singular-plane guard (for probing divergence).
double t_profile_unchecked(int which, double theta);

// Vector potential (1/(sqrt(ell) r^{5/2})) [cos phi T1 + sigma sin phi T2, sin phi T1 - sigma cos phi T2, T3].
CVec3 localized_vector_potential(const LocalizedQuery& q);
// Electric field (i eps/(sqrt(ell) r^{7/2})) [.. T4, T5, T6 ..]; magnetic field B = -i eps sigma E.
CVec3 localized_electric_field(const LocalizedQuery& q);
CVec3 localized_magnetic_field(const LocalizedQuery& q);
// u = |E|^2 / (4 pi) and S = (i eps sigma / 8 pi) E x E^*.
double localized_energy_density(const LocalizedQuery& q);
Vec3 localized_poynting(const LocalizedQuery& q);
Vec3 poynting_from_field(const CVec3& E, int epsilon, int sigma);

// Regularized integrals J^- = int k^{-1/2} J0(ak) J0(bk) dk and J^+ (k^{1/2}),
// a, b = (r +- r3)/2, and their closed forms.
double j_minus_closed(double r, double theta);
double j_plus_closed(double r, double theta);

struct OracleOptions {
    double eta_coeff = 0.01;           // eta0 = eta_coeff * min(r, |r3|); then eta0/2, eta0/4
    int order = 24;                    // Gauss points per panel
    double max_rel_residual = 1e-4;    // NonConvergence above this
};

struct OracleReport {
    CVec3 value{};
    double rel_residual = 0.0;
};

struct JIntegrals {
    double j_minus = 0.0, j_plus = 0.0;
    double rel_residual = 0.0;
};
JIntegrals oracle_j_integrals(double r, double theta, const OracleOptions& opt = {});

OracleReport oracle_vector_potential_report(const LocalizedQuery& q, const OracleOptions& opt = {});
OracleReport oracle_electric_field_report(const LocalizedQuery& q, const OracleOptions& opt = {});
CVec3 oracle_vector_potential(const LocalizedQuery& q, const OracleOptions& opt = {});
CVec3 oracle_electric_field(const LocalizedQuery& q, const OracleOptions& opt = {});

// T_1..T_6 at r = 1 recovered from the oracle integrals (index 0..5).
struct TProfileOracle {
    std::array<double, 6> t{};
    double rel_residual = 0.0;
};
TProfileOracle oracle_t_profiles(double theta, const OracleOptions& opt = {});

namespace detail {
// T_1 and T_3 exactly as printed in the source text (kept for comparison only).
double t1_printed(double theta);
double t3_printed(double theta);
}  // namespace detail

}  // namespace phq
