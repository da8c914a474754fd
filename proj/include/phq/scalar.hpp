#pragma once

#include <utility>
#include <vector>

#include "phq/spectral.hpp"

namespace phq {

// Localized scalar state centred at y with sign of energy eps, evaluated at x, x0 - x0_0 = delta_x0.
struct ScalarLocalizedQuery {
    double mass = 0.0;  // inverse length, m c / hbar
    int epsilon = 1;
    Vec3 center{0.0, 0.0, 0.0};
    Vec3 point{0.0, 0.0, 1.0};
    double delta_x0 = 0.0;
    double ell = 1.0;

    void validate() const;
    double r() const;
};

// (alpha0 / sqrt(ell)) (m/r)^{5/4} K_{5/4}(m r), alpha0 = [2^{3/4} pi^{3/2} Gamma(1/4)]^{-1}; delta_x0 = 0 only.
double scalar_localized_massive(const ScalarLocalizedQuery& q);

// (1 / (4 (2 pi)^{3/2} sqrt(ell) r)) sum_g (1 + i g eps) / (r - g delta_x0)^{3/2}. Outside the light
// cone r - g delta_x0 < 0 takes arg pi sgn(eps delta_x0), the branch reached by the regularized k-integral.
// Throws SingularPoint on the light cone.
cplx scalar_localized_massless(const ScalarLocalizedQuery& q);

struct ScalarOracleOptions {
    double eta_coeff = 0.005;  // eta0 = eta_coeff * r
    int order = 24;
    double max_rel_residual = 1e-4;
};
struct ScalarOracleReport {
    cplx value = 0.0;
    double rel_residual = 0.0;
};

// (1 / (2 pi^2 sqrt(ell) r)) int_0^inf k sin(r k) e^{-i eps delta_x0 w} / w^{1/2} dk, w = (k^2 + m^2)^{1/2},
// Abel-regularized with Richardson extrapolation in eta.
ScalarOracleReport scalar_localized_oracle(const ScalarLocalizedQuery& q, const ScalarOracleOptions& opt = {});

// Grid state (psi, psidot) of mass m.
struct ScalarState {
    ScalarField psi;
    ScalarField psidot;
    double mass = 0.0;
};

// ((psi, psi)) = (ell/2) [<psi|D^{1/2} psi> + <psidot|D^{-1/2} psidot>], D = -laplacian + m^2.
double scalar_norm(const ScalarState& s);

// rho = [|D^{1/4} psi|^2 + |D^{-1/4} psidot|^2] / normalization, sampled on the grid.
// The zero mode is dropped from D^{-1/4} when m = 0. Throws DomainError on a zero state.
std::vector<double> scalar_probability_density(const ScalarState& s);

// Exact evolution of every mode with w = (k^2 + m^2)^{1/2}.
ScalarState scalar_evolve(const ScalarState& s, double delta_x0);

// phi_k e^{-i eps w x0} at its reference time: coefficient 1 at k, psidot = -i eps w psi.
ScalarState scalar_plane_wave(const GridSpec& g, std::size_t k_index, int epsilon, double mass = 0.0,
                              double ell = 1.0);

ScalarState add(const ScalarState& a, const ScalarState& b, cplx cb = 1.0);

}  // namespace phq
