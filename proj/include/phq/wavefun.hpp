#pragma once

#include <vector>

#include "phq/spectral.hpp"

namespace phq {

// f(eps, sigma, x) on the grid, channel order as in Amplitudes.
struct PositionWaveFunction {
    GridSpec grid;
    double ell = 1.0;
    Vec3 axis = e_axis3;
    std::array<std::vector<cplx>, 4> values;

    std::vector<cplx>& operator()(int eps, int sigma) { return values[Amplitudes::channel(eps, sigma)]; }
    const std::vector<cplx>& operator()(int eps, int sigma) const { return values[Amplitudes::channel(eps, sigma)]; }
};

struct ProbabilityDensity {
    GridSpec grid;
    std::array<std::vector<double>, 4> rho;
    bool normalized = false;
    double chirality_plus = 0.0, chirality_minus = 0.0;  // sum over sigma and x
    double helicity_plus = 0.0, helicity_minus = 0.0;    // sum over eps and x
};

// psi_RS = eps E + i sigma B.
SpectralField rs_wavefunction(const SpectralField& E, const SpectralField& B, int epsilon, int sigma);
// psi_LP = k^{-1/2} psi_RS.
SpectralField lp_wavefunction(const SpectralField& rs);

// psi_LP at the grid points `at` (storage indices) by direct summation against
// pi / (2 pi |x - x'|)^{5/2} over the nearest periodic image of each source point.
// Far cells use point values; the origin and its six neighbours carry weights that
// integrate r^{-5/2} and r^{-5/2} x_1^2 exactly over the central 5^3 cells. The
// truncation at the box images limits agreement to about 1% for |k| L / 2 pi in [3, n/4].
std::vector<CVec3> lp_convolution_oracle(const SpectralField& rs, const std::vector<std::size_t>& at);

// (A, Adot) with the given fields: Adot = -E, A = i k x B / k^2.
PhotonState state_from_fields(const SpectralField& E, const SpectralField& B);

// f = -(i sqrt(ell)/2) k^{-1/2} u_sigma^dagger (eps E + i sigma B), u_sigma relative to `axis`.
// Throws DomainError unless E and B are transverse to 1e-10.
PositionWaveFunction position_wavefunction(const SpectralField& E, const SpectralField& B,
                                           const Vec3& axis = e_axis3);
PositionWaveFunction position_wavefunction(const PhotonState& s, const Vec3& axis = e_axis3);

// sum_{eps,sigma} sum_x |f|^2 dV
double wavefunction_norm(const PositionWaveFunction& f);

// rho = |f|^2 / norm and the chirality/helicity marginals. Throws DomainError on a zero state.
ProbabilityDensity probability_density(const PositionWaveFunction& f);

// ||i (f(x0 + d) - f(x0 - d)) / (2d) - eps |k| f|| / ||f||, f from the evolved fields.
double schrodinger_step_check(const PhotonState& s, double delta_x0, const Vec3& axis = e_axis3);

// Gaussian profile A = 0, E = E0 exp(-alpha r^2/2) (-x2, x1, 0), built from its continuum Fourier transform.
SpectralField gaussian_example_field(const GridSpec& g, double alpha, cplx E0, double ell = 1.0);

// Closed-form f along the symmetry axis x = r e3 (the true f is not spherically symmetric).
cplx gaussian_example_wavefunction(double alpha, cplx E0, double r, int epsilon, int sigma, double ell = 1.0);
// The same value from the 1D integral over k with the angular factor pi (J0 + J2) / 2.
cplx gaussian_example_quadrature(double alpha, cplx E0, double r, int epsilon, int sigma, double ell = 1.0);
// ((A, A)) of the Gaussian state: (2 pi / 3) ell |E0|^2 alpha^{-3}.
double gaussian_example_norm(double alpha, cplx E0, double ell = 1.0);

// Figure profile: |f(r e3)|^2 rescaled so that 4 pi int r^2 rho dr = 1.
struct GaussianRhoProfile {
    double alpha = 1.0;
    std::vector<double> r, rho;
    double first_moment = 0.0;  // 4 pi int r^3 rho dr
    double radial_integral = 0.0;  // 4 pi int r^2 rho dr over [0, inf)
};
GaussianRhoProfile gaussian_rho_profile(double alpha, const std::vector<double>& r);

namespace detail {
// The closed form exactly as printed (differs from the on-axis value by a factor i).
double gaussian_example_printed(double alpha, double E0, double r, int epsilon, int sigma, double ell = 1.0);
}  // namespace detail

}  // namespace phq
