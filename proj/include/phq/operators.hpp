#pragma once

#include <functional>
#include <vector>

#include "phq/spectral.hpp"

namespace phq {

enum class OpKind { chirality, helicity, momentum, hamiltonian, position };

struct OperatorHandle {
    OpKind kind = OpKind::chirality;
    int j = 0;               // component 0..2 for momentum/position
    Vec3 axis = e_axis3;     // position only
    double x0_ref = 0.0;     // position only

    void validate() const;
};

using StateMap = std::function<PhotonState(const PhotonState&)>;

// C: (A, Adot) -> (i k^{-1} Adot, -i k A); eps on amplitudes.
PhotonState apply_chirality(const PhotonState& s);
// Same operator through the amplitude representation.
PhotonState apply_chirality_amplitudes(const PhotonState& s);
// h(k) applied to A and Adot.
PhotonState apply_helicity(const PhotonState& s);
PhotonState apply_momentum(const PhotonState& s, int j);
// h = |P| C: (A, Adot) -> (i Adot, -i k^2 A).
PhotonState apply_hamiltonian(const PhotonState& s);

struct PositionDiagnostics {
    double outer_band_weight = 0.0;  // fraction of ((s,s)) in the outer 20% of the k-grid
    bool aliasing_warning = false;
};

inline constexpr double aliasing_threshold = 1e-6;

// Fraction of the norm carried by modes with some |frequency| > 0.8 n/2.
double outer_band_weight(const PhotonState& s);

// X_j^m at x0 = x0_ref: the position wave function (axis m) is multiplied by the
// sawtooth coordinate x_j. Equivalent to A -> W_{1/2} A, Adot -> W_{-1/2} Adot.
PhotonState apply_position(const PhotonState& s, int j, const Vec3& m = e_axis3, PositionDiagnostics* diag = nullptr);

// W_alpha F = sum_sigma u_sigma k^{-alpha} x_j k^{alpha} u_sigma^dagger F (axis m).
SpectralField position_kernel(const SpectralField& f, int j, const Vec3& m, double alpha);

// Induced action on E = -Adot and on B = i k x A (both equal W_{-1/2}).
SpectralField position_on_E(const SpectralField& E, int j, const Vec3& m = e_axis3);
SpectralField position_on_B(const SpectralField& B, int j, const Vec3& m = e_axis3);

PhotonState apply(const OperatorHandle& op, const PhotonState& s);

// Explicit closed forms, x_hat realized as sawtooth multiplication of Cartesian
// components. These agree with the maps above only up to grid discretization.
enum class PolarizationForm { circular, linear };

// (x_hat + i k_j/(2k^2) + shift * i k_j/k^2 - i sum_s (d_j u_s) u_s^dagger) F
SpectralField explicit_position(const SpectralField& f, int j, const Vec3& m, double shift = 0.0,
                                PolarizationForm form = PolarizationForm::circular);
// X^(E) = X - i k/k^2, in circular or linear-polarization form.
SpectralField hawton_position_E(const SpectralField& E, int j, const Vec3& m = e_axis3,
                                PolarizationForm form = PolarizationForm::circular);
// The printed magnetic-field form x_hat + 3 i k/(2k^2) - i sum (d u) u^dagger.
SpectralField printed_position_B(const SpectralField& B, int j, const Vec3& m = e_axis3);

// Theta^m_j = X^m_j - X^{e3}_j as the k-pointwise map sum_sigma (d_j phi_sigma) u_sigma u_sigma^dagger.
PhotonState apply_theta(const PhotonState& s, int j, const Vec3& m);

// max_p ||(op1 op2 - op2 op1 - expected) p|| / ||p||
double commutator_norm(const StateMap& op1, const StateMap& op2, const std::vector<PhotonState>& probes,
                       cplx expected = 0.0);

// Hermiticity residual |((s1, O s2)) - ((O s1, s2))| / (||s1|| ||s2||).
double hermiticity_residual(const StateMap& op, const PhotonState& s1, const PhotonState& s2);

// Gaussian wave packet built in the amplitude frame of `axis`:
// a(eps,sigma,k) = w[ch] exp(-|k-kc|^2 width^2/2) e^{-i k.center}, normalized to ((s,s)) = 1.
PhotonState gaussian_packet(const GridSpec& g, const Vec3& center, const Vec3& carrier, double width,
                            const std::array<cplx, 4>& weights, const Vec3& axis = e_axis3, double ell = 1.0);

}  // namespace phq
