#pragma once

#include <string>
#include <utility>
#include <vector>

#include "phq/common.hpp"
#include "phq/polarization.hpp"

namespace phq {

// Periodic cube [-L/2, L/2)^3 with n samples per axis (n even, n >= 8).
// Sample j sits at x_j = -L/2 + j h, h = L/n. Storage index (i*n + j)*n + l
// with i along e_1. Frequency index i maps to the signed integer in (-n/2, n/2].
struct GridSpec {
    int n = 32;
    double box_len = 2.0 * pi;

    void validate() const;
    std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
    double h() const { return box_len / n; }
    double volume() const { return box_len * box_len * box_len; }
    double cell_volume() const { return h() * h() * h(); }
    int freq(int i) const { return i <= n / 2 ? i : i - n; }
    int storage(int f) const { return ((f % n) + n) % n; }
    std::size_t index(int i, int j, int l) const { return (static_cast<std::size_t>(i) * n + j) * n + l; }
    std::size_t index_of_freq(int f1, int f2, int f3) const { return index(storage(f1), storage(f2), storage(f3)); }
    std::array<int, 3> freqs(std::size_t idx) const;
    Vec3 kvec(std::size_t idx) const;
    Vec3 xpos(std::size_t idx) const;
    bool operator==(const GridSpec& o) const { return n == o.n && box_len == o.box_len; }
};

// Transverse complex vector field, stored as coefficients c_k of
// f(x) = V^{-1/2} sum_k c_k e^{i k.x} (unitary normalization).
struct SpectralField {
    GridSpec grid;
    std::vector<CVec3> coeffs;
    double ell = 1.0;
    double x0 = 0.0;

    static SpectralField zeros(const GridSpec& g, double ell = 1.0, double x0 = 0.0);
};

// One-component field (scalar sector); no transversality.
struct ScalarField {
    GridSpec grid;
    std::vector<cplx> coeffs;
    double ell = 1.0;
    double x0 = 0.0;

    static ScalarField zeros(const GridSpec& g, double ell = 1.0, double x0 = 0.0);
};

// (A, Adot) at time x0.
struct PhotonState {
    SpectralField a;
    SpectralField adot;

    const GridSpec& grid() const { return a.grid; }
    double ell() const { return a.ell; }
    double x0() const { return a.x0; }
    static PhotonState zeros(const GridSpec& g, double ell = 1.0, double x0 = 0.0);
};

// a(eps, sigma, k) = sqrt(ell) k^{1/2} u_sigma^dagger Psi_eps, Psi_eps = (A + eps i k^{-1} Adot)/2,
// with u_sigma taken relative to `axis`.
struct Amplitudes {
    GridSpec grid;
    double ell = 1.0;
    double x0 = 0.0;
    Vec3 axis = e_axis3;
    std::array<std::vector<cplx>, 4> amp;

    static int channel(int eps, int sigma) { return (eps > 0 ? 0 : 2) + (sigma > 0 ? 0 : 1); }
    static int eps_of(int ch) { return ch < 2 ? 1 : -1; }
    static int sigma_of(int ch) { return ch % 2 == 0 ? 1 : -1; }
    std::vector<cplx>& operator()(int eps, int sigma) { return amp[channel(eps, sigma)]; }
    const std::vector<cplx>& operator()(int eps, int sigma) const { return amp[channel(eps, sigma)]; }
    static Amplitudes zeros(const GridSpec& g, double ell, double x0, const Vec3& axis);
};

// Scalar DFT pair; forward maps samples to coefficients, inverse back.
std::vector<cplx> dft_forward(const std::vector<cplx>& samples, const GridSpec& g);
std::vector<cplx> dft_inverse(const std::vector<cplx>& coeffs, const GridSpec& g);
std::vector<CVec3> dft_forward(const std::vector<CVec3>& samples, const GridSpec& g);
std::vector<CVec3> dft_inverse(const std::vector<CVec3>& coeffs, const GridSpec& g);

// Position-space samples of a field.
std::vector<CVec3> samples(const SpectralField& f);

// Multiply coefficients by k^alpha (the zero mode is set to 0 unless alpha == 0).
SpectralField k_multiplier(const SpectralField& f, double alpha);
ScalarField k_multiplier(const ScalarField& f, double alpha, double mass = 0.0);

// (1 - k k^T / k^2) c(k), zero mode removed.
SpectralField project_transverse(const GridSpec& g, const std::vector<CVec3>& raw_coeffs, double ell = 1.0,
                                 double x0 = 0.0);

// max_k |k.c(k)| / (|k| |c|_max) over nonzero k.
double transversality_residual(const SpectralField& f);

// ((s1, s2)) = (ell/2) [<A|k A~> + <Adot|k^{-1} Adot~>]
cplx inner_product(const PhotonState& s1, const PhotonState& s2);
double state_norm(const PhotonState& s);

PhotonState evolve(const PhotonState& s, double delta_x0);

// E = -Adot, B = i k x A.
std::pair<SpectralField, SpectralField> fields_from_state(const PhotonState& s);

Amplitudes to_amplitudes(const PhotonState& s, const Vec3& axis = e_axis3);
PhotonState from_amplitudes(const Amplitudes& a);

// Plane wave at its reference time: coefficient u_sigma / sqrt(ell k) at k, Adot = -i eps k A.
PhotonState plane_wave_state(const GridSpec& g, std::size_t k_index, int eps, int sigma, double ell = 1.0,
                             double x0 = 0.0, const Vec3& axis = e_axis3);

// Linear algebra helpers on fields.
SpectralField add(const SpectralField& a, const SpectralField& b, cplx cb = 1.0);
PhotonState add(const PhotonState& a, const PhotonState& b, cplx cb = 1.0);
PhotonState scale(const PhotonState& a, cplx c);
double max_abs_diff(const SpectralField& a, const SpectralField& b);
double max_abs(const SpectralField& a);

// JSON with every double written as a C99 hex-float string; round trips bit-exactly.
std::string to_json(const SpectralField& f);
SpectralField spectral_field_from_json(const std::string& text);

}  // namespace phq
