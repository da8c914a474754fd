#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "phq/common.hpp"

namespace phq {

struct GaussRule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

// n-point Gauss-Legendre rule (Newton iteration on P_n).
const GaussRule& gauss_legendre(int n);

// Integral of f over [a, b] with an n-point rule on `panels` equal panels.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int panels, int n = 20);

// Output of a regularized-and-extrapolated oscillatory integral.
template <std::size_t N>
struct Extrapolated {
    std::array<double, N> value{};
    std::array<double, N> residual{};  // |richardson - best single-level estimate|
    double max_rel_residual = 0.0;
};

// I(eta) = int_0^inf f(k) e^{-eta k} dk for a vector-valued integrand with an
// integrable k^{-1/2} endpoint behaviour. The first panel [0, k1] is mapped by
// k = t^2; further panels have width `panel_width` (about half the fastest
// oscillation period). Integration stops once e^{-eta k} < 1e-18.
template <std::size_t N>
std::array<double, N> abel_integral(const std::function<std::array<double, N>(double)>& f, double eta,
                                    double panel_width, int order = 24) {
    const GaussRule& g = gauss_legendre(order);
    std::array<double, N> acc{};
    const double k1 = panel_width;
    // first panel: k = t^2, dk = 2 t dt
    const double t1 = std::sqrt(k1);
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        const double t = 0.5 * t1 * (g.x[i] + 1.0);
        const double k = t * t;
        const auto v = f(k);
        const double wt = 0.5 * t1 * g.w[i] * 2.0 * t * std::exp(-eta * k);
        for (std::size_t c = 0; c < N; ++c) acc[c] += wt * v[c];
    }
    const double kmax = 41.5 / eta;
    for (double a = k1; a < kmax; a += panel_width) {
        const double b = a + panel_width;
        for (std::size_t i = 0; i < g.x.size(); ++i) {
            const double k = 0.5 * (b - a) * g.x[i] + 0.5 * (a + b);
            const auto v = f(k);
            const double wt = 0.5 * (b - a) * g.w[i] * std::exp(-eta * k);
            for (std::size_t c = 0; c < N; ++c) acc[c] += wt * v[c];
        }
    }
    return acc;
}

// Evaluate at eta0, eta0/2, eta0/4 and eliminate the O(eta) and O(eta^2)
// terms. Residual: difference between the second-order and first-order
// extrapolants, relative to `scale` (defaults to |value|) per component.
template <std::size_t N>
Extrapolated<N> richardson3(const std::function<std::array<double, N>(double)>& at_eta, double eta0,
                            const std::array<double, N>* scale = nullptr) {
    const auto v1 = at_eta(eta0);
    const auto v2 = at_eta(0.5 * eta0);
    const auto v3 = at_eta(0.25 * eta0);
    Extrapolated<N> out;
    double ref = 0.0;
    for (std::size_t c = 0; c < N; ++c) ref = std::max(ref, std::abs(v3[c]));
    for (std::size_t c = 0; c < N; ++c) {
        const double r1 = 2.0 * v2[c] - v1[c];
        const double r1b = 2.0 * v3[c] - v2[c];
        const double r2 = (4.0 * r1b - r1) / 3.0;
        out.value[c] = r2;
        out.residual[c] = std::abs(r2 - r1b);
        const double s = scale ? (*scale)[c] : std::max(std::abs(r2), 1e-300);
        const double denom = std::max({s, 1e-12 * ref, 1e-300});
        out.max_rel_residual = std::max(out.max_rel_residual, out.residual[c] / denom);
    }
    return out;
}

}  // namespace phq
