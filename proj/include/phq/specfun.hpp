#pragma once

#include <string>
#include <vector>

#include "phq/common.hpp"

namespace phq {

// Gamma function. Lanczos (g = 7, 9 terms) for x >= 1/2, reflection below.
// Throws DomainError at nonpositive integers.
double gamma(double x);

// 1/Gamma(x); zero at the poles of Gamma.
double rgamma(double x);

// Digamma psi(x) = Gamma'(x)/Gamma(x): upward recurrence to x >= 10, then the
// asymptotic Bernoulli series. Reflection for x < 0.
double digamma(double x);

// J_n(x), n in {0,1,2}, x >= 0. Power series for x <= 8, Miller backward
// recurrence for 8 < x <= 25, Hankel asymptotic expansion beyond.
double bessel_j(int n, double x);

// Modified Bessel K_nu(x), x > 0. Series through I_{+-nu} below x = 2 and
// Steed's continued fraction above, upward recurrence in the order.
double bessel_k(double nu, double x);

// Gauss hypergeometric 2F1(a,b;c;z) for z in [0,1). Series for z <= 0.7, the
// z -> 1-z connection formula above (logarithmic form when c-a-b is an integer).
double hyp2f1(double a, double b, double c, double z);

// Same, with 1-z supplied separately so that z close to 1 keeps full relative
// precision in 1-z (e.g. z = sin^2 t, w = cos^2 t).
double hyp2f1(double a, double b, double c, double z, double one_minus_z);

// Kummer 1F1(a;c;x). Series for x >= 0, Kummer transformation for x < 0.
double hyp1f1(double a, double c, double x);

// Laguerre function L_nu(x) = 1F1(-nu; 1; x).
double laguerre_l(double nu, double x);

inline constexpr double hyp2f1_z_switch = 0.7;

struct FnAccuracyReport {
    std::string function_name;
    double max_rel_error = 0.0;
    std::string domain_tested;
    double target = 0.0;
    bool within_target() const { return max_rel_error <= target; }
};

namespace detail {
// Independent algorithms kept for cross-checks.
double gamma_lanczos(double x);       // no reflection; x > 0
double gamma_stirling(double x);      // shifted Stirling series; x > 0
double bessel_i_series(double nu, double x);
double bessel_k_trapezoid(double nu, double x);
double hyp2f1_series(double a, double b, double c, double z, int* terms = nullptr);
double hyp2f1_connection(double a, double b, double c, double w);  // w = 1 - z
}  // namespace detail

}  // namespace phq
