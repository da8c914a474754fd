#include "phq/wavefun.hpp"

#include "phq/quadrature.hpp"
#include "phq/specfun.hpp"

namespace phq {

namespace {

void check_pair(const SpectralField& E, const SpectralField& B) {
    if (!(E.grid == B.grid) || E.coeffs.size() != B.coeffs.size()) throw ShapeError("wavefun: E and B grids differ");
}

void check_channel(int epsilon, int sigma) {
    if (epsilon != 1 && epsilon != -1) throw DomainError("wavefun: epsilon must be +1 or -1");
    if (sigma != 1 && sigma != -1) throw DomainError("wavefun: sigma must be +1 or -1");
}

// Integrals of r^{-5/2} and r^{-5/2} x_1^2 over the cube [-a, a]^3, as a sum over
// the six faces of int dOmega int_0^R(Omega) g(r) r^2 dr.
std::pair<double, double> cube_moments(double a) {
    const GaussRule& g = gauss_legendre(40);
    double i0 = 0.0, i2 = 0.0;
    for (std::size_t p = 0; p < g.x.size(); ++p) {
        for (std::size_t q = 0; q < g.x.size(); ++q) {
            const double x = 0.5 * a * (g.x[p] + 1.0), y = 0.5 * a * (g.x[q] + 1.0);
            const double w = 0.25 * a * a * g.w[p] * g.w[q];
            const double R = std::sqrt(x * x + y * y + a * a);
            const double dom = w * a / (R * R * R);
            i0 += dom * 2.0 * std::sqrt(R);
            i2 += dom * 0.4 * std::pow(R, 2.5) / 3.0;
        }
    }
    return {24.0 * i0, 24.0 * i2};  // 4 quadrants x 6 faces
}

// Correction weights: w0 at the origin, w1 on each of the six nearest neighbours.
std::pair<double, double> local_weights(double h, int M) {
    const auto [I0, I2] = cube_moments((M + 0.5) * h);
    double s0 = 0.0, s2 = 0.0;
    for (int a = -M; a <= M; ++a)
        for (int b = -M; b <= M; ++b)
            for (int c = -M; c <= M; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                const double r = h * std::sqrt(double(a * a + b * b + c * c));
                const double k = h * h * h * std::pow(r, -2.5);
                s0 += k;
                s2 += k * (a * h) * (a * h);
            }
    const double w1 = (I2 - s2) / (2.0 * h * h);
    return {I0 - s0 - 6.0 * w1, w1};
}

std::vector<cplx> channel_coeffs(const SpectralField& E, const SpectralField& B, int eps, int sigma,
                                 const Vec3& axis, double ell) {
    const GridSpec& g = E.grid;
    std::vector<cplx> out(g.size(), 0.0);
    const cplx pre = -0.5 * I * std::sqrt(ell);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const KVector k(g.kvec(i));
        if (k.k == 0.0) continue;
        const CVec3 u = u_axis(k, sigma, axis);
        CVec3 rs{};
        for (int c = 0; c < 3; ++c) rs[c] = double(eps) * E.coeffs[i][c] + (I * double(sigma)) * B.coeffs[i][c];
        out[i] = pre * cdot(u, rs) / std::sqrt(k.k);
    }
    return out;
}

double channel_sum(const std::array<std::vector<cplx>, 4>& v) {
    double s = 0.0;
    for (const auto& ch : v)
        for (const auto& x : ch) s += std::norm(x);
    return s;
}

}  // namespace

SpectralField rs_wavefunction(const SpectralField& E, const SpectralField& B, int epsilon, int sigma) {
    check_pair(E, B);
    check_channel(epsilon, sigma);
    SpectralField out = E;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        for (int c = 0; c < 3; ++c)
            out.coeffs[i][c] = double(epsilon) * E.coeffs[i][c] + (I * double(sigma)) * B.coeffs[i][c];
    return out;
}

SpectralField lp_wavefunction(const SpectralField& rs) { return k_multiplier(rs, -0.5); }

std::vector<CVec3> lp_convolution_oracle(const SpectralField& rs, const std::vector<std::size_t>& at) {
    const GridSpec& g = rs.grid;
    const int n = g.n;
    const double h = g.h();
    constexpr int M = 2;
    const auto [w0, w1] = local_weights(h, M);
    const double kpre = pi / std::pow(2.0 * pi, 2.5);
    // Kernel weight per nearest-image offset, indexed like grid storage.
    std::vector<double> K(g.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int da = g.freq(a) == n / 2 ? -n / 2 : g.freq(a);
                const int db = g.freq(b) == n / 2 ? -n / 2 : g.freq(b);
                const int dc = g.freq(c) == n / 2 ? -n / 2 : g.freq(c);
                double w;
                if (da == 0 && db == 0 && dc == 0) {
                    w = w0;
                } else {
                    const double r = h * std::sqrt(double(da * da + db * db + dc * dc));
                    w = h * h * h * std::pow(r, -2.5);
                    if (std::abs(da) + std::abs(db) + std::abs(dc) == 1) w += w1;
                }
                K[g.index(a, b, c)] = kpre * w;
            }
    const std::vector<CVec3> src = samples(rs);
    std::vector<CVec3> out(at.size());
    for (std::size_t p = 0; p < at.size(); ++p) {
        const std::size_t t = at[p];
        const int ti = int(t / (std::size_t(n) * n)), tj = int((t / n) % n), tl = int(t % n);
        CVec3 acc{};
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const double w = K[g.index((ti - a + n) % n, (tj - b + n) % n, (tl - c + n) % n)];
                    const CVec3& v = src[g.index(a, b, c)];
                    for (int q = 0; q < 3; ++q) acc[q] += w * v[q];
                }
        out[p] = acc;
    }
    return out;
}

PhotonState state_from_fields(const SpectralField& E, const SpectralField& B) {
    check_pair(E, B);
    const GridSpec& g = E.grid;
    PhotonState s = PhotonState::zeros(g, E.ell, E.x0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vec3 k = g.kvec(i);
        const double k2 = dot(k, k);
        if (k2 == 0.0) continue;
        const CVec3& b = B.coeffs[i];
        const CVec3 kxb{k[1] * b[2] - k[2] * b[1], k[2] * b[0] - k[0] * b[2], k[0] * b[1] - k[1] * b[0]};
        for (int c = 0; c < 3; ++c) {
            s.a.coeffs[i][c] = I * kxb[c] / k2;
            s.adot.coeffs[i][c] = -E.coeffs[i][c];
        }
    }
    return s;
}

PositionWaveFunction position_wavefunction(const SpectralField& E, const SpectralField& B, const Vec3& axis) {
    check_pair(E, B);
    if (transversality_residual(E) > 1e-10 || transversality_residual(B) > 1e-10)
        throw DomainError("position_wavefunction: fields must be transverse");
    PositionWaveFunction f;
    f.grid = E.grid;
    f.ell = E.ell;
    f.axis = axis;
    for (int ch = 0; ch < 4; ++ch)
        f.values[ch] = dft_inverse(
            channel_coeffs(E, B, Amplitudes::eps_of(ch), Amplitudes::sigma_of(ch), axis, E.ell), E.grid);
    return f;
}

PositionWaveFunction position_wavefunction(const PhotonState& s, const Vec3& axis) {
    const auto [E, B] = fields_from_state(s);
    return position_wavefunction(E, B, axis);
}

double wavefunction_norm(const PositionWaveFunction& f) { return channel_sum(f.values) * f.grid.cell_volume(); }

ProbabilityDensity probability_density(const PositionWaveFunction& f) {
    const double total = wavefunction_norm(f);
    if (!(total > 0.0)) throw DomainError("probability_density: zero state");
    ProbabilityDensity d;
    d.grid = f.grid;
    d.normalized = true;
    const double dv = f.grid.cell_volume();
    for (int ch = 0; ch < 4; ++ch) {
        d.rho[ch].resize(f.values[ch].size());
        double p = 0.0;
        for (std::size_t i = 0; i < f.values[ch].size(); ++i) {
            d.rho[ch][i] = std::norm(f.values[ch][i]) / total;
            p += d.rho[ch][i] * dv;
        }
        (Amplitudes::eps_of(ch) > 0 ? d.chirality_plus : d.chirality_minus) += p;
        (Amplitudes::sigma_of(ch) > 0 ? d.helicity_plus : d.helicity_minus) += p;
    }
    return d;
}

double schrodinger_step_check(const PhotonState& s, double delta_x0, const Vec3& axis) {
    const PositionWaveFunction f0 = position_wavefunction(s, axis);
    const double n0 = channel_sum(f0.values);
    if (n0 == 0.0) return 0.0;
    const PositionWaveFunction fp = position_wavefunction(evolve(s, delta_x0), axis);
    const PositionWaveFunction fm = position_wavefunction(evolve(s, -delta_x0), axis);
    const GridSpec& g = s.grid();
    double res = 0.0;
    for (int ch = 0; ch < 4; ++ch) {
        std::vector<cplx> c = dft_forward(f0.values[ch], g);
        const double eps = Amplitudes::eps_of(ch);
        for (std::size_t i = 0; i < g.size(); ++i) c[i] *= eps * norm(g.kvec(i));
        const std::vector<cplx> hf = dft_inverse(c, g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const cplx lhs = I * (fp.values[ch][i] - fm.values[ch][i]) / (2.0 * delta_x0);
            res += std::norm(lhs - hf[i]);
        }
    }
    return std::sqrt(res / n0);
}

SpectralField gaussian_example_field(const GridSpec& g, double alpha, cplx E0, double ell) {
    if (!(alpha > 0.0)) throw DomainError("gaussian_example_field: alpha must be positive");
    g.validate();
    SpectralField E = SpectralField::zeros(g, ell);
    // Grid coefficient c_k = (2 pi)^{3/2} V^{-1/2} E~(k), E~ = i k x V~, V~ = E0 alpha^{-5/2} e^{-k^2/2alpha} e3.
    const double pre = std::pow(2.0 * pi, 1.5) / std::sqrt(g.volume()) * std::pow(alpha, -2.5);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vec3 k = g.kvec(i);
        const cplx v = pre * E0 * std::exp(-dot(k, k) / (2.0 * alpha));
        E.coeffs[i] = {I * k[1] * v, -I * k[0] * v, 0.0};
    }
    return E;
}

namespace detail {

double gaussian_example_printed(double alpha, double E0, double r, int epsilon, int sigma, double ell) {
    const double y = 0.5 * alpha * r * r;
    const double pre = std::sqrt(pi * ell) * gamma(1.75) * epsilon * sigma * E0 /
                       (64.0 * std::pow(2.0, 0.25) * std::pow(alpha, 0.75));
    return pre * (16.0 * laguerre_l(-1.75, -y) + 14.0 * y * hyp1f1(2.75, 3.0, -y));
}

}  // namespace detail

cplx gaussian_example_wavefunction(double alpha, cplx E0, double r, int epsilon, int sigma, double ell) {
    if (!(alpha > 0.0)) throw DomainError("gaussian_example_wavefunction: alpha must be positive");
    if (!(r >= 0.0)) throw DomainError("gaussian_example_wavefunction: r must be nonnegative");
    check_channel(epsilon, sigma);
    return -I * E0 * detail::gaussian_example_printed(alpha, 1.0, r, epsilon, sigma, ell);
}

cplx gaussian_example_quadrature(double alpha, cplx E0, double r, int epsilon, int sigma, double ell) {
    if (!(alpha > 0.0)) throw DomainError("gaussian_example_quadrature: alpha must be positive");
    check_channel(epsilon, sigma);
    const double kmax = std::sqrt(2.0 * alpha * 45.0);
    const double v = integrate_gl(
        [&](double k) {
            return std::pow(k, 2.5) * std::exp(-k * k / (2.0 * alpha)) * 0.5 * pi *
                   (bessel_j(0, k * r) + bessel_j(2, k * r));
        },
        0.0, kmax, 200, 20);
    return -I * E0 * (epsilon * sigma * std::sqrt(ell) / (4.0 * std::sqrt(pi) * std::pow(alpha, 2.5))) * v;
}

double gaussian_example_norm(double alpha, cplx E0, double ell) {
    return 2.0 * pi / 3.0 * ell * std::norm(E0) / (alpha * alpha * alpha);
}

GaussianRhoProfile gaussian_rho_profile(double alpha, const std::vector<double>& r) {
    if (!(alpha > 0.0)) throw DomainError("gaussian_rho_profile: alpha must be positive");
    auto g = [alpha](double x) {
        const double f = detail::gaussian_example_printed(alpha, 1.0, x, 1, 1);
        return f * f;
    };
    // |f|^2 decays like r^{-7}; the range past y = alpha r^2 / 2 = 100 is added from that power law.
    const double R = std::sqrt(200.0 / alpha);
    auto moments = [&](int panels) {
        const double gR = g(R);
        const double m0 = integrate_gl([&](double x) { return x * x * g(x); }, 0.0, R, panels, 20) + gR * R * R * R / 4.0;
        const double m1 =
            integrate_gl([&](double x) { return x * x * x * g(x); }, 0.0, R, panels, 20) + gR * R * R * R * R / 3.0;
        return std::pair{4.0 * pi * m0, 4.0 * pi * m1};
    };
    const auto [z, z1] = moments(400);
    GaussianRhoProfile out;
    out.alpha = alpha;
    out.r = r;
    out.rho.reserve(r.size());
    for (double x : r) {
        if (!(x >= 0.0)) throw DomainError("gaussian_rho_profile: r must be nonnegative");
        out.rho.push_back(g(x) / z);
    }
    out.first_moment = z1 / z;
    out.radial_integral = moments(800).first / z;
    return out;
}

}  // namespace phq
