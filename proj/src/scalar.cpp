#include "phq/scalar.hpp"

#include <functional>

#include "phq/quadrature.hpp"
#include "phq/specfun.hpp"

namespace phq {

void ScalarLocalizedQuery::validate() const {
    if (!(mass >= 0.0)) throw DomainError("scalar: mass must be nonnegative");
    if (epsilon != 1 && epsilon != -1) throw DomainError("scalar: epsilon must be +1 or -1");
    if (!(ell > 0.0)) throw DomainError("scalar: ell must be positive");
    if (!(r() > 0.0)) throw SingularPoint("scalar: r = |x - y| must be positive");
}

double ScalarLocalizedQuery::r() const {
    return norm(Vec3{point[0] - center[0], point[1] - center[1], point[2] - center[2]});
}

double scalar_localized_massive(const ScalarLocalizedQuery& q) {
    q.validate();
    if (!(q.mass > 0.0)) throw DomainError("scalar_localized_massive: mass must be positive");
    if (q.delta_x0 != 0.0) throw DomainError("scalar_localized_massive: closed form only at delta_x0 = 0");
    const double r = q.r();
    const double alpha0 = 1.0 / (std::pow(2.0, 0.75) * std::pow(pi, 1.5) * gamma(0.25));
    return alpha0 / std::sqrt(q.ell) * std::pow(q.mass / r, 1.25) * bessel_k(1.25, q.mass * r);
}

cplx scalar_localized_massless(const ScalarLocalizedQuery& q) {
    q.validate();
    if (q.mass != 0.0) throw DomainError("scalar_localized_massless: mass must be zero");
    const double r = q.r();
    cplx sum = 0.0;
    for (int g : {1, -1}) {
        const double d = r - g * q.delta_x0;
        if (std::abs(d) <= 1e-12 * r) throw SingularPoint("scalar_localized_massless: point on the light cone");
        const cplx p = d > 0.0 ? cplx(std::pow(d, 1.5), 0.0) : std::pow(-d, 1.5) * std::exp(I * (1.5 * pi * (q.epsilon * q.delta_x0 > 0.0 ? 1.0 : -1.0)));
        sum += cplx(1.0, double(g * q.epsilon)) / p;
    }
    return sum / (4.0 * std::pow(2.0 * pi, 1.5) * std::sqrt(q.ell) * r);
}

ScalarOracleReport scalar_localized_oracle(const ScalarLocalizedQuery& q, const ScalarOracleOptions& opt) {
    q.validate();
    const double r = q.r();
    const double m2 = q.mass * q.mass;
    const double ed = q.epsilon * q.delta_x0;
    std::function<std::array<double, 2>(double)> f = [=](double k) {
        const double w = std::sqrt(k * k + m2);
        const double amp = k * std::sin(r * k) / std::sqrt(w);
        return std::array<double, 2>{amp * std::cos(ed * w), -amp * std::sin(ed * w)};
    };
    const double panel = pi / (r + std::abs(q.delta_x0));
    std::function<std::array<double, 2>(double)> at_eta = [&](double eta) {
        return abel_integral<2>(f, eta, panel, opt.order);
    };
    const auto e = richardson3<2>(at_eta, opt.eta_coeff * r);
    const double scale = std::hypot(e.value[0], e.value[1]);
    ScalarOracleReport rep;
    rep.rel_residual = std::hypot(e.residual[0], e.residual[1]) / scale;
    if (rep.rel_residual > opt.max_rel_residual)
        throw NonConvergence("scalar_localized_oracle: extrapolation residual too large");
    rep.value = cplx(e.value[0], e.value[1]) / (2.0 * pi * pi * std::sqrt(q.ell) * r);
    return rep;
}

namespace {

void check_state(const ScalarState& s) {
    if (!(s.psi.grid == s.psidot.grid) || s.psi.coeffs.size() != s.psidot.coeffs.size())
        throw ShapeError("scalar: psi and psidot grids differ");
    if (!(s.mass >= 0.0)) throw DomainError("scalar: mass must be nonnegative");
}

}  // namespace

double scalar_norm(const ScalarState& s) {
    check_state(s);
    const GridSpec& g = s.psi.grid;
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vec3 k = g.kvec(i);
        const double w = std::sqrt(dot(k, k) + s.mass * s.mass);
        if (w == 0.0) continue;
        acc += w * std::norm(s.psi.coeffs[i]) + std::norm(s.psidot.coeffs[i]) / w;
    }
    return 0.5 * s.psi.ell * acc;
}

std::vector<double> scalar_probability_density(const ScalarState& s) {
    check_state(s);
    const GridSpec& g = s.psi.grid;
    const auto a = dft_inverse(k_multiplier(s.psi, 0.5, s.mass).coeffs, g);
    const auto b = dft_inverse(k_multiplier(s.psidot, -0.5, s.mass).coeffs, g);
    std::vector<double> rho(g.size());
    double total = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        rho[i] = std::norm(a[i]) + std::norm(b[i]);
        total += rho[i];
    }
    total *= g.cell_volume();
    if (!(total > 0.0)) throw DomainError("scalar_probability_density: zero state");
    for (auto& v : rho) v /= total;
    return rho;
}

ScalarState scalar_evolve(const ScalarState& s, double delta_x0) {
    check_state(s);
    ScalarState out = s;
    const GridSpec& g = s.psi.grid;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vec3 k = g.kvec(i);
        const double w = std::sqrt(dot(k, k) + s.mass * s.mass);
        const double c = std::cos(w * delta_x0);
        const double sw = w > 0.0 ? std::sin(w * delta_x0) / w : delta_x0;
        const cplx p = s.psi.coeffs[i], pd = s.psidot.coeffs[i];
        out.psi.coeffs[i] = c * p + sw * pd;
        out.psidot.coeffs[i] = -w * std::sin(w * delta_x0) * p + c * pd;
    }
    out.psi.x0 += delta_x0;
    out.psidot.x0 += delta_x0;
    return out;
}

ScalarState scalar_plane_wave(const GridSpec& g, std::size_t k_index, int epsilon, double mass, double ell) {
    g.validate();
    if (epsilon != 1 && epsilon != -1) throw DomainError("scalar_plane_wave: epsilon must be +1 or -1");
    if (k_index >= g.size()) throw DomainError("scalar_plane_wave: index out of range");
    ScalarState s{ScalarField::zeros(g, ell), ScalarField::zeros(g, ell), mass};
    const Vec3 k = g.kvec(k_index);
    const double w = std::sqrt(dot(k, k) + mass * mass);
    if (w == 0.0) throw DomainError("scalar_plane_wave: the massless zero mode has no state");
    s.psi.coeffs[k_index] = 1.0;
    s.psidot.coeffs[k_index] = -I * (epsilon * w);
    return s;
}

ScalarState add(const ScalarState& a, const ScalarState& b, cplx cb) {
    check_state(a);
    check_state(b);
    if (!(a.psi.grid == b.psi.grid) || a.mass != b.mass) throw ShapeError("scalar add: states differ in grid or mass");
    ScalarState r = a;
    for (std::size_t i = 0; i < r.psi.coeffs.size(); ++i) {
        r.psi.coeffs[i] += cb * b.psi.coeffs[i];
        r.psidot.coeffs[i] += cb * b.psidot.coeffs[i];
    }
    return r;
}

}  // namespace phq
