#include "phq/operators.hpp"

namespace phq {

void OperatorHandle::validate() const {
    if ((kind == OpKind::momentum || kind == OpKind::position) && (j < 0 || j > 2))
        throw DomainError("operator component must be 0, 1 or 2");
    if (kind == OpKind::position && std::abs(norm(axis) - 1.0) > 1e-12)
        throw DomainError("position operator needs a unit axis");
}

PhotonState apply_chirality(const PhotonState& s) {
    const GridSpec& g = s.grid();
    PhotonState r = PhotonState::zeros(g, s.ell(), s.x0());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double k = norm(g.kvec(i));
        if (k == 0.0) continue;
        for (int c = 0; c < 3; ++c) {
            r.a.coeffs[i][c] = (I / k) * s.adot.coeffs[i][c];
            r.adot.coeffs[i][c] = (-I * k) * s.a.coeffs[i][c];
        }
    }
    return r;
}

PhotonState apply_chirality_amplitudes(const PhotonState& s) {
    Amplitudes a = to_amplitudes(s);
    for (int sigma : {1, -1})
        for (auto& v : a(-1, sigma)) v = -v;
    return from_amplitudes(a);
}

PhotonState apply_helicity(const PhotonState& s) {
    const GridSpec& g = s.grid();
    PhotonState r = PhotonState::zeros(g, s.ell(), s.x0());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const KVector k(g.kvec(i));
        if (k.k == 0.0) continue;
        const CMat3 h = helicity_matrix(k);
        r.a.coeffs[i] = apply(h, s.a.coeffs[i]);
        r.adot.coeffs[i] = apply(h, s.adot.coeffs[i]);
    }
    return r;
}

PhotonState apply_momentum(const PhotonState& s, int j) {
    if (j < 0 || j > 2) throw DomainError("momentum component must be 0, 1 or 2");
    const GridSpec& g = s.grid();
    PhotonState r = s;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double kj = g.kvec(i)[j];
        for (int c = 0; c < 3; ++c) {
            r.a.coeffs[i][c] *= kj;
            r.adot.coeffs[i][c] *= kj;
        }
    }
    return r;
}

PhotonState apply_hamiltonian(const PhotonState& s) {
    const GridSpec& g = s.grid();
    PhotonState r = PhotonState::zeros(g, s.ell(), s.x0());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vec3 kv = g.kvec(i);
        const double k2 = dot(kv, kv);
        if (k2 == 0.0) continue;
        for (int c = 0; c < 3; ++c) {
            r.a.coeffs[i][c] = I * s.adot.coeffs[i][c];
            r.adot.coeffs[i][c] = (-I * k2) * s.a.coeffs[i][c];
        }
    }
    return r;
}

double outer_band_weight(const PhotonState& s) {
    const GridSpec& g = s.grid();
    const double cut = 0.8 * (g.n / 2);
    double outer = 0.0, total = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double k = norm(g.kvec(i));
        if (k == 0.0) continue;
        const double w = k * cnorm2(s.a.coeffs[i]) + cnorm2(s.adot.coeffs[i]) / k;
        total += w;
        const auto f = g.freqs(i);
        if (std::abs(f[0]) > cut || std::abs(f[1]) > cut || std::abs(f[2]) > cut) outer += w;
    }
    return total > 0.0 ? outer / total : 0.0;
}

namespace {

// Multiply position samples of a scalar coefficient array by x_j and transform back.
std::vector<cplx> multiply_x(const std::vector<cplx>& coeffs, const GridSpec& g, int j) {
    auto f = dft_inverse(coeffs, g);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] *= g.xpos(i)[j];
    return dft_forward(f, g);
}

std::vector<CVec3> multiply_x(const std::vector<CVec3>& coeffs, const GridSpec& g, int j) {
    auto f = dft_inverse(coeffs, g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = g.xpos(i)[j];
        for (auto& c : f[i]) c *= x;
    }
    return dft_forward(f, g);
}

void check_component(int j) {
    if (j < 0 || j > 2) throw DomainError("position component must be 0, 1 or 2");
}

}  // namespace

SpectralField position_kernel(const SpectralField& F, int j, const Vec3& m, double alpha) {
    check_component(j);
    const GridSpec& g = F.grid;
    SpectralField out = SpectralField::zeros(g, F.ell, F.x0);
    std::vector<cplx> comp(g.size());
    for (int sigma : {1, -1}) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            const KVector k(g.kvec(i));
            comp[i] = k.k == 0.0 ? cplx{} : std::pow(k.k, alpha) * cdot(u_axis(k, sigma, m), F.coeffs[i]);
        }
        const auto xc = multiply_x(comp, g, j);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const KVector k(g.kvec(i));
            if (k.k == 0.0) continue;
            const CVec3 u = u_axis(k, sigma, m);
            const cplx v = std::pow(k.k, -alpha) * xc[i];
            for (int c = 0; c < 3; ++c) out.coeffs[i][c] += v * u[c];
        }
    }
    return out;
}

PhotonState apply_position(const PhotonState& s, int j, const Vec3& m, PositionDiagnostics* diag) {
    check_component(j);
    if (diag) {
        diag->outer_band_weight = outer_band_weight(s);
        diag->aliasing_warning = diag->outer_band_weight > aliasing_threshold;
    }
    return PhotonState{position_kernel(s.a, j, m, 0.5), position_kernel(s.adot, j, m, -0.5)};
}

SpectralField position_on_E(const SpectralField& E, int j, const Vec3& m) { return position_kernel(E, j, m, -0.5); }
SpectralField position_on_B(const SpectralField& B, int j, const Vec3& m) { return position_kernel(B, j, m, -0.5); }

PhotonState apply(const OperatorHandle& op, const PhotonState& s) {
    op.validate();
    switch (op.kind) {
        case OpKind::chirality: return apply_chirality(s);
        case OpKind::helicity: return apply_helicity(s);
        case OpKind::momentum: return apply_momentum(s, op.j);
        case OpKind::hamiltonian: return apply_hamiltonian(s);
        case OpKind::position: return apply_position(s, op.j, op.axis);
    }
    throw DomainError("unknown operator kind");
}

namespace {

// -i sum_s (d_j s) s^dagger over the chosen basis, applied to v.
CVec3 connection_term(const KVector& k, int j, const Vec3& m, PolarizationForm form, const CVec3& v) {
    const bool par = norm(cross(k.vec(), m)) <= tol_parallel * k.k;
    if (par) return {};
    const CVec3 up = u_general(k, 1, m), um = u_general(k, -1, m);
    const auto dup = du_general(k, 1, m), dum = du_general(k, -1, m);
    CVec3 r{};
    if (form == PolarizationForm::circular) {
        const cplx cp = cdot(up, v), cm = cdot(um, v);
        for (int c = 0; c < 3; ++c) r[c] = -I * (dup[j][c] * cp + dum[j][c] * cm);
        return r;
    }
    const double s2 = 1.0 / std::sqrt(2.0);
    CVec3 a1{}, a2{}, da1{}, da2{}, a3{}, da3{};
    const Vec3 kv = k.vec();
    for (int c = 0; c < 3; ++c) {
        a1[c] = s2 * (up[c] + um[c]);
        a2[c] = -I * s2 * (up[c] - um[c]);
        da1[c] = s2 * (dup[j][c] + dum[j][c]);
        da2[c] = -I * s2 * (dup[j][c] - dum[j][c]);
        a3[c] = kv[c] / k.k;
        da3[c] = ((c == j ? 1.0 : 0.0) - kv[c] * kv[j] / (k.k * k.k)) / k.k;
    }
    const cplx c1 = cdot(a1, v), c2 = cdot(a2, v), c3 = cdot(a3, v);
    for (int c = 0; c < 3; ++c) r[c] = -I * (da1[c] * c1 + da2[c] * c2 + da3[c] * c3);
    return r;
}

}  // namespace

SpectralField explicit_position(const SpectralField& F, int j, const Vec3& m, double shift, PolarizationForm form) {
    check_component(j);
    const GridSpec& g = F.grid;
    SpectralField out = SpectralField::zeros(g, F.ell, F.x0);
    const auto xf = multiply_x(F.coeffs, g, j);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const KVector k(g.kvec(i));
        if (k.k == 0.0) continue;
        const double kj = k.vec()[j];
        const cplx diag = I * ((0.5 + shift) * kj / (k.k * k.k));
        const CVec3 ct = connection_term(k, j, m, form, F.coeffs[i]);
        for (int c = 0; c < 3; ++c) out.coeffs[i][c] = xf[i][c] + diag * F.coeffs[i][c] + ct[c];
    }
    return out;
}

SpectralField hawton_position_E(const SpectralField& E, int j, const Vec3& m, PolarizationForm form) {
    return explicit_position(E, j, m, -1.0, form);
}

SpectralField printed_position_B(const SpectralField& B, int j, const Vec3& m) {
    return explicit_position(B, j, m, 1.0, PolarizationForm::circular);
}

PhotonState apply_theta(const PhotonState& s, int j, const Vec3& m) {
    check_component(j);
    const GridSpec& g = s.grid();
    PhotonState r = PhotonState::zeros(g, s.ell(), s.x0());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const KVector k(g.kvec(i));
        if (k.k == 0.0) continue;
        if (k.k1 * k.k1 + k.k2 * k.k2 <= (tol_parallel * k.k) * (tol_parallel * k.k)) continue;
        if (norm(cross(k.vec(), m)) <= tol_parallel * k.k) continue;
        for (int sigma : {1, -1}) {
            const CVec3 u = u_canonical(k, sigma);
            const double dphi = phase_gradient(k, sigma, m)[j];
            const cplx ca = dphi * cdot(u, s.a.coeffs[i]);
            const cplx cd = dphi * cdot(u, s.adot.coeffs[i]);
            for (int c = 0; c < 3; ++c) {
                r.a.coeffs[i][c] += ca * u[c];
                r.adot.coeffs[i][c] += cd * u[c];
            }
        }
    }
    return r;
}

double commutator_norm(const StateMap& op1, const StateMap& op2, const std::vector<PhotonState>& probes,
                       cplx expected) {
    double worst = 0.0;
    for (const auto& p : probes) {
        const double pn = state_norm(p);
        if (pn == 0.0) continue;
        PhotonState r = add(op1(op2(p)), op2(op1(p)), -1.0);
        if (expected != 0.0) r = add(r, p, -expected);
        worst = std::max(worst, state_norm(r) / pn);
    }
    return worst;
}

double hermiticity_residual(const StateMap& op, const PhotonState& s1, const PhotonState& s2) {
    const cplx lhs = inner_product(s1, op(s2));
    const cplx rhs = inner_product(op(s1), s2);
    return std::abs(lhs - rhs) / (state_norm(s1) * state_norm(s2));
}

PhotonState gaussian_packet(const GridSpec& g, const Vec3& center, const Vec3& carrier, double width,
                            const std::array<cplx, 4>& weights, const Vec3& axis, double ell) {
    Amplitudes a = Amplitudes::zeros(g, ell, 0.0, axis);
    double total = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vec3 k = g.kvec(i);
        if (dot(k, k) == 0.0) continue;
        const Vec3 d{k[0] - carrier[0], k[1] - carrier[1], k[2] - carrier[2]};
        const cplx env = std::exp(-0.5 * width * width * dot(d, d)) * std::exp(-I * dot(k, center));
        for (int ch = 0; ch < 4; ++ch) {
            a.amp[ch][i] = weights[ch] * env;
            total += std::norm(a.amp[ch][i]);
        }
    }
    if (total == 0.0) throw DomainError("gaussian_packet: empty packet");
    const double c = 1.0 / std::sqrt(total);
    for (auto& v : a.amp)
        for (auto& x : v) x *= c;
    return from_amplitudes(a);
}

}  // namespace phq
