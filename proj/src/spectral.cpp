#include "phq/spectral.hpp"

#include <fftw3.h>

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>

#include "json.hpp"

namespace phq {

void GridSpec::validate() const {
    if (n < 8 || n % 2 != 0) throw ShapeError("GridSpec: n must be even and >= 8");
    if (!(box_len > 0.0)) throw ShapeError("GridSpec: box_len must be positive");
}

std::array<int, 3> GridSpec::freqs(std::size_t idx) const {
    const int l = static_cast<int>(idx % n);
    const int j = static_cast<int>((idx / n) % n);
    const int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
    return {freq(i), freq(j), freq(l)};
}

Vec3 GridSpec::kvec(std::size_t idx) const {
    const auto f = freqs(idx);
    const double dk = 2.0 * pi / box_len;
    return {dk * f[0], dk * f[1], dk * f[2]};
}

Vec3 GridSpec::xpos(std::size_t idx) const {
    const int l = static_cast<int>(idx % n);
    const int j = static_cast<int>((idx / n) % n);
    const int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
    const double hh = h();
    return {-0.5 * box_len + i * hh, -0.5 * box_len + j * hh, -0.5 * box_len + l * hh};
}

SpectralField SpectralField::zeros(const GridSpec& g, double ell, double x0) {
    g.validate();
    return SpectralField{g, std::vector<CVec3>(g.size(), CVec3{}), ell, x0};
}

ScalarField ScalarField::zeros(const GridSpec& g, double ell, double x0) {
    g.validate();
    return ScalarField{g, std::vector<cplx>(g.size(), cplx{}), ell, x0};
}

PhotonState PhotonState::zeros(const GridSpec& g, double ell, double x0) {
    return PhotonState{SpectralField::zeros(g, ell, x0), SpectralField::zeros(g, ell, x0)};
}

Amplitudes Amplitudes::zeros(const GridSpec& g, double ell, double x0, const Vec3& axis) {
    Amplitudes a;
    a.grid = g;
    a.ell = ell;
    a.x0 = x0;
    a.axis = axis;
    for (auto& v : a.amp) v.assign(g.size(), cplx{});
    return a;
}

namespace {

fftw_plan get_plan(int n, int sign) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, fftw_plan> plans;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    const std::size_t sz = static_cast<std::size_t>(n) * n * n;
    fftw_complex* in = fftw_alloc_complex(sz);
    fftw_complex* out = fftw_alloc_complex(sz);
    fftw_plan p = fftw_plan_dft_3d(n, n, n, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    plans[key] = p;
    return p;
}

// (-1)^(i+j+l): the offset of the sample lattice from the origin.
double parity(const GridSpec& g, std::size_t idx) {
    const int l = static_cast<int>(idx % g.n);
    const int j = static_cast<int>((idx / g.n) % g.n);
    const int i = static_cast<int>(idx / (static_cast<std::size_t>(g.n) * g.n));
    return ((i + j + l) & 1) ? -1.0 : 1.0;
}

void check_size(std::size_t got, const GridSpec& g) {
    if (got != g.size()) throw ShapeError("dft: sample count does not match the grid");
}

}  // namespace

std::vector<cplx> dft_forward(const std::vector<cplx>& s, const GridSpec& g) {
    g.validate();
    check_size(s.size(), g);
    std::vector<cplx> out(s.size());
    fftw_execute_dft(get_plan(g.n, FFTW_FORWARD), reinterpret_cast<fftw_complex*>(const_cast<cplx*>(s.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
    const double c = std::sqrt(g.volume()) / static_cast<double>(g.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= c * parity(g, i);
    return out;
}

std::vector<cplx> dft_inverse(const std::vector<cplx>& coeffs, const GridSpec& g) {
    g.validate();
    check_size(coeffs.size(), g);
    std::vector<cplx> in(coeffs.size());
    for (std::size_t i = 0; i < in.size(); ++i) in[i] = coeffs[i] * parity(g, i);
    std::vector<cplx> out(coeffs.size());
    fftw_execute_dft(get_plan(g.n, FFTW_BACKWARD), reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    const double c = 1.0 / std::sqrt(g.volume());
    for (auto& v : out) v *= c;
    return out;
}

namespace {

template <bool Forward>
std::vector<CVec3> dft_vec(const std::vector<CVec3>& in, const GridSpec& g) {
    check_size(in.size(), g);
    std::vector<CVec3> out(in.size());
    std::vector<cplx> comp(in.size());
    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < in.size(); ++i) comp[i] = in[i][c];
        const auto t = Forward ? dft_forward(comp, g) : dft_inverse(comp, g);
        for (std::size_t i = 0; i < in.size(); ++i) out[i][c] = t[i];
    }
    return out;
}

}  // namespace

std::vector<CVec3> dft_forward(const std::vector<CVec3>& s, const GridSpec& g) { return dft_vec<true>(s, g); }
std::vector<CVec3> dft_inverse(const std::vector<CVec3>& c, const GridSpec& g) { return dft_vec<false>(c, g); }

std::vector<CVec3> samples(const SpectralField& f) { return dft_inverse(f.coeffs, f.grid); }

SpectralField k_multiplier(const SpectralField& f, double alpha) {
    SpectralField r = f;
    if (alpha == 0.0) return r;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        const double k = norm(f.grid.kvec(i));
        const double s = k > 0.0 ? std::pow(k, alpha) : 0.0;
        for (auto& c : r.coeffs[i]) c *= s;
    }
    return r;
}

ScalarField k_multiplier(const ScalarField& f, double alpha, double mass) {
    ScalarField r = f;
    if (alpha == 0.0) return r;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        const Vec3 kv = f.grid.kvec(i);
        const double om2 = dot(kv, kv) + mass * mass;
        r.coeffs[i] *= om2 > 0.0 ? std::pow(om2, 0.5 * alpha) : 0.0;
    }
    return r;
}

SpectralField project_transverse(const GridSpec& g, const std::vector<CVec3>& raw, double ell, double x0) {
    g.validate();
    check_size(raw.size(), g);
    SpectralField f = SpectralField::zeros(g, ell, x0);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Vec3 k = g.kvec(i);
        const double k2 = dot(k, k);
        if (k2 == 0.0) continue;
        const cplx kc = k[0] * raw[i][0] + k[1] * raw[i][1] + k[2] * raw[i][2];
        for (int c = 0; c < 3; ++c) f.coeffs[i][c] = raw[i][c] - k[c] * kc / k2;
    }
    return f;
}

double transversality_residual(const SpectralField& f) {
    const double cmax = max_abs(f);
    if (cmax == 0.0) return 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        const Vec3 k = f.grid.kvec(i);
        const double kk = norm(k);
        if (kk == 0.0) {
            worst = std::max(worst, std::sqrt(cnorm2(f.coeffs[i])) / cmax);
            continue;
        }
        const cplx kc = k[0] * f.coeffs[i][0] + k[1] * f.coeffs[i][1] + k[2] * f.coeffs[i][2];
        worst = std::max(worst, std::abs(kc) / (kk * cmax));
    }
    return worst;
}

namespace {

void check_match(const PhotonState& a, const PhotonState& b) {
    if (!(a.grid() == b.grid())) throw ShapeError("photon states live on different grids");
    if (a.ell() != b.ell()) throw ShapeError("photon states carry different ell");
}

}  // namespace

cplx inner_product(const PhotonState& s1, const PhotonState& s2) {
    check_match(s1, s2);
    const GridSpec& g = s1.grid();
    cplx acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double k = norm(g.kvec(i));
        if (k == 0.0) continue;
        acc += k * cdot(s1.a.coeffs[i], s2.a.coeffs[i]) + cdot(s1.adot.coeffs[i], s2.adot.coeffs[i]) / k;
    }
    return 0.5 * s1.ell() * acc;
}

double state_norm(const PhotonState& s) { return std::sqrt(std::max(0.0, inner_product(s, s).real())); }

Amplitudes to_amplitudes(const PhotonState& s, const Vec3& axis) {
    const GridSpec& g = s.grid();
    Amplitudes out = Amplitudes::zeros(g, s.ell(), s.x0(), axis);
    const double sl = std::sqrt(s.ell());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const KVector k(g.kvec(i));
        if (k.k == 0.0) continue;
        const CVec3& A = s.a.coeffs[i];
        const CVec3& Ad = s.adot.coeffs[i];
        const double pre = sl * std::sqrt(k.k);
        for (int sigma : {1, -1}) {
            const CVec3 u = u_axis(k, sigma, axis);
            const cplx ua = cdot(u, A);
            const cplx uad = cdot(u, Ad) * (I / k.k);
            out(1, sigma)[i] = pre * 0.5 * (ua + uad);
            out(-1, sigma)[i] = pre * 0.5 * (ua - uad);
        }
    }
    return out;
}

PhotonState from_amplitudes(const Amplitudes& a) {
    const GridSpec& g = a.grid;
    PhotonState s = PhotonState::zeros(g, a.ell, a.x0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const KVector k(g.kvec(i));
        if (k.k == 0.0) continue;
        const double inv = 1.0 / std::sqrt(a.ell * k.k);
        for (int sigma : {1, -1}) {
            const CVec3 u = u_axis(k, sigma, a.axis);
            const cplx ap = a(1, sigma)[i], am = a(-1, sigma)[i];
            const cplx sa = (ap + am) * inv;
            const cplx sd = (-I * k.k) * (ap - am) * inv;
            for (int c = 0; c < 3; ++c) {
                s.a.coeffs[i][c] += sa * u[c];
                s.adot.coeffs[i][c] += sd * u[c];
            }
        }
    }
    return s;
}

PhotonState evolve(const PhotonState& s, double dx0) {
    if (dx0 == 0.0) return s;
    // Per chirality branch Psi_eps -> exp(-i eps k dx0) Psi_eps; done directly on (A, Adot).
    const GridSpec& g = s.grid();
    PhotonState r = PhotonState::zeros(g, s.ell(), s.x0() + dx0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double k = norm(g.kvec(i));
        if (k == 0.0) continue;
        const double c = std::cos(k * dx0), sn = std::sin(k * dx0);
        for (int j = 0; j < 3; ++j) {
            const cplx A = s.a.coeffs[i][j], Ad = s.adot.coeffs[i][j];
            r.a.coeffs[i][j] = c * A + (sn / k) * Ad;
            r.adot.coeffs[i][j] = -k * sn * A + c * Ad;
        }
    }
    return r;
}

std::pair<SpectralField, SpectralField> fields_from_state(const PhotonState& s) {
    const GridSpec& g = s.grid();
    SpectralField E = SpectralField::zeros(g, s.ell(), s.x0());
    SpectralField B = SpectralField::zeros(g, s.ell(), s.x0());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vec3 k = g.kvec(i);
        const CVec3& A = s.a.coeffs[i];
        for (int c = 0; c < 3; ++c) E.coeffs[i][c] = -s.adot.coeffs[i][c];
        B.coeffs[i][0] = I * (k[1] * A[2] - k[2] * A[1]);
        B.coeffs[i][1] = I * (k[2] * A[0] - k[0] * A[2]);
        B.coeffs[i][2] = I * (k[0] * A[1] - k[1] * A[0]);
    }
    return {E, B};
}

PhotonState plane_wave_state(const GridSpec& g, std::size_t idx, int eps, int sigma, double ell, double x0,
                             const Vec3& axis) {
    PhotonState s = PhotonState::zeros(g, ell, x0);
    const KVector k(g.kvec(idx));
    if (k.k == 0.0) throw DomainError("plane_wave_state: zero mode has no photon state");
    const CVec3 u = u_axis(k, sigma, axis);
    const double nrm = 1.0 / std::sqrt(ell * k.k);
    for (int c = 0; c < 3; ++c) {
        s.a.coeffs[idx][c] = nrm * u[c];
        s.adot.coeffs[idx][c] = (-I * (eps * k.k)) * nrm * u[c];
    }
    return s;
}

SpectralField add(const SpectralField& a, const SpectralField& b, cplx cb) {
    if (!(a.grid == b.grid)) throw ShapeError("add: grid mismatch");
    SpectralField r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        for (int c = 0; c < 3; ++c) r.coeffs[i][c] += cb * b.coeffs[i][c];
    return r;
}

PhotonState add(const PhotonState& a, const PhotonState& b, cplx cb) {
    return PhotonState{add(a.a, b.a, cb), add(a.adot, b.adot, cb)};
}

PhotonState scale(const PhotonState& a, cplx c) {
    PhotonState r = a;
    for (auto* f : {&r.a, &r.adot})
        for (auto& v : f->coeffs)
            for (auto& x : v) x *= c;
    return r;
}

double max_abs_diff(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid == b.grid)) throw ShapeError("max_abs_diff: grid mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (int c = 0; c < 3; ++c) m = std::max(m, std::abs(a.coeffs[i][c] - b.coeffs[i][c]));
    return m;
}

double max_abs(const SpectralField& a) {
    double m = 0.0;
    for (const auto& v : a.coeffs)
        for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

namespace {

std::string hexf(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

double unhex(const nlohmann::json& j) {
    const std::string s = j.get<std::string>();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw ShapeError("field json: bad number '" + s + "'");
    return v;
}

}  // namespace

std::string to_json(const SpectralField& f) {
    nlohmann::ordered_json j;
    j["format"] = "phq-spectral-field-v1";
    j["n"] = f.grid.n;
    j["box_len"] = hexf(f.grid.box_len);
    j["ell"] = hexf(f.ell);
    j["x0"] = hexf(f.x0);
    j["layout"] = "coeffs[(i*n+j)*n+l] = [re1,im1,re2,im2,re3,im3]; frequency index i -> i<=n/2 ? i : i-n";
    auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& v : f.coeffs) {
        auto e = nlohmann::ordered_json::array();
        for (const auto& c : v) {
            e.push_back(hexf(c.real()));
            e.push_back(hexf(c.imag()));
        }
        arr.push_back(std::move(e));
    }
    return j.dump();
}

SpectralField spectral_field_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.value("format", std::string()) != "phq-spectral-field-v1") throw ShapeError("field json: unknown format");
    GridSpec g{j.at("n").get<int>(), unhex(j.at("box_len"))};
    SpectralField f = SpectralField::zeros(g, unhex(j.at("ell")), unhex(j.at("x0")));
    const auto& arr = j.at("coeffs");
    if (arr.size() != g.size()) throw ShapeError("field json: coefficient count does not match grid");
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = arr[i];
        if (e.size() != 6) throw ShapeError("field json: each entry needs 6 numbers");
        for (int c = 0; c < 3; ++c) f.coeffs[i][c] = cplx(unhex(e[2 * c]), unhex(e[2 * c + 1]));
    }
    return f;
}

}  // namespace phq
