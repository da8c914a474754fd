"""Regenerates the frozen reference values used by tests/test_reference.cpp.

Independent of the C++ code: everything here is evaluated with mpmath at 40 digits.
Run: python3 tools/reference_values.py
"""
import mpmath as mp

mp.mp.dps = 40


def show(label, v):
    if isinstance(v, mp.mpc):
        print(f"{label}: {mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}")
    else:
        print(f"{label}: {mp.nstr(v, 20)}")


print("# special functions")
for x in ["0.1", "5.5", "-1.5", "0.25"]:
    show(f"gamma({x})", mp.gamma(mp.mpf(x)))
show("digamma(0.4)", mp.digamma(mp.mpf("0.4")))
for n, x in [(0, "1"), (1, "2.5"), (2, "7.3"), (1, "30"), (0, "12"), (2, "40")]:
    show(f"J{n}({x})", mp.besselj(n, mp.mpf(x)))
for nu, x in [("0.25", "0.5"), ("1.25", "1"), ("0.75", "10"), ("1.25", "0.001")]:
    show(f"K{nu}({x})", mp.besselk(mp.mpf(nu), mp.mpf(x)))
for a, b, c, z in [("0.25", "0.5", "1", "0.9"), ("1.25", "1.5", "2", "0.95"), ("0.5", "0.75", "1", "0.999"),
                   ("2.25", "2.5", "3", "0.8"), ("0.5", "0.5", "1", "0.9"), ("1", "1", "3", "0.9"),
                   ("0.5", "0.5", "2", "0.9999"), ("3.25", "3.5", "4", "0.3")]:
    show(f"2F1({a},{b};{c};{z})", mp.hyp2f1(mp.mpf(a), mp.mpf(b), mp.mpf(c), mp.mpf(z)))
for a, c, x in [("2.75", "3", "-2"), ("-1.25", "1", "3.7"), ("1.75", "1", "-4")]:
    show(f"1F1({a};{c};{x})", mp.hyp1f1(mp.mpf(a), mp.mpf(c), mp.mpf(x)))

print("# angular profiles at 40 digits (checks the 2F1 evaluation near z = 1)")


def t_profiles(th):
    c, s = mp.cos(th), mp.sin(th)
    c2, s2 = c * c, s * s
    cos2, sin2 = c2 - s2, 2 * s * c
    F = lambda a, b, cc: mp.hyp2f1(a, b, cc, s2)
    g14, g34 = mp.gamma(0.25), mp.gamma(0.75)
    q = mp.mpf(1) / 4
    t1 = 5 * g14 / (64 * mp.pi * g34) * sin2 * (F(q, 0.5, 1) - cos2 / 2 * F(1 + q, 1.5, 2) - mp.mpf(3) / 32 * sin2**2 * F(2 + q, 2.5, 3))
    t2 = 3 * g34**2 / (16 * mp.sqrt(2) * mp.pi**2) * s * (-2 * F(0.5, 3 * q, 1) + c2 * F(1.5, 1 + 3 * q, 2))
    t3 = g14 / (32 * mp.pi * g34) * ((4 - 5 * s2) * F(q, 0.5, 1) - c2 * (5 * c2 - 3) * F(1 + q, 1.5, 2)
                                      - mp.mpf(15) / 8 * s2 * c2**2 * F(2 + q, 2.5, 3))
    t4 = 21 * g34**2 / (1024 * mp.sqrt(2) * mp.pi**2) * sin2 * (32 * F(0.5, 3 * q, 1) - 16 * cos2 * F(1.5, 1 + 3 * q, 2)
                                                                 - 3 * sin2**2 * F(2.5, 2 + 3 * q, 3))
    t5 = -5 * g14**2 / (1024 * mp.sqrt(2) * mp.pi**2) * s * (16 * F(q, 0.5, 1) - 4 * (7 + 11 * cos2) * F(1 + q, 1.5, 2)
                                                              - 3 * c2 * (3 - 19 * cos2) * F(2 + q, 2.5, 3)
                                                              + 45 * c2**2 * s2 * F(3 + q, 3.5, 4))
    t6 = 3 * g34 / (128 * mp.pi * g14) * (4 * (1 + 7 * cos2) * F(0.5, 3 * q, 1) + 4 * c2 * (3 - 7 * cos2) * F(1.5, 1 + 3 * q, 2)
                                           - 21 * c2**2 * s2 * F(2.5, 2 + 3 * q, 3))
    return [t1, t2, t3, t4, t5, t6]


for th in ["0", "0.3", "1.2", "2.0", "1.5"]:
    for i, v in enumerate(t_profiles(mp.mpf(th))):
        show(f"T{i + 1}({th})", v)


print("# scalar localized state, ell = 1")
for m, r in [("1", "1"), ("2", "0.7"), ("0.5", "3")]:
    m, r = mp.mpf(m), mp.mpf(r)
    a0 = 1 / (mp.mpf(2) ** 0.75 * mp.pi**1.5 * mp.gamma(0.25))
    show(f"massive(m={m},r={r})", a0 * (m / r) ** 1.25 * mp.besselk(1.25, m * r))


def massless(r, delta, eps, eta=mp.mpf("1e-30")):
    # int_0^inf k^{1/2} sin(rk) e^{-i eps delta k - eta k} dk = Gamma(3/2)/(2i) [p(-r) - p(r)],
    # p(x) = (eta + i(eps delta + x))^{-3/2} on the principal branch (Re > 0).
    p = lambda x: (eta + 1j * (eps * delta + x)) ** mp.mpf(-1.5)
    integral = mp.gamma(1.5) / (2j) * (p(-r) - p(r))
    return integral / (2 * mp.pi**2 * r)


for r, d, e in [("1", "0.5", 1), ("1", "0.5", -1), ("1", "2", 1), ("1", "2", -1), ("1.3", "-3.5", 1), ("2", "0", 1)]:
    show(f"massless(r={r},delta={d},eps={e})", massless(mp.mpf(r), mp.mpf(d), e))

print("# Gaussian example, E0 = 1, ell = 1, eps = sigma = +1")


def gaussian_quad(alpha, r):
    f = lambda k: k**2.5 * mp.exp(-k * k / (2 * alpha)) * mp.pi / 2 * (mp.besselj(0, k * r) + mp.besselj(2, k * r))
    v = mp.quad(f, [0, 5, 10, 20, mp.inf])
    return -1j * v / (4 * mp.sqrt(mp.pi) * alpha**2.5)


for a, r in [("1", "0"), ("1", "0.7"), ("2", "1.1"), ("5", "0.4"), ("3", "2.5")]:
    show(f"f(alpha={a},r={r})", gaussian_quad(mp.mpf(a), mp.mpf(r)))

