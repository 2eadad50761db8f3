#!/usr/bin/env python3
"""Regenerates golden.hpp from arbitrary-precision mpmath evaluations.

Run from the repository root:

    python3 tests/oracle/generate_golden.py > tests/oracle/golden.hpp

Nothing here calls into the C++ library. Modular forms are summed as
q-series at 40 digits, integrals use mpmath's tanh-sinh quadrature.
"""

import sys

import mpmath as mp

mp.mp.dps = 40
TWO_PI = 2 * mp.pi

entries = []


def put(name, value, note):
    value = mp.mpc(value)
    entries.append((name, value, note))


# ---- q-series -------------------------------------------------------------

ORDER = 120


def sigma(k, n):
    return sum(mp.mpf(d) ** k for d in range(1, n + 1) if n % d == 0)


EIS_COEFFS = {k: [c * sigma(k - 1, n) for n in range(1, ORDER)]
              for k, c in [(2, -24), (4, 240), (6, -504)]}


def eis(k, tau):
    q = mp.exp(2j * mp.pi * tau)
    return 1 + q * mp.polyval(EIS_COEFFS[k][::-1], q)


def delta(tau):
    q = mp.exp(2j * mp.pi * tau)
    p = mp.mpf(1)
    for n in range(1, ORDER):
        p *= (1 - q**n) ** 24
    return q * p


def reduce(tau):
    tau = mp.mpc(tau)
    for _ in range(100):
        tau -= mp.floor(tau.real + mp.mpf(1) / 2)
        if abs(tau) < 1 - mp.mpf(10) ** -30:
            tau = -1 / tau
        else:
            return tau
    raise RuntimeError("reduction did not terminate")


def J(tau):
    t = reduce(tau)
    return eis(4, t) ** 3 / delta(t) - 744


def H(z, tau):
    # -(1/2 pi i) J'(tau) / (J(tau) - J(z)) with J' = -2 pi i E4^2 E6 / Delta
    return eis(4, tau) ** 2 * eis(6, tau) / (delta(tau) * (J(tau) - J(z)))


def e2hat(tau):
    return eis(2, tau) - 3 / (mp.pi * tau.imag)


# ---- specfun --------------------------------------------------------------

put("gamma_1p5_0p5i", mp.gamma(mp.mpc(1.5, 0.5)), "Gamma(1.5+0.5i)")
put("zeta_0p5", mp.zeta(0.5), "zeta(1/2)")
put("zeta_0p7_m3i", mp.zeta(mp.mpc(0.7, -3)), "zeta(0.7-3i)")
sx = mp.mpc(0.3, 2)
put("xi_0p3_2i", sx * (sx - 1) / 2 * mp.pi ** (-sx / 2) * mp.gamma(sx / 2) * mp.zeta(sx),
    "s(s - 1)/2 pi^{-s/2} Gamma(s/2) zeta(s) at 0.3+2i")
put("inc_gamma_upper_0p7_0p2i_1p5",
    mp.quad(lambda t: t ** (mp.mpc(0.7, 0.2) - 1) * mp.exp(-t), [1.5, 10, 40, mp.inf]),
    "Gamma(0.7+0.2i, 1.5) by quadrature")
put("hyp1f1_0p8_5", mp.hyp1f1(0.8, 1.8, 5), "1F1(0.8; 1.8; 5)")
put("hyp2f1_1p5_0p9", mp.hyp2f1(1.5, 1.5, 3, 0.9), "2F1(1.5, 1.5; 3; 0.9)")
put("li3_0p3", mp.polylog(3, mp.exp(2j * mp.pi * mp.mpf("0.3"))), "Li_3(e^{2 pi i 0.3})")
put("li2_0p3", mp.polylog(2, mp.exp(2j * mp.pi * mp.mpf("0.3"))), "Li_2(e^{2 pi i 0.3})")

# ---- modforms -------------------------------------------------------------

tau = mp.mpc("0.2", "1.1")
put("delta_0p2_1p1", delta(tau), "Delta(0.2+1.1i)")
put("delta_slash_S_0p2_1p1", tau ** -12 * delta(-1 / tau), "tau^{-12} Delta(-1/tau) at 0.2+1.1i")
put("J_i", J(mp.mpc(0, 1)), "J(i)")
put("J_rho", J(mp.exp(2j * mp.pi / 3)), "J(e^{2 pi i/3})")
put("J_0p3_1p0", J(mp.mpc("0.3", "1.0")), "J(0.3+i)")
put("J_0p27_1p31", J(mp.mpc("0.27", "1.31")), "J(0.27+1.31i)")
put("J_m0p41_0p35", J(mp.mpc("-0.41", "0.35")), "J(-0.41+0.35i), unreduced")
tau = mp.mpc("0.3", "0.9")
put("e2hat_0p3_0p9", e2hat(-1 / tau) * tau ** -2, "E2hat(-1/tau) tau^{-2} at 0.3+0.9i")
put("e4_0p1_0p7", eis(4, mp.mpc("0.1", "0.7")), "E4(0.1+0.7i)")
zz, tt = mp.mpc("0.13", "1.3"), mp.mpc("0.37", "0.9")
put("Hz_0p13_1p3__0p37_0p9", H(zz, tt), "H_z(tau), z=0.13+1.3i, tau=0.37+0.9i")
put("E2hat_0p37_0p9", e2hat(tt), "E2hat(0.37+0.9i)")

# ---- eisenstein -----------------------------------------------------------


def e0_fourier(w, tau):
    u, v = tau.real, tau.imag
    phi = mp.sqrt(mp.pi) * mp.gamma(w - 0.5) * mp.zeta(2 * w - 1) / (mp.gamma(w) * mp.zeta(2 * w))
    pref = 2 * mp.pi**w * mp.sqrt(v) / (mp.gamma(w) * mp.zeta(2 * w))
    acc = mp.mpf(0)
    for n in range(1, 60):
        term = n ** (w - 0.5) * sigma(1 - 2 * w, n) * mp.besselk(w - 0.5, TWO_PI * n * v)
        acc += 2 * term * mp.cos(TWO_PI * n * u)
    return v**w + phi * v ** (1 - w) + pref * acc


put("E0_1p5_i", e0_fourier(mp.mpf(1.5), mp.mpc(0, 1)), "E_0(1.5; i), Fourier expansion")
put("E0_1p5_0p2_1p3", e0_fourier(mp.mpf(1.5), mp.mpc("0.2", "1.3")), "E_0(1.5; 0.2+1.3i)")
w = mp.mpf(1.5)
put("E2_growth_coeff_1p5",
    -mp.sqrt(mp.pi) * w * mp.gamma(w + 0.5) * mp.zeta(2 * w + 1) / (mp.gamma(w + 2) * mp.zeta(2 * w + 2)),
    "t^{-w-1} coefficient of E_2(w; it), w = 1.5")

# ---- lfun -----------------------------------------------------------------


def le2_closed(s):
    return -24 * TWO_PI ** (-s) * mp.gamma(s) * mp.zeta(s) * mp.zeta(s - 1)


for tag, s in [("1p5", mp.mpf(1.5)), ("2p5", mp.mpf(2.5)), ("1p5_0p7i", mp.mpc(1.5, 0.7)),
               ("m0p5", mp.mpf(-0.5)), ("1p4", mp.mpf(1.4))]:
    put("le2_" + tag, le2_closed(s), "-24 (2pi)^{-s} Gamma(s) zeta(s) zeta(s-1)")


def axis_pieces(z, s):
    y = reduce(z).imag
    pts = sorted({mp.mpf(1), y, y + 1, y + 3, y + 8})
    # H_z(it) - 1 = O(e^{-2 pi (t - y)}); past y + 30 the integrand is below
    # 1e-70, and tanh-sinh on an infinite interval misbehaves on it
    pts = [p for p in pts if p >= 1] + [y + 30]

    def hi(sig):
        return mp.quad(lambda t: (H(z, mp.mpc(0, t)) - 1) * t ** (sig - 1), pts)

    return hi(s), hi(2 - s)


def L_z(z, s):
    # t0 = 1: the (0, 1) piece maps to (1, inf) with exponent 2 - s
    up, down = axis_pieces(z, s)
    j0 = -down
    return 2j * mp.pi * (le2_closed(s) - j0 - up + 1 / s + 1 / (s - 2))


for tag, z, s in [("0p27_1p31__1p4", mp.mpc("0.27", "1.31"), mp.mpf(1.4)),
                  ("0p27_1p31__1p4_0p3i", mp.mpc("0.27", "1.31"), mp.mpc("1.4", "0.3")),
                  ("m0p41_0p87__1p5_0p3i", mp.mpc("-0.41", "0.87"), mp.mpc("1.5", "0.3")),
                  ("0p13_2p2__0p7_1p1i", mp.mpc("0.13", "2.2"), mp.mpc("0.7", "1.1"))]:
    put("Lz_" + tag, L_z(z, s), "L_z(s) by independent quadrature")

z = mp.mpc("0.3", "1.5")
put("Jint_inf_0p3_1p5__1p5", axis_pieces(z, mp.mpf(1.5))[0], "int_1^inf (H_z(it) - 1) t^{1/2} dt")
s = mp.mpf(1.5)
put("limit_target_1p5", 2j * mp.pi * le2_closed(s), "-24i (2pi)^{1-s} Gamma(s) zeta(s) zeta(s-1)")
put("C1_1p5_0p3", -4 * mp.pi / TWO_PI * mp.polylog(1, mp.exp(2j * mp.pi * mp.mpf("0.3"))).imag,
    "C_{1,1.5}(0.3)")

# ---- output ---------------------------------------------------------------

out = sys.stdout
out.write("// Generated by generate_golden.py; do not edit.\n")
out.write("#pragma once\n\n#include <complex>\n\nnamespace golden {\n\n")
for name, value, note in entries:
    out.write(f"// {note}\n")
    out.write(f"inline constexpr std::complex<double> {name}{{{mp.nstr(value.real, 20)}, "
              f"{mp.nstr(value.imag, 20)}}};\n")
out.write("\n}  // namespace golden\n")
