#!/usr/bin/env python3
"""Generate Chebyshev coefficients for the Fresnel auxiliary functions.

For z > 0 the Fresnel integrals can be written as
    C(z) = 1/2 + f(z) sin(pi z^2 / 2) - g(z) cos(pi z^2 / 2)
    S(z) = 1/2 - f(z) cos(pi z^2 / 2) - g(z) sin(pi z^2 / 2)
with f(z) ~ 1/(pi z) and g(z) ~ 1/(pi^2 z^3) as z -> infinity.

This script fits Chebyshev expansions of the normalized auxiliaries
    F(w) = pi z f(z),  G(w) = pi^2 z^3 g(z),  w = 1/z^2
on z in [ZLO, ZHI] and writes them to core/src/fresnel_coeffs.inc.
Outside that range the power series (z < ZLO) and the optimally
truncated asymptotic series (z > ZHI) take over.

Requires mpmath. Run from the repository root:
    python3 tools/gen_fresnel_coeffs.py
"""

import mpmath as mp

mp.mp.dps = 50

ZLO = 1.6
ZHI = 8.0
DEGREE = 48

WLO = 1.0 / (ZHI * ZHI)
WHI = 1.0 / (ZLO * ZLO)


def aux_fg(z):
    theta = mp.pi * z * z / 2
    c = mp.fresnelc(z) - mp.mpf(1) / 2
    s = mp.fresnels(z) - mp.mpf(1) / 2
    f = c * mp.sin(theta) - s * mp.cos(theta)
    g = -c * mp.cos(theta) - s * mp.sin(theta)
    return f, g


def cheb_fit(func, n):
    # Coefficients via the Chebyshev-node DCT formula.
    nodes = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / n) for k in range(n)]
    vals = []
    for xi in nodes:
        w = (WHI + WLO) / 2 + xi * (WHI - WLO) / 2
        z = 1 / mp.sqrt(w)
        vals.append(func(z))
    coeffs = []
    for j in range(n):
        acc = mp.mpf(0)
        for k in range(n):
            acc += vals[k] * mp.cos(mp.pi * j * (k + mp.mpf(1) / 2) / n)
        coeffs.append(acc * 2 / n)
    coeffs[0] /= 2
    return coeffs


def main():
    f_coeffs = cheb_fit(lambda z: mp.pi * z * aux_fg(z)[0], DEGREE)
    g_coeffs = cheb_fit(lambda z: mp.pi**2 * z**3 * aux_fg(z)[1], DEGREE)

    with open("core/src/fresnel_coeffs.inc", "w") as out:
        out.write("// Generated by tools/gen_fresnel_coeffs.py -- do not edit.\n")
        out.write(f"inline constexpr double kFresnelAuxZlo = {ZLO};\n")
        out.write(f"inline constexpr double kFresnelAuxZhi = {ZHI};\n")
        out.write(f"inline constexpr double kFresnelAuxWlo = {mp.nstr(mp.mpf(WLO), 17)};\n")
        out.write(f"inline constexpr double kFresnelAuxWhi = {mp.nstr(mp.mpf(WHI), 17)};\n")
        for name, coeffs in (("kFresnelAuxF", f_coeffs), ("kFresnelAuxG", g_coeffs)):
            out.write(f"inline constexpr double {name}[{len(coeffs)}] = {{\n")
            for c in coeffs:
                out.write(f"    {mp.nstr(c, 20)},\n")
            out.write("};\n")

    # Sanity: reconstruct at off-node points.
    def clenshaw(coeffs, xi):
        b1 = b2 = mp.mpf(0)
        for c in reversed(coeffs[1:]):
            b1, b2 = 2 * xi * b1 - b2 + c, b1
        return xi * b1 - b2 + coeffs[0]

    worst = mp.mpf(0)
    for i in range(200):
        z = ZLO + (ZHI - ZLO) * (i + 0.5) / 200
        w = 1 / mp.mpf(z) ** 2
        xi = (2 * w - WLO - WHI) / (WHI - WLO)
        f_ref, g_ref = aux_fg(mp.mpf(z))
        ef = abs(clenshaw(f_coeffs, xi) / (mp.pi * z) - f_ref)
        eg = abs(clenshaw(g_coeffs, xi) / (mp.pi**2 * z**3) - g_ref)
        worst = max(worst, ef, eg)
    print("max abs error of fit on [%.1f, %.1f]: %s" % (ZLO, ZHI, mp.nstr(worst, 3)))


if __name__ == "__main__":
    main()
