#!/usr/bin/env python3
"""Regenerate src/cube_rot_series.inc.

The cube rotational diffusion constant contains the bracket

    C(v) = 16 v G + 8 v G^2 + 32 G^2 - 48 G P - 8 v G P + 12 P^2

with v = (L / 2 r_C)^2, G = 1 - exp(-v), P = sqrt(pi) u erf(u), u = sqrt(v).
The bracket cancels identically through O(v^5), so a direct floating-point
evaluation loses all significant digits for small v.  This script expands C(v)
symbolically, checks that the first five orders vanish exactly, and emits the
surviving Taylor coefficients as a C array used below the series/direct
switch point.

Usage: python3 scripts/gen_cube_rot_series.py > src/cube_rot_series.inc
"""

import sympy as sp

N_TERMS = 34  # highest power of v kept (inclusive)
FIRST = 6     # first non-vanishing power, asserted below


def main() -> None:
    v = sp.symbols("v", positive=True)
    u = sp.sqrt(v)

    G = 1 - sp.exp(-v)
    P = sp.sqrt(sp.pi) * u * sp.erf(u)

    C = 16 * v * G + 8 * v * G**2 + 32 * G**2 - 48 * G * P - 8 * v * G * P + 12 * P**2

    series = sp.series(C, v, 0, N_TERMS + 1).removeO().expand()
    coeffs = [sp.nsimplify(series.coeff(v, m)) for m in range(N_TERMS + 1)]

    for m in range(FIRST):
        assert coeffs[m] == 0, f"expected exact cancellation at v^{m}, got {coeffs[m]}"
    assert coeffs[FIRST] == sp.Rational(-2, 225), coeffs[FIRST]
    assert coeffs[FIRST + 1] == sp.Rational(2, 315), coeffs[FIRST + 1]

    print("// Generated by scripts/gen_cube_rot_series.py -- do not edit by hand.")
    print("// Taylor coefficients of the cube rotational bracket C(v), starting at v^%d." % FIRST)
    print("inline constexpr int kCubeRotSeriesFirstPower = %d;" % FIRST)
    print("inline constexpr double kCubeRotSeries[] = {")
    for m in range(FIRST, N_TERMS + 1):
        val = sp.Float(coeffs[m], 25)
        print("    %.17e,  // v^%d = %s" % (float(val), m, coeffs[m]))
    print("};")


if __name__ == "__main__":
    main()
