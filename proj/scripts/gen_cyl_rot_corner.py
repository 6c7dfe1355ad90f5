#!/usr/bin/env python3
"""Regenerate src/cyl_rot_corner.inc.

The cylinder rotational bracket, written with v = (L/2 r_C)^2 and
w = R^2 / 2 r_C^2, factors as

    curly(v, w) = v * w * [ (v/3 - w/2)^2 + R(v, w) ]

near the origin.  The explicit square captures the leading bilinear form,
which vanishes on the line w = 2v/3 (equal transverse and axial moments of
inertia, the dip of the rotational sensitivity curve); evaluating it as a
square keeps the small result exact instead of cancelling.  This script
expands the bracket symbolically, verifies the factorization, and emits the
Taylor coefficients of the remainder R(v, w).

Usage: python3 scripts/gen_cyl_rot_corner.py > src/cyl_rot_corner.inc
"""

import sympy as sp

MAX_TOTAL_DEGREE = 18  # highest m + j kept in the remainder


def main() -> None:
    v, w = sp.symbols("v w", positive=True)
    u = sp.sqrt(v)

    E = sp.exp(-v)
    G = 1 - E
    P = sp.sqrt(sp.pi) * u * sp.erf(u)

    i0s = sp.exp(-w) * sp.besseli(0, w)
    i1s = sp.exp(-w) * sp.besseli(1, w)

    b1 = G * (8 + 2 * w) - 4 * P
    b2 = G * (4 + 2 * w) - 2 * P
    b3 = (3 - E) * 4 * v + 2 * G * (14 + 6 * w) - P * (24 + 4 * v)
    curly = b1 - 2 * i0s * b2 - sp.Rational(1, 3) * i1s * b3

    nv = MAX_TOTAL_DEGREE + 2
    expanded = curly.series(v, 0, nv + 1).removeO()
    expanded = expanded.series(w, 0, nv + 1).removeO()
    expanded = sp.expand(expanded)

    poly = sp.Poly(expanded, v, w)
    coeffs = {}
    for (m, j), c in zip(poly.monoms(), poly.coeffs()):
        assert c.is_rational, f"non-rational coefficient at v^{m} w^{j}: {c}"
        if c != 0:
            coeffs[(m, j)] = c

    # Every monomial carries at least one power of each variable.
    for (m, j) in coeffs:
        assert m >= 1 and j >= 1, f"unexpected monomial v^{m} w^{j}"

    # Verify the bilinear head is the perfect square (v/3 - w/2)^2.
    assert coeffs.get((3, 1)) == sp.Rational(1, 9)
    assert coeffs.get((2, 2)) == sp.Rational(-1, 3)
    assert coeffs.get((1, 3)) == sp.Rational(1, 4)

    remainder = []
    for (m, j), c in sorted(coeffs.items()):
        rm, rj = m - 1, j - 1  # powers inside the v*w[...] factor
        if rm + rj <= 2:
            continue  # head handled by the explicit square
        if rm + rj > MAX_TOTAL_DEGREE:
            continue
        remainder.append((rm, rj, c))

    print("// Generated by scripts/gen_cyl_rot_corner.py -- do not edit by hand.")
    print("// curly(v, w) = v*w*((v/3 - w/2)^2 + sum c * v^m * w^j) near the origin.")
    print("// Coefficients are stored as hi/lo double pairs: the summed series cancels")
    print("// through two further orders on w = 2v/3, so coefficient rounding at 1 ulp")
    print("// would dominate the on-curve value.")
    print("struct CylRotCornerTerm { int m; int j; double hi; double lo; };")
    print("inline constexpr CylRotCornerTerm kCylRotCorner[] = {")
    from fractions import Fraction

    for rm, rj, c in remainder:
        hi_d = float(sp.Float(c, 25))
        residual = c - sp.Rational(Fraction(hi_d))
        lo_d = float(sp.Float(residual, 25))
        print("    {%d, %d, %.17e, %.17e},  // %s" % (rm, rj, hi_d, lo_d, c))
    print("};")


if __name__ == "__main__":
    main()
