#pragma once

#include "cslbounds/geometry.hpp"

namespace cslbounds {

/// Closed-form CSL diffusion constant for a cylinder.
///
/// Returns eta in 1/(m^2 s) for the vibrational kinds and 1/s for rotation.
/// Linear in csl.lambda; strictly positive for lambda > 0; finite for any
/// positive (R, L, r_C) including extreme aspect ratios (scaled Bessel
/// functions plus series-protected bracket combinations).
double eta_cylinder(const CylinderGeometry& geom, DiffusionKind kind, const CslParams& csl);

/// Closed-form CSL diffusion constant for a cube.
///
/// kind must be VibPerp or Rot; a cube has no distinct symmetry axis, so
/// VibSym is rejected.
double eta_cube(const CubeGeometry& geom, DiffusionKind kind, const CslParams& csl);

namespace detail {

// Stable scalar building blocks of the closed forms, exposed for tests.
// Arguments: v = (L / 2 r_C)^2, w = R^2 / (2 r_C^2).

/// sqrt(pi) u erf(u) - 1 + e^(-u^2) with u = sqrt(v); ~v for small v.
double erf_bracket_a(double v);

/// 2(1 - e^(-v)) - sqrt(pi) u erf(u); ~-v^2/3 for small v.
double erf_bracket_q(double v);

/// 1 - e^(-w) I0(w); ~w for small w.
double bessel_deficit_i0(double w);

/// 1 - e^(-w) (I0(w) + I1(w)); ~w/2 for small w.
double bessel_deficit_i01(double w);

/// The curly bracket of the cylinder rotational closed form.
double cylinder_rot_bracket(double v, double w);

/// The curly bracket of the cube rotational closed form (negative for v > 0).
double cube_rot_bracket(double v);

}  // namespace detail

}  // namespace cslbounds
