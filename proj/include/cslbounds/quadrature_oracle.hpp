#pragma once

#include "cslbounds/geometry.hpp"

namespace cslbounds {

/// Controls for the k-space quadrature oracle.
struct QuadratureConfig {
    int nodes_per_axis = 160;     // Gauss-Legendre nodes per axis (>= 32)
    double k_cutoff_factor = 8.0; // integration box |k_i| <= k_cutoff_factor / r_c (>= 6)
    double fd_step_factor = 1e-5; // relative step of the form-factor derivatives ((0, 1e-3])

    void validate() const;
};

/// Axis of rotation for the rotational integrand (the cube isotropy check
/// evaluates all three; the closed forms use X).
enum class RotationAxis { X, Y, Z };

/// Direct numerical evaluation of the defining k-space integrals
///
///   eta_V = lambda r_C^3 / (pi^(3/2) m0^2) Int d^3k e^(-r_C^2 k^2) k_sel^2 |mu(k)|^2
///   eta_R = ... |k_a d_b mu - k_b d_a mu|^2
///
/// by tensor-product Gauss-Legendre over one octant (the integrand is even
/// in every component).  Angular-momentum derivatives use central finite
/// differences with one Richardson extrapolation step.  The node count is
/// doubled until two refinements agree within ten times the 1e-4 target;
/// otherwise an OracleConvergenceError is thrown.  Independent of the
/// closed forms: the cylinder cross-section form factor is obtained by 1-D
/// radial quadrature of the disc integral, not from Bessel functions.
double eta_numeric_oracle(const CylinderGeometry& geom, DiffusionKind kind,
                          const CslParams& csl, const QuadratureConfig& cfg = {},
                          RotationAxis axis = RotationAxis::X);

double eta_numeric_oracle(const CubeGeometry& geom, DiffusionKind kind,
                          const CslParams& csl, const QuadratureConfig& cfg = {},
                          RotationAxis axis = RotationAxis::X);

namespace detail {

/// Disc form factor f(s) = (4/pi) Int_0^(pi/2) cos^2(t) cos(s sin t) dt,
/// equal to 1 at s = 0.  Exposed for tests.
double disc_form_factor(double s, int radial_nodes);

}  // namespace detail

}  // namespace cslbounds
