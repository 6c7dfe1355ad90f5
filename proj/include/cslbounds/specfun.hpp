#pragma once

namespace cslbounds::specfun {

/// Exponentially scaled modified Bessel function e^(-x) I_n(x), n in {0, 1}.
///
/// Valid for any finite x >= 0 without overflow; the argument reaches
/// R^2/2r_C^2 ~ 1e12 and beyond in the diffusion-constant closed forms.
/// Relative error <= ~1e-13 (power series below x = 30, asymptotic
/// expansion above, where the optimally truncated tail is ~e^(-2x)).
double bessel_i_scaled(int n, double x);

/// Error function with exact saturation to +-1 for |x| >= 40.
///
/// The saturation keeps downstream expressions of the form 1 - erf(x)*...
/// free of stray last-ulp noise deep in the saturated regime.
double erf(double x);

}  // namespace cslbounds::specfun
