#pragma once

#include <stdexcept>

#include "cslbounds/constants.hpp"
#include "cslbounds/geometry.hpp"

namespace cslbounds {

/// Residual gas surrounding the trapped object.
struct GasEnvironment {
    Temperature temperature;
    double pressure;  // [Pa], zero allowed (perfect vacuum)
    double gas_mass;  // particle mass [kg]

    GasEnvironment(Temperature temperature_, double pressure_, double gas_mass_)
        : temperature(temperature_), pressure(pressure_), gas_mass(gas_mass_) {
        if (!(pressure_ >= 0.0)) throw std::domain_error("GasEnvironment: pressure must be >= 0");
        if (!(gas_mass_ > 0.0)) throw std::domain_error("GasEnvironment: gas mass must be positive");
    }
};

/// Gas damping coefficients of a cylinder, all proportional to pressure.
struct DampingSet {
    double gamma_vib;      // [1/s], motion perpendicular to the symmetry axis
    double gamma_vib_sym;  // [1/s], motion along the symmetry axis
    double d_phi;          // [N m s], rotational drag torque coefficient
    double epsilon_vib;    // m * gamma_vib [kg/s]
    double epsilon_rot;    // d_phi [N m s]
};

/// Diffuse-scattering gas damping for a cylinder.
DampingSet gas_damping(const CylinderGeometry& geom, const GasEnvironment& env);

/// Thermal contribution hbar |omega| epsilon coth(beta |omega|) of the noise
/// spectrum.  Below beta*omega = 1e-6 the high-temperature form
/// 2 k_B T epsilon is used so the coth pole never amplifies rounding.
/// omega = 0 is rejected; callers needing DC must use the high-T form
/// explicitly.
double thermal_psd_term(double epsilon, Temperature t, double omega);

}  // namespace cslbounds
