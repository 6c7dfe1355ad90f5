#pragma once

#include <stdexcept>

namespace cslbounds {

/// Physical constants (CODATA 2018), SI units throughout.
namespace constants {

inline constexpr double hbar = 1.054571817e-34;          // [J s]
inline constexpr double k_boltzmann = 1.380649e-23;      // [J/K]
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // [kg]
inline constexpr double speed_of_light = 299792458.0;    // [m/s]

// Reference mass of the collapse-model coupling, fixed to 1 amu by the usual
// convention for nucleon-counted mass densities.
inline constexpr double csl_reference_mass = atomic_mass_unit;  // [kg]

}  // namespace constants

/// Absolute temperature, kelvin. Constructor rejects T <= 0.
struct Temperature {
    double kelvin;

    explicit Temperature(double kelvin_) : kelvin(kelvin_) {
        if (!(kelvin_ > 0.0)) {
            throw std::domain_error("Temperature must be positive");
        }
    }
};

/// Convert a pressure from millibar to pascal (1 mbar = 100 Pa exactly).
inline double pressure_mbar_to_pa(double p_mbar) {
    if (!(p_mbar >= 0.0)) {
        throw std::domain_error("pressure must be non-negative");
    }
    return p_mbar * 100.0;
}

/// Inverse thermal time beta = hbar / (2 k_B T), seconds.
inline double inverse_thermal_beta(Temperature t) {
    return constants::hbar / (2.0 * constants::k_boltzmann * t.kelvin);
}

}  // namespace cslbounds
