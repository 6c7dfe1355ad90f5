#include "cslbounds/environment.hpp"

#include <cmath>

namespace cslbounds {

DampingSet gas_damping(const CylinderGeometry& geom, const GasEnvironment& env) {
    const double kb_t = constants::k_boltzmann * env.temperature.kelvin;
    const double R = geom.radius;
    const double L = geom.length;
    const double aspect = L / R;
    const double p = env.pressure;

    const double gamma_vib = p / geom.mass * std::sqrt(2.0 * M_PI * env.gas_mass / kb_t) * R * R *
                             (1.0 + 1.5 * aspect * (1.0 + M_PI / 6.0));
    const double gamma_vib_sym = p / geom.mass * std::sqrt(8.0 * M_PI * env.gas_mass / kb_t) * R * R *
                                 (1.0 + M_PI / 4.0 + 0.5 * aspect);
    const double d_phi = p * std::sqrt(M_PI * env.gas_mass / (2.0 * kb_t)) * R * R * R * R *
                         (1.0 + M_PI / 4.0 + aspect + 0.5 * aspect * aspect +
                          0.25 * aspect * aspect * aspect * (1.0 + M_PI / 6.0));

    return {gamma_vib, gamma_vib_sym, d_phi, geom.mass * gamma_vib, d_phi};
}

double thermal_psd_term(double epsilon, Temperature t, double omega) {
    if (omega == 0.0) {
        throw std::domain_error(
            "thermal_psd_term: omega = 0 hits the coth pole; use the high-temperature form "
            "2 k_B T epsilon for the DC value");
    }
    if (!(epsilon >= 0.0)) throw std::domain_error("thermal_psd_term: epsilon must be >= 0");

    const double beta = inverse_thermal_beta(t);
    const double x = beta * std::abs(omega);
    if (x < 1e-6) {
        return 2.0 * constants::k_boltzmann * t.kelvin * epsilon;
    }
    return constants::hbar * std::abs(omega) * epsilon / std::tanh(x);
}

}  // namespace cslbounds
