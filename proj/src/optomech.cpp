#include "cslbounds/optomech.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cslbounds/errors.hpp"

namespace cslbounds {

MechanicalMode make_vibration_mode(double mass, double omega_m, double gamma_m, double chi) {
    MechanicalMode mode{ModeKind::Vibration, omega_m, mass, gamma_m, chi, mass * gamma_m};
    mode.validate();
    return mode;
}

MechanicalMode make_rotation_mode(double inertia, double omega_phi, double d_phi, double g_phi) {
    MechanicalMode mode{ModeKind::Rotation, omega_phi, inertia, d_phi / inertia, g_phi, d_phi};
    mode.validate();
    return mode;
}

SteadyState solve_steady_state(const CavityConfig& cavity, const MechanicalMode& vib,
                               const MechanicalMode& rot) {
    cavity.validate();
    vib.validate();
    rot.validate();

    const double hbar = constants::hbar;
    const double x_gain = hbar * cavity.chi / (vib.inertia * vib.resonance * vib.resonance);
    const double phi_gain = hbar * cavity.g_phi / (rot.inertia * rot.resonance * rot.resonance);
    const double tol = 1e-12 * std::max(std::abs(cavity.delta0), cavity.kappa);

    double delta = cavity.delta0;
    double prev = delta;
    for (int it = 0; it < 1000; ++it) {
        const double n = 2.0 * cavity.kappa * cavity.input_photon_flux /
                         (cavity.kappa * cavity.kappa + delta * delta);
        const double target = cavity.delta0 - cavity.g_phi * phi_gain * n - cavity.chi * x_gain * n;
        const double next = 0.5 * delta + 0.5 * target;
        prev = delta;
        delta = next;
        if (std::abs(delta - prev) <= tol) {
            const double n_final = 2.0 * cavity.kappa * cavity.input_photon_flux /
                                   (cavity.kappa * cavity.kappa + delta * delta);
            return {n_final, cavity.delta0 - cavity.g_phi * phi_gain * n_final -
                                 cavity.chi * x_gain * n_final,
                    x_gain * n_final, phi_gain * n_final};
        }
    }
    std::ostringstream msg;
    msg << "solve_steady_state: no fixed point after 1000 iterations (optical bistability?); "
        << "last detunings " << prev << ", " << delta;
    throw BistabilityError(msg.str(), delta, prev);
}

EffectiveParams effective_params(const CavityConfig& cavity, const MechanicalMode& mode,
                                 const SteadyState& ss, double omega) {
    const double hbar = constants::hbar;
    const double kappa = cavity.kappa;
    const double delta = ss.delta_eff;
    const double g = (mode.kind == ModeKind::Vibration) ? cavity.chi : cavity.g_phi;

    const double dm = kappa * kappa + (delta - omega) * (delta - omega);
    const double dp = kappa * kappa + (delta + omega) * (delta + omega);
    const double den = mode.inertia * dm * dp;

    const double omega_eff_sq =
        mode.resonance * mode.resonance -
        2.0 * hbar * g * g * ss.n_cav * delta * (kappa * kappa + delta * delta - omega * omega) / den;
    const double gamma_eff = mode.bare_damping + 4.0 * hbar * g * g * ss.n_cav * kappa * delta / den;
    return {omega_eff_sq, gamma_eff};
}

Spectrum dns(const MechanicalMode& mode, const CavityConfig& cavity, const SteadyState& ss,
             const GasEnvironment& env, double eta, const std::vector<double>& omegas,
             const DnsOptions& options) {
    mode.validate();
    if (!(eta >= 0.0)) throw std::domain_error("dns: eta must be >= 0");

    const double hbar = constants::hbar;
    const double g = (mode.kind == ModeKind::Vibration) ? cavity.chi : cavity.g_phi;

    Spectrum out;
    out.kind = mode.kind;
    out.convention = SpectrumConvention::TwoSided;
    out.frequencies = omegas;
    out.values.reserve(omegas.size());

    for (const double omega : omegas) {
        if (omega == 0.0) {
            throw std::domain_error("dns: omega = 0 not admitted (thermal term pole)");
        }
        const EffectiveParams eff = effective_params(cavity, mode, ss, omega);
        const double dm = cavity.kappa * cavity.kappa +
                          (ss.delta_eff - omega) * (ss.delta_eff - omega);
        const double heating = thermal_psd_term(mode.epsilon, env.temperature, omega) +
                               hbar * hbar * eta;
        double numerator = dm * heating;
        if (options.include_radiation_pressure) {
            numerator += 2.0 * hbar * hbar * ss.n_cav * cavity.kappa * g * g;
        }
        const double resonant = (eff.omega_eff_sq - omega * omega);
        const double denominator =
            mode.inertia * mode.inertia * dm *
            (resonant * resonant + eff.gamma_eff * eff.gamma_eff * omega * omega);
        out.values.push_back(numerator / denominator);
    }
    return out;
}

Spectrum to_one_sided(const Spectrum& s) {
    if (s.convention == SpectrumConvention::OneSided) return s;
    Spectrum out = s;
    out.convention = SpectrumConvention::OneSided;
    for (double& value : out.values) value *= 2.0;
    return out;
}

double delta_t_csl(const MechanicalMode& mode, double eta) {
    if (!(eta >= 0.0)) throw std::domain_error("delta_t_csl: eta must be >= 0");
    if (!(mode.epsilon > 0.0)) {
        throw std::domain_error(
            "delta_t_csl: epsilon = 0 (no gas damping); the excess temperature is defined "
            "relative to the gas-damping channel, so a finite pressure is required");
    }
    const double hbar = constants::hbar;
    return hbar * hbar * eta / (2.0 * constants::k_boltzmann * mode.epsilon);
}

std::vector<double> make_resonance_grid(double center, double width, double span, int points) {
    if (!(center > 0.0) || !(width > 0.0)) {
        throw std::domain_error("make_resonance_grid: center and width must be positive");
    }
    if (points < 5 || points % 2 == 0) {
        throw std::domain_error("make_resonance_grid: points must be odd and >= 5");
    }
    const int half = (points - 1) / 2;
    const double lo = std::log(width * 1e-4);
    const double hi = std::log(width * span);
    std::vector<double> grid;
    grid.reserve(points);
    for (int i = half - 1; i >= 0; --i) {
        grid.push_back(center - std::exp(lo + (hi - lo) * i / (half - 1.0)));
    }
    grid.push_back(center);
    for (int i = 0; i < half; ++i) {
        grid.push_back(center + std::exp(lo + (hi - lo) * i / (half - 1.0)));
    }
    std::sort(grid.begin(), grid.end());
    return grid;
}

}  // namespace cslbounds
