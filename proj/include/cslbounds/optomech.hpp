#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cslbounds/constants.hpp"
#include "cslbounds/environment.hpp"

namespace cslbounds {

/// Driven cavity parameters.
struct CavityConfig {
    double kappa;              // amplitude damping rate [1/s]
    double delta0;             // bare detuning [rad/s]
    double chi;                // vibrational coupling [rad/(s m)]
    double g_phi;              // rotational coupling [rad/(s rad)]
    double input_photon_flux;  // |alpha_in|^2 [photons/s]
    double omega_c;            // cavity frequency [rad/s]

    void validate() const {
        if (!(kappa > 0.0)) throw std::domain_error("CavityConfig: kappa must be positive");
        if (!(chi >= 0.0) || !(g_phi >= 0.0)) throw std::domain_error("CavityConfig: couplings must be >= 0");
        if (!(input_photon_flux >= 0.0)) throw std::domain_error("CavityConfig: photon flux must be >= 0");
    }
};

/// Photon flux from optical input power and wavelength.
inline double photon_flux_from_power(double power_w, double wavelength_m) {
    if (!(power_w >= 0.0)) throw std::domain_error("input power must be >= 0");
    if (!(wavelength_m > 0.0)) throw std::domain_error("wavelength must be positive");
    const double omega_c = 2.0 * M_PI * constants::speed_of_light / wavelength_m;
    return power_w / (constants::hbar * omega_c);
}

enum class ModeKind { Vibration, Rotation };

/// One mechanical degree of freedom as seen by the noise spectrum.
///
/// inertia and coupling follow the vibration/rotation dictionary: mass and
/// chi for vibration, moment of inertia and g_phi for rotation.
/// bare_damping is gamma_m for vibration and D_phi / I for rotation;
/// epsilon is m gamma_m respectively D_phi.
struct MechanicalMode {
    ModeKind kind;
    double resonance;     // omega_m or omega_phi [rad/s]
    double inertia;       // m [kg] or I [kg m^2]
    double bare_damping;  // [1/s]
    double coupling;      // chi or g_phi
    double epsilon;       // m gamma_m [kg/s] or D_phi [N m s]

    void validate() const {
        if (!(resonance > 0.0)) throw std::domain_error("MechanicalMode: resonance must be positive");
        if (!(inertia > 0.0)) throw std::domain_error("MechanicalMode: inertia must be positive");
        if (!(bare_damping >= 0.0)) throw std::domain_error("MechanicalMode: damping must be >= 0");
    }
};

MechanicalMode make_vibration_mode(double mass, double omega_m, double gamma_m, double chi);
MechanicalMode make_rotation_mode(double inertia, double omega_phi, double d_phi, double g_phi);

/// Self-consistent static solution of the driven cavity.
struct SteadyState {
    double n_cav;      // intracavity photon number
    double delta_eff;  // shifted detuning [rad/s]
    double mean_x;     // static displacement [m]
    double mean_phi;   // static rotation [rad]
};

/// Solves n = 2 kappa flux / (kappa^2 + Delta^2) together with the static
/// radiation-pressure shifts by damped fixed-point iteration (relaxation
/// 0.5, relative tolerance 1e-12, at most 1000 steps).  Throws
/// BistabilityError when the iteration fails to settle.
SteadyState solve_steady_state(const CavityConfig& cavity, const MechanicalMode& vib,
                               const MechanicalMode& rot);

struct EffectiveParams {
    double omega_eff_sq;  // effective resonance squared [rad^2/s^2]
    double gamma_eff;     // effective damping [1/s]
};

/// Frequency-dependent optical-spring shift of the mechanical parameters.
/// |alpha|^2 is taken as the intracavity photon number of the steady state.
EffectiveParams effective_params(const CavityConfig& cavity, const MechanicalMode& mode,
                                 const SteadyState& ss, double omega);

enum class SpectrumConvention { TwoSided, OneSided };

struct Spectrum {
    std::vector<double> frequencies;  // [rad/s], ordered
    std::vector<double> values;       // [m^2/Hz] or [rad^2/Hz]
    ModeKind kind;
    SpectrumConvention convention;
};

struct DnsOptions {
    /// Include the radiation-pressure term of the numerator.  The drive
    /// contribution is calibrated and subtracted in the measurement
    /// protocol, so bound computations run with it off.
    bool include_radiation_pressure = true;
};

/// Displacement (angle) noise spectrum, two-sided convention.
///
/// env supplies only the bath temperature; the damping is carried by the
/// mode itself.  eta is the CSL diffusion constant matching mode.kind.
/// Frequency grids must not contain omega = 0.
Spectrum dns(const MechanicalMode& mode, const CavityConfig& cavity, const SteadyState& ss,
             const GasEnvironment& env, double eta, const std::vector<double>& omegas,
             const DnsOptions& options = {});

/// One-sided view of a two-sided spectrum (values doubled).
Spectrum to_one_sided(const Spectrum& s);

/// CSL excess temperature Delta T = hbar^2 eta / (2 k_B epsilon) [K].
double delta_t_csl(const MechanicalMode& mode, double eta);

/// Log-spaced grid of 'points' frequencies covering
/// [center - span*width, center + span*width], dense near the center.
std::vector<double> make_resonance_grid(double center, double width, double span = 20.0,
                                        int points = 4001);

}  // namespace cslbounds
