#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cslbounds/environment.hpp"
#include "cslbounds/geometry.hpp"

namespace cslbounds {

/// Laboratory levitated-cylinder experiment: a temperature measurement of
/// accuracy delta_t_accuracy bounds the collapse rate through the excess
/// temperature of the chosen mode.
struct LabScenario {
    CylinderGeometry geometry;
    GasEnvironment environment;
    double delta_t_accuracy;  // [K]
    DiffusionKind mode_kind;

    LabScenario(CylinderGeometry geometry_, GasEnvironment environment_, double delta_t_accuracy_,
                DiffusionKind mode_kind_)
        : geometry(geometry_), environment(environment_), delta_t_accuracy(delta_t_accuracy_),
          mode_kind(mode_kind_) {
        if (!(delta_t_accuracy_ > 0.0)) {
            throw std::domain_error("LabScenario: delta_t_accuracy must be positive");
        }
    }
};

/// Space-based free-fall test masses: a measured (or projected) torque noise
/// spectral density bounds the rotational collapse diffusion.
struct LisaScenario {
    CubeGeometry cube;
    double force_dns;                         // S_F [N^2/Hz]
    double torque_factor = 0.04;              // gas-noise torque/force ratio over L^2
    std::optional<double> torque_dns_override;  // S_tau [N^2 m^2/Hz]
    double differential_factor = 0.5;         // two-mass differential measurement
    double sided_factor = 2.0;                // two-sided -> one-sided conversion
    double mass_separation = 0.376;           // [m]; recorded, enters no formula

    LisaScenario(CubeGeometry cube_, double force_dns_) : cube(cube_), force_dns(force_dns_) {
        if (!(force_dns_ > 0.0)) throw std::domain_error("LisaScenario: force DNS must be positive");
    }
};

/// Sampled exclusion boundary lambda_max(r_C) with provenance.
class ExclusionCurve {
  public:
    struct Point {
        double r_c;
        double lambda_max;
    };

    ExclusionCurve(std::vector<Point> points, std::string scenario_id);

    const std::vector<Point>& points() const { return points_; }
    const std::string& scenario_id() const { return scenario_id_; }

    /// True when (lambda, r_c) lies above the curve (log-log interpolation
    /// between samples; r_c must be inside the sampled range).
    bool excludes(double lambda, double r_c) const;

  private:
    std::vector<Point> points_;
    std::string scenario_id_;
};

/// Largest collapse rate compatible with Delta T_CSL <= delta T at this r_C.
double lambda_max_temperature(const LabScenario& scn, double r_c);

/// One row of the geometry scan: excess temperatures of the three cylinder
/// modes at fixed mass as the aspect ratio varies.
struct GeometryScanRow {
    double ratio;  // R / L
    double radius;
    double length;
    double delta_t_vib_perp;
    double delta_t_vib_sym;
    double delta_t_rot;
};

/// Scan over aspect ratios R/L at fixed mass; R and L derive from
/// m = rho pi R^2 L.  Parallel over grid points (CSLBOUNDS_THREADS caps the
/// thread count).
std::vector<GeometryScanRow> scan_geometry(double mass, const std::vector<double>& ratio_grid,
                                           const GasEnvironment& env, const CslParams& csl,
                                           double density = 2200.0);

/// Torque DNS derived from the force DNS: torque_factor * S_F * L^2.
double lisa_torque_dns(const LisaScenario& scn);

/// Rotational collapse-rate bound from the torque noise.
double lisa_lambda_bound(const LisaScenario& scn, double r_c);

/// Vibrational collapse-rate bound from the force noise, same bookkeeping.
double lisa_lambda_bound_vibrational(const LisaScenario& scn, double r_c);

/// Torque-to-force sensitivity ratio eta_R / (eta_V L^2) for a cube.
double alpha_csl(const CubeGeometry& geom, double r_c);

ExclusionCurve exclusion_curve(const LabScenario& scn, const std::vector<double>& r_c_grid);
ExclusionCurve exclusion_curve(const LisaScenario& scn, const std::vector<double>& r_c_grid);

/// Log-spaced grid helper (inclusive endpoints, strictly increasing).
std::vector<double> log_grid(double lo, double hi, int points);

namespace detail {

/// Worker-pool map used by the scans; exposed for tests of the thread cap.
int scan_thread_count(int grid_size);

}  // namespace detail

}  // namespace cslbounds
