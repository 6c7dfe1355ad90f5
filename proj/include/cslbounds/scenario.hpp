#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cslbounds/bounds.hpp"
#include "cslbounds/geometry.hpp"
#include "cslbounds/optomech.hpp"
#include "cslbounds/output.hpp"
#include "cslbounds/quadrature_oracle.hpp"

namespace cslbounds {

/// Configuration rejected at load time; the message names the offending key.
class ScenarioError : public std::runtime_error {
  public:
    explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

struct ScenarioGeometry {
    enum class Shape { Cylinder, Cube } shape = Shape::Cylinder;
    std::optional<double> radius;   // [m]
    std::optional<double> length;   // [m]
    std::optional<double> side;     // [m]
    std::optional<double> mass;     // [kg]
    std::optional<double> density;  // [kg/m^3]

    /// Mass as given, or derived from density and full dimensions.
    double resolved_mass() const;
    CylinderGeometry cylinder() const;
    CubeGeometry cube() const;
};

struct BoundSpec {
    double delta_t_accuracy;  // [K]
    DiffusionKind mode;
};

struct LisaSpec {
    double force_dns;  // [N^2/Hz]
    double torque_factor = 0.04;
    std::optional<double> torque_dns_override;  // [N^2 m^2/Hz]
    double differential_factor = 0.5;
    double sided_factor = 2.0;
    double mass_separation = 0.376;  // [m]
};

struct ScanSpec {
    double r_c_min = 1e-9;  // [m]
    double r_c_max = 1e-3;  // [m]
    int r_c_points = 200;
    double ratio_min = 1e-2;
    double ratio_max = 1e4;
    int ratio_points = 121;
};

struct DnsSpec {
    ModeKind mode = ModeKind::Vibration;
    double span_linewidths = 20.0;
    int points = 4001;
    bool include_radiation_pressure = true;
};

struct OutputSpec {
    std::string path = "-";
    OutputFormat format = OutputFormat::Csv;
};

/// A validated scenario file.  Sections are optional; each subcommand
/// demands the sections it needs.
struct Scenario {
    std::optional<CslParams> csl;
    std::optional<ScenarioGeometry> geometry;
    std::optional<GasEnvironment> gas;
    std::optional<CavityConfig> cavity;
    std::optional<double> omega_m;    // [rad/s]
    std::optional<double> omega_phi;  // [rad/s]
    std::optional<BoundSpec> bound;
    std::optional<LisaSpec> lisa;
    ScanSpec scan;
    QuadratureConfig quadrature;
    bool oracle_in_eta = false;
    DnsSpec dns;
    OutputSpec output;

    LabScenario lab_scenario() const;
    LisaScenario lisa_scenario() const;
};

/// Parse and validate a scenario file.  overrides are dotted key paths
/// ("csl.r_c=2e-7") applied before validation; values parse as JSON scalars.
Scenario load_scenario(const std::string& path, const std::vector<std::string>& overrides = {});

/// Same, from an in-memory JSON document.
Scenario parse_scenario_text(const std::string& text, const std::vector<std::string>& overrides = {});

}  // namespace cslbounds
