#include "cslbounds/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace cslbounds {

using nlohmann::json;

namespace {

const std::map<std::string, double>& species_mass_amu() {
    static const std::map<std::string, double> table{
        {"He-4", 4.002602}, {"He-3", 3.0160293}, {"H-2", 2.014101778},
        {"N-2", 28.0134},   {"Ar", 39.948},
    };
    return table;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ScenarioError(where + ": " + what);
}

// Every object level rejects keys outside its schema; keys starting with
// '_' are comments and ignored.
void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (!key.empty() && key[0] == '_') continue;
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) fail(where, "unknown key '" + key + "'");
    }
}

double get_number(const json& obj, const std::string& where, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
    if (!it->is_number()) fail(where + "." + key, "expected a number");
    const double value = it->get<double>();
    if (!std::isfinite(value)) fail(where + "." + key, "value must be finite");
    return value;
}

std::optional<double> opt_number(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) return std::nullopt;
    return get_number(obj, where, key);
}

int get_int(const json& obj, const std::string& where, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
    return v.get<int>();
}

bool get_bool(const json& obj, const std::string& where, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_boolean()) fail(where + "." + key, "expected a boolean");
    return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& where, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
    if (!it->is_string()) fail(where + "." + key, "expected a string");
    return it->get<std::string>();
}

DiffusionKind parse_mode(const std::string& mode, const std::string& where) {
    if (mode == "rotation") return DiffusionKind::Rot;
    if (mode == "vibration_perp") return DiffusionKind::VibPerp;
    if (mode == "vibration_sym") return DiffusionKind::VibSym;
    fail(where, "mode must be one of rotation, vibration_perp, vibration_sym");
}

template <typename Fn>
auto rethrow_as_scenario(const std::string& where, Fn&& fn) {
    try {
        return fn();
    } catch (const ScenarioError&) {
        throw;
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

ScenarioGeometry parse_geometry(const json& g) {
    const std::string where = "geometry";
    check_keys(g, where, {"shape", "radius_m", "length_m", "side_m", "mass_kg", "density_kg_m3"});
    ScenarioGeometry out;
    const std::string shape = get_string(g, where, "shape");
    if (shape == "cylinder") {
        out.shape = ScenarioGeometry::Shape::Cylinder;
    } else if (shape == "cube") {
        out.shape = ScenarioGeometry::Shape::Cube;
    } else {
        fail(where + ".shape", "must be 'cylinder' or 'cube'");
    }
    out.radius = opt_number(g, where, "radius_m");
    out.length = opt_number(g, where, "length_m");
    out.side = opt_number(g, where, "side_m");
    out.mass = opt_number(g, where, "mass_kg");
    out.density = opt_number(g, where, "density_kg_m3");
    if (out.mass && out.density) fail(where, "give either mass_kg or density_kg_m3, not both");
    if (!out.mass && !out.density) fail(where, "one of mass_kg or density_kg_m3 is required");
    if (out.shape == ScenarioGeometry::Shape::Cylinder) {
        if (out.side) fail(where, "side_m is a cube parameter");
    } else {
        if (out.radius || out.length) fail(where, "radius_m/length_m are cylinder parameters");
        if (!out.side) fail(where, "cube geometry requires side_m");
    }
    return out;
}

GasEnvironment parse_gas(const json& g) {
    const std::string where = "gas";
    check_keys(g, where, {"species", "mass_amu", "temperature_K", "pressure_mbar"});
    double mass_amu = 0.0;
    const bool has_species = g.contains("species");
    const bool has_mass = g.contains("mass_amu");
    if (has_species == has_mass) fail(where, "give exactly one of species or mass_amu");
    if (has_species) {
        const std::string species = get_string(g, where, "species");
        const auto it = species_mass_amu().find(species);
        if (it == species_mass_amu().end()) {
            std::string known;
            for (const auto& [name, _] : species_mass_amu()) {
                if (!known.empty()) known += ", ";
                known += name;
            }
            fail(where + ".species", "unknown species '" + species + "' (known: " + known + ")");
        }
        mass_amu = it->second;
    } else {
        mass_amu = get_number(g, where, "mass_amu");
    }
    const double temperature = get_number(g, where, "temperature_K");
    const double pressure_mbar = get_number(g, where, "pressure_mbar");
    return rethrow_as_scenario(where, [&] {
        return GasEnvironment(Temperature(temperature), pressure_mbar_to_pa(pressure_mbar),
                              mass_amu * constants::atomic_mass_unit);
    });
}

CavityConfig parse_cavity(const json& c) {
    const std::string where = "cavity";
    check_keys(c, where,
               {"kappa_rad_s", "delta0_rad_s", "chi_rad_s_m", "g_phi_rad_s_rad", "input_power_W",
                "wavelength_m"});
    const double wavelength = get_number(c, where, "wavelength_m");
    const double power = get_number(c, where, "input_power_W");
    return rethrow_as_scenario(where, [&] {
        CavityConfig cav{get_number(c, where, "kappa_rad_s"),
                         get_number(c, where, "delta0_rad_s"),
                         get_number(c, where, "chi_rad_s_m"),
                         get_number(c, where, "g_phi_rad_s_rad"),
                         photon_flux_from_power(power, wavelength),
                         2.0 * M_PI * constants::speed_of_light / wavelength};
        cav.validate();
        return cav;
    });
}

Scenario parse_document(const json& doc) {
    if (!doc.is_object()) throw ScenarioError("scenario: top level must be a JSON object");
    check_keys(doc, "scenario",
               {"csl", "geometry", "gas", "cavity", "mechanics", "bound", "lisa", "scan",
                "quadrature", "dns", "output"});

    Scenario s;
    if (doc.contains("csl")) {
        const auto& c = doc.at("csl");
        check_keys(c, "csl", {"lambda", "r_c"});
        rethrow_as_scenario("csl", [&] {
            s.csl.emplace(get_number(c, "csl", "lambda"), get_number(c, "csl", "r_c"));
            return 0;
        });
    }
    if (doc.contains("geometry")) s.geometry = parse_geometry(doc.at("geometry"));
    if (doc.contains("gas")) s.gas = parse_gas(doc.at("gas"));
    if (doc.contains("cavity")) s.cavity = parse_cavity(doc.at("cavity"));
    if (doc.contains("mechanics")) {
        const auto& m = doc.at("mechanics");
        check_keys(m, "mechanics", {"omega_m_rad_s", "omega_phi_rad_s"});
        s.omega_m = opt_number(m, "mechanics", "omega_m_rad_s");
        s.omega_phi = opt_number(m, "mechanics", "omega_phi_rad_s");
    }
    if (doc.contains("bound")) {
        const auto& b = doc.at("bound");
        check_keys(b, "bound", {"delta_t_accuracy_K", "mode"});
        BoundSpec spec{get_number(b, "bound", "delta_t_accuracy_K"),
                       parse_mode(get_string(b, "bound", "mode"), "bound.mode")};
        if (!(spec.delta_t_accuracy > 0.0)) fail("bound.delta_t_accuracy_K", "must be positive");
        s.bound = spec;
    }
    if (doc.contains("lisa")) {
        const auto& l = doc.at("lisa");
        check_keys(l, "lisa",
                   {"force_dns_N2_Hz", "torque_factor", "torque_dns_override_N2m2_Hz",
                    "differential_factor", "sided_factor", "mass_separation_m"});
        LisaSpec spec;
        spec.force_dns = get_number(l, "lisa", "force_dns_N2_Hz");
        if (!(spec.force_dns > 0.0)) fail("lisa.force_dns_N2_Hz", "must be positive");
        if (auto v = opt_number(l, "lisa", "torque_factor")) spec.torque_factor = *v;
        spec.torque_dns_override = opt_number(l, "lisa", "torque_dns_override_N2m2_Hz");
        if (auto v = opt_number(l, "lisa", "differential_factor")) spec.differential_factor = *v;
        if (auto v = opt_number(l, "lisa", "sided_factor")) spec.sided_factor = *v;
        if (auto v = opt_number(l, "lisa", "mass_separation_m")) spec.mass_separation = *v;
        if (!(spec.torque_factor >= 0.0)) fail("lisa.torque_factor", "must be >= 0");
        if (!(spec.differential_factor > 0.0)) fail("lisa.differential_factor", "must be positive");
        if (!(spec.sided_factor > 0.0)) fail("lisa.sided_factor", "must be positive");
        s.lisa = spec;
    }
    if (doc.contains("scan")) {
        const auto& sc = doc.at("scan");
        check_keys(sc, "scan",
                   {"r_c_min_m", "r_c_max_m", "r_c_points", "ratio_min", "ratio_max", "ratio_points"});
        if (auto v = opt_number(sc, "scan", "r_c_min_m")) s.scan.r_c_min = *v;
        if (auto v = opt_number(sc, "scan", "r_c_max_m")) s.scan.r_c_max = *v;
        s.scan.r_c_points = get_int(sc, "scan", "r_c_points", s.scan.r_c_points);
        if (auto v = opt_number(sc, "scan", "ratio_min")) s.scan.ratio_min = *v;
        if (auto v = opt_number(sc, "scan", "ratio_max")) s.scan.ratio_max = *v;
        s.scan.ratio_points = get_int(sc, "scan", "ratio_points", s.scan.ratio_points);
        if (!(s.scan.r_c_min > 0.0) || !(s.scan.r_c_max > s.scan.r_c_min) || s.scan.r_c_points < 2) {
            fail("scan", "need 0 < r_c_min_m < r_c_max_m and r_c_points >= 2");
        }
        if (!(s.scan.ratio_min > 0.0) || !(s.scan.ratio_max > s.scan.ratio_min) ||
            s.scan.ratio_points < 2) {
            fail("scan", "need 0 < ratio_min < ratio_max and ratio_points >= 2");
        }
    }
    if (doc.contains("quadrature")) {
        const auto& q = doc.at("quadrature");
        check_keys(q, "quadrature",
                   {"nodes_per_axis", "k_cutoff_factor", "fd_step_factor", "include_in_eta"});
        s.quadrature.nodes_per_axis = get_int(q, "quadrature", "nodes_per_axis", s.quadrature.nodes_per_axis);
        if (auto v = opt_number(q, "quadrature", "k_cutoff_factor")) s.quadrature.k_cutoff_factor = *v;
        if (auto v = opt_number(q, "quadrature", "fd_step_factor")) s.quadrature.fd_step_factor = *v;
        s.oracle_in_eta = get_bool(q, "quadrature", "include_in_eta", false);
        rethrow_as_scenario("quadrature", [&] {
            s.quadrature.validate();
            return 0;
        });
    }
    if (doc.contains("dns")) {
        const auto& d = doc.at("dns");
        check_keys(d, "dns", {"mode", "span_linewidths", "points", "include_radiation_pressure"});
        if (d.contains("mode")) {
            const std::string mode = get_string(d, "dns", "mode");
            if (mode == "vibration") {
                s.dns.mode = ModeKind::Vibration;
            } else if (mode == "rotation") {
                s.dns.mode = ModeKind::Rotation;
            } else {
                fail("dns.mode", "must be 'vibration' or 'rotation'");
            }
        }
        if (auto v = opt_number(d, "dns", "span_linewidths")) s.dns.span_linewidths = *v;
        s.dns.points = get_int(d, "dns", "points", s.dns.points);
        s.dns.include_radiation_pressure =
            get_bool(d, "dns", "include_radiation_pressure", s.dns.include_radiation_pressure);
        if (!(s.dns.span_linewidths > 0.0) || s.dns.points < 5) {
            fail("dns", "need span_linewidths > 0 and points >= 5");
        }
    }
    if (doc.contains("output")) {
        const auto& o = doc.at("output");
        check_keys(o, "output", {"path", "format"});
        if (o.contains("path")) s.output.path = get_string(o, "output", "path");
        if (o.contains("format")) {
            const std::string format = get_string(o, "output", "format");
            if (format == "csv") {
                s.output.format = OutputFormat::Csv;
            } else if (format == "json") {
                s.output.format = OutputFormat::Json;
            } else {
                fail("output.format", "must be 'csv' or 'json'");
            }
        }
    }
    return s;
}

void apply_override(json& doc, const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ScenarioError("--set expects key.path=value, got '" + spec + "'");
    }
    const std::string path = spec.substr(0, eq);
    const std::string raw = spec.substr(eq + 1);

    json value;
    try {
        value = json::parse(raw);
    } catch (const json::parse_error&) {
        value = raw;  // bare strings are allowed unquoted
    }

    json* node = &doc;
    std::istringstream keys(path);
    std::string key, next;
    std::getline(keys, key, '.');
    while (std::getline(keys, next, '.')) {
        if (!node->contains(key) || !(*node)[key].is_object()) (*node)[key] = json::object();
        node = &(*node)[key];
        key = next;
    }
    (*node)[key] = value;
}

Scenario parse_json_with_overrides(json doc, const std::vector<std::string>& overrides) {
    for (const auto& item : overrides) apply_override(doc, item);
    return parse_document(doc);
}

void position_from_offset(const std::string& text, std::size_t offset, std::size_t& line,
                          std::size_t& column) {
    line = 1;
    column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
}

}  // namespace

double ScenarioGeometry::resolved_mass() const {
    if (mass) return *mass;
    if (shape == Shape::Cylinder) {
        if (!radius || !length) {
            throw ScenarioError("geometry: density needs radius_m and length_m to derive the mass");
        }
        return *density * M_PI * *radius * *radius * *length;
    }
    return *density * *side * *side * *side;
}

CylinderGeometry ScenarioGeometry::cylinder() const {
    if (shape != Shape::Cylinder) throw ScenarioError("geometry: this operation needs a cylinder");
    if (!radius || !length) throw ScenarioError("geometry: cylinder requires radius_m and length_m");
    try {
        return CylinderGeometry(*radius, *length, resolved_mass());
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("geometry: ") + e.what());
    }
}

CubeGeometry ScenarioGeometry::cube() const {
    if (shape != Shape::Cube) throw ScenarioError("geometry: this operation needs a cube");
    try {
        return CubeGeometry(*side, resolved_mass());
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("geometry: ") + e.what());
    }
}

LabScenario Scenario::lab_scenario() const {
    if (!geometry) throw ScenarioError("scenario: missing geometry section");
    if (!gas) throw ScenarioError("scenario: missing gas section (needed for damping)");
    if (!bound) throw ScenarioError("scenario: missing bound section (delta_t_accuracy_K, mode)");
    return LabScenario(geometry->cylinder(), *gas, bound->delta_t_accuracy, bound->mode);
}

LisaScenario Scenario::lisa_scenario() const {
    if (!geometry) throw ScenarioError("scenario: missing geometry section");
    if (!lisa) throw ScenarioError("scenario: missing lisa section");
    LisaScenario scn(geometry->cube(), lisa->force_dns);
    scn.torque_factor = lisa->torque_factor;
    scn.torque_dns_override = lisa->torque_dns_override;
    scn.differential_factor = lisa->differential_factor;
    scn.sided_factor = lisa->sided_factor;
    scn.mass_separation = lisa->mass_separation;
    return scn;
}

Scenario parse_scenario_text(const std::string& text, const std::vector<std::string>& overrides) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 0, column = 0;
        position_from_offset(text, e.byte > 0 ? e.byte - 1 : 0, line, column);
        std::ostringstream msg;
        msg << "scenario: JSON parse error at line " << line << ", column " << column;
        throw ScenarioError(msg.str());
    }
    return parse_json_with_overrides(std::move(doc), overrides);
}

Scenario load_scenario(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open scenario file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in) throw std::ios_base::failure("read failed: " + path);
    return parse_scenario_text(buffer.str(), overrides);
}

}  // namespace cslbounds
