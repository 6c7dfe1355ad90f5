#include "cslbounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cslbounds/diffusion.hpp"
#include "cslbounds/optomech.hpp"

namespace cslbounds {

namespace detail {

int scan_thread_count(int grid_size) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* cap = std::getenv("CSLBOUNDS_THREADS")) {
        const int requested = std::atoi(cap);
        if (requested >= 1) hw = std::min(hw, requested);
    }
    return std::max(1, std::min(hw, grid_size));
}

}  // namespace detail

namespace {

// Run fn(i) for i in [0, n) across the scan worker pool, order-stable.
// The first exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
    const int workers = detail::scan_thread_count(n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([t, n, workers, &fn, &error, &error_mutex] {
            try {
                for (int i = t; i < n; i += workers) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

double epsilon_for_kind(const CylinderGeometry& geom, const GasEnvironment& env,
                        DiffusionKind kind) {
    const DampingSet damping = gas_damping(geom, env);
    switch (kind) {
        case DiffusionKind::VibPerp: return damping.epsilon_vib;
        case DiffusionKind::VibSym: return geom.mass * damping.gamma_vib_sym;
        case DiffusionKind::Rot: return damping.epsilon_rot;
    }
    return 0.0;
}

double delta_t_at_unit_lambda(const LabScenario& scn, double r_c) {
    const CslParams unit{1.0, r_c};
    const double eta = eta_cylinder(scn.geometry, scn.mode_kind, unit);
    const double epsilon = epsilon_for_kind(scn.geometry, scn.environment, scn.mode_kind);
    if (!(epsilon > 0.0)) {
        throw std::domain_error(
            "lambda_max_temperature: zero gas damping (P = 0); the temperature bound is "
            "defined relative to the gas-damping channel");
    }
    const double hbar = constants::hbar;
    return hbar * hbar * eta / (2.0 * constants::k_boltzmann * epsilon);
}

double effective_torque_dns(const LisaScenario& scn) {
    return scn.torque_dns_override ? *scn.torque_dns_override : lisa_torque_dns(scn);
}

}  // namespace

ExclusionCurve::ExclusionCurve(std::vector<Point> points, std::string scenario_id)
    : points_(std::move(points)), scenario_id_(std::move(scenario_id)) {
    if (points_.empty()) throw std::invalid_argument("ExclusionCurve: empty point set");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].lambda_max) || !(points_[i].lambda_max > 0.0)) {
            throw std::invalid_argument("ExclusionCurve: lambda_max must be finite and positive");
        }
        if (i > 0 && !(points_[i].r_c > points_[i - 1].r_c)) {
            throw std::invalid_argument("ExclusionCurve: r_c grid must be strictly increasing");
        }
    }
}

bool ExclusionCurve::excludes(double lambda, double r_c) const {
    if (!(r_c >= points_.front().r_c && r_c <= points_.back().r_c)) {
        throw std::domain_error("ExclusionCurve::excludes: r_c outside the sampled range");
    }
    auto hi = std::lower_bound(points_.begin(), points_.end(), r_c,
                               [](const Point& p, double value) { return p.r_c < value; });
    if (hi == points_.begin()) return lambda > hi->lambda_max;
    const auto lo = hi - 1;
    if (hi == points_.end()) return lambda > lo->lambda_max;
    const double t = (std::log(r_c) - std::log(lo->r_c)) / (std::log(hi->r_c) - std::log(lo->r_c));
    const double lmax = std::exp(std::log(lo->lambda_max) * (1.0 - t) + std::log(hi->lambda_max) * t);
    return lambda > lmax;
}

double lambda_max_temperature(const LabScenario& scn, double r_c) {
    // Delta T is exactly linear in lambda, so the bound is a single division.
    return scn.delta_t_accuracy / delta_t_at_unit_lambda(scn, r_c);
}

std::vector<GeometryScanRow> scan_geometry(double mass, const std::vector<double>& ratio_grid,
                                           const GasEnvironment& env, const CslParams& csl,
                                           double density) {
    if (!(mass > 0.0)) throw std::domain_error("scan_geometry: mass must be positive");
    if (!(density > 0.0)) throw std::domain_error("scan_geometry: density must be positive");

    std::vector<GeometryScanRow> rows(ratio_grid.size());
    parallel_for(static_cast<int>(ratio_grid.size()), [&](int i) {
        const double ratio = ratio_grid[i];
        if (!(ratio > 0.0)) throw std::domain_error("scan_geometry: ratios must be positive");
        const double radius = std::cbrt(mass * ratio / (density * M_PI));
        const double length = radius / ratio;
        const CylinderGeometry geom{radius, length, mass};
        const DampingSet damping = gas_damping(geom, env);

        const double hbar = constants::hbar;
        const double kb2 = 2.0 * constants::k_boltzmann;
        rows[i] = {ratio,
                   radius,
                   length,
                   hbar * hbar * eta_cylinder(geom, DiffusionKind::VibPerp, csl) /
                       (kb2 * geom.mass * damping.gamma_vib),
                   hbar * hbar * eta_cylinder(geom, DiffusionKind::VibSym, csl) /
                       (kb2 * geom.mass * damping.gamma_vib_sym),
                   hbar * hbar * eta_cylinder(geom, DiffusionKind::Rot, csl) /
                       (kb2 * damping.d_phi)};
    });
    return rows;
}

double lisa_torque_dns(const LisaScenario& scn) {
    return scn.torque_factor * scn.force_dns * scn.cube.side * scn.cube.side;
}

double lisa_lambda_bound(const LisaScenario& scn, double r_c) {
    const CslParams unit{1.0, r_c};
    const double eta = eta_cube(scn.cube, DiffusionKind::Rot, unit);
    const double hbar = constants::hbar;
    return effective_torque_dns(scn) /
           (scn.differential_factor * scn.sided_factor * hbar * hbar * eta);
}

double lisa_lambda_bound_vibrational(const LisaScenario& scn, double r_c) {
    const CslParams unit{1.0, r_c};
    const double eta = eta_cube(scn.cube, DiffusionKind::VibPerp, unit);
    const double hbar = constants::hbar;
    return scn.force_dns / (scn.differential_factor * scn.sided_factor * hbar * hbar * eta);
}

double alpha_csl(const CubeGeometry& geom, double r_c) {
    const CslParams unit{1.0, r_c};
    return eta_cube(geom, DiffusionKind::Rot, unit) /
           (eta_cube(geom, DiffusionKind::VibPerp, unit) * geom.side * geom.side);
}

namespace {

template <typename Scenario, typename Fn>
ExclusionCurve map_curve(const Scenario&, const std::vector<double>& r_c_grid, Fn&& fn,
                         std::string id) {
    if (r_c_grid.empty()) throw std::invalid_argument("exclusion_curve: empty grid");
    for (std::size_t i = 1; i < r_c_grid.size(); ++i) {
        if (!(r_c_grid[i] > r_c_grid[i - 1])) {
            throw std::invalid_argument("exclusion_curve: r_c grid must be strictly increasing");
        }
    }
    std::vector<ExclusionCurve::Point> points(r_c_grid.size());
    parallel_for(static_cast<int>(r_c_grid.size()), [&](int i) {
        points[i] = {r_c_grid[i], fn(r_c_grid[i])};
    });
    return ExclusionCurve(std::move(points), std::move(id));
}

}  // namespace

ExclusionCurve exclusion_curve(const LabScenario& scn, const std::vector<double>& r_c_grid) {
    const char* mode = scn.mode_kind == DiffusionKind::Rot
                           ? "rotation"
                           : (scn.mode_kind == DiffusionKind::VibSym ? "vibration-sym" : "vibration-perp");
    return map_curve(scn, r_c_grid,
                     [&](double r_c) { return lambda_max_temperature(scn, r_c); },
                     std::string("lab-cylinder/") + mode);
}

ExclusionCurve exclusion_curve(const LisaScenario& scn, const std::vector<double>& r_c_grid) {
    return map_curve(scn, r_c_grid, [&](double r_c) { return lisa_lambda_bound(scn, r_c); },
                     "lisa-cube/rotation");
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2) {
        throw std::invalid_argument("log_grid: need 0 < lo < hi and points >= 2");
    }
    std::vector<double> grid(points);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < points; ++i) {
        grid[i] = std::exp(llo + (lhi - llo) * i / (points - 1.0));
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

}  // namespace cslbounds
