#include "cslbounds/quadrature_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cslbounds/constants.hpp"
#include "cslbounds/errors.hpp"

namespace cslbounds {

namespace {

constexpr double kOracleTarget = 1e-4;

// Gauss-Legendre nodes and weights on [0, 1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre_unit(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double z1 = 2.0, pp = 0.0;
        while (std::abs(z - z1) > 1e-15) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        }
        x[i] = 0.5 * (1.0 - z);
        x[n - 1 - i] = 0.5 * (1.0 + z);
        w[i] = 1.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

double sinc(double t) {
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

// Cached disc form factor: series below s = 0.5, cubic 4-point Lagrange
// interpolation on a uniform grid above.  Rebuilt per oracle invocation, so
// concurrent scans over parameter grids never share mutable state.
class DiscFormFactorTable {
  public:
    explicit DiscFormFactorTable(double s_max) {
        s_max_ = std::max(s_max, 2.0);
        step_ = 0.04;
        const int n = static_cast<int>(s_max_ / step_) + 4;
        const int radial = std::max(200, static_cast<int>(0.75 * s_max_) + 32);
        values_.resize(n);
        for (int i = 0; i < n; ++i) values_[i] = detail::disc_form_factor(i * step_, radial);
    }

    double operator()(double s) const {
        if (s < 0.5) {
            // 2 J1(s)/s power series; four terms suffice below 0.5
            const double q = 0.25 * s * s;
            return 1.0 - q / 2.0 + q * q / 12.0 - q * q * q / 144.0 + q * q * q * q / 2880.0;
        }
        const double t = s / step_;
        int i = static_cast<int>(t);
        i = std::clamp(i, 1, static_cast<int>(values_.size()) - 3);
        const double f = t - i;
        const double fm = f - 1.0, fp = f + 1.0, f2 = f - 2.0;
        return -values_[i - 1] * f * fm * f2 / 6.0 + values_[i] * fp * fm * f2 / 2.0 -
               values_[i + 1] * fp * f * f2 / 2.0 + values_[i + 2] * fp * f * fm / 6.0;
    }

  private:
    double s_max_ = 0.0;
    double step_ = 0.0;
    std::vector<double> values_;
};

struct Vec3 {
    double x, y, z;
};

int axis_index(RotationAxis a) {
    switch (a) {
        case RotationAxis::X: return 0;
        case RotationAxis::Y: return 1;
        default: return 2;
    }
}

class OracleIntegrand {
  public:
    // mu(k) normalized to mass 1 at k = 0.
    std::function<double(const Vec3&)> mu;
    DiffusionKind kind = DiffusionKind::VibPerp;
    RotationAxis axis = RotationAxis::X;
    double fd_floor = 0.0;
    double fd_factor = 1e-5;

    double operator()(const Vec3& k) const {
        if (kind != DiffusionKind::Rot) {
            const double ksel = (kind == DiffusionKind::VibPerp) ? k.x : k.z;
            const double m = mu(k);
            return ksel * ksel * m * m;
        }
        // component pair (a, b) orthogonal to the rotation axis
        const int ia = (axis_index(axis) + 1) % 3;
        const int ib = (axis_index(axis) + 2) % 3;
        const double ka = comp(k, ia), kb = comp(k, ib);
        const double kn = std::sqrt(k.x * k.x + k.y * k.y + k.z * k.z);
        const double h = fd_factor * kn + fd_floor;
        const double da = partial(k, ia, h);
        const double db = partial(k, ib, h);
        const double lop = ka * db - kb * da;
        return lop * lop;
    }

  private:
    static double comp(const Vec3& k, int i) { return i == 0 ? k.x : (i == 1 ? k.y : k.z); }

    static Vec3 shifted(const Vec3& k, int i, double d) {
        Vec3 s = k;
        (i == 0 ? s.x : (i == 1 ? s.y : s.z)) += d;
        return s;
    }

    // central difference with one Richardson step: (4 D(h/2) - D(h)) / 3
    double partial(const Vec3& k, int i, double h) const {
        const double d1 = (mu(shifted(k, i, h)) - mu(shifted(k, i, -h))) / (2.0 * h);
        const double d2 = (mu(shifted(k, i, 0.5 * h)) - mu(shifted(k, i, -0.5 * h))) / h;
        return (4.0 * d2 - d1) / 3.0;
    }
};

double integrate_octant(const OracleIntegrand& f, double k_max, double rc, int n) {
    std::vector<double> x, w;
    gauss_legendre_unit(n, x, w);
    std::vector<double> nodes(n), gw(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = x[i] * k_max;
        gw[i] = w[i] * k_max * std::exp(-rc * rc * nodes[i] * nodes[i]);
    }
    double total = 0.0;
    for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) {
            double row = 0.0;
            for (int iz = 0; iz < n; ++iz) {
                row += gw[iz] * f({nodes[ix], nodes[iy], nodes[iz]});
            }
            total += gw[ix] * gw[iy] * row;
        }
    }
    return 8.0 * total;
}

double run_oracle(const OracleIntegrand& f, double k_max, const CslParams& csl, double mass,
                  int base_nodes) {
    const double m0 = constants::csl_reference_mass;
    const double pref = csl.lambda * csl.r_c * csl.r_c * csl.r_c /
                        (std::pow(M_PI, 1.5) * m0 * m0) * mass * mass;

    double coarse = pref * integrate_octant(f, k_max, csl.r_c, base_nodes);
    for (int doubling = 0; doubling < 2; ++doubling) {
        const int n = base_nodes << (doubling + 1);
        const double fine = pref * integrate_octant(f, k_max, csl.r_c, n);
        const double scale = std::max(std::abs(fine), std::abs(coarse));
        if (scale == 0.0 || std::abs(fine - coarse) <= 10.0 * kOracleTarget * scale) {
            return fine;
        }
        coarse = fine;
    }
    std::ostringstream msg;
    msg << "eta_numeric_oracle: node doublings up to " << (base_nodes * 4)
        << " per axis still disagree beyond " << 10.0 * kOracleTarget << " relative";
    throw OracleConvergenceError(msg.str());
}

}  // namespace

void QuadratureConfig::validate() const {
    if (nodes_per_axis < 32) throw std::domain_error("QuadratureConfig: nodes_per_axis must be >= 32");
    if (!(k_cutoff_factor >= 6.0)) throw std::domain_error("QuadratureConfig: k_cutoff_factor must be >= 6");
    if (!(fd_step_factor > 0.0 && fd_step_factor <= 1e-3)) {
        throw std::domain_error("QuadratureConfig: fd_step_factor must lie in (0, 1e-3]");
    }
}

namespace detail {

double disc_form_factor(double s, int radial_nodes) {
    std::vector<double> x, w;
    gauss_legendre_unit(radial_nodes, x, w);
    double sum = 0.0;
    for (int i = 0; i < radial_nodes; ++i) {
        const double theta = x[i] * M_PI / 2.0;
        const double c = std::cos(theta);
        sum += w[i] * c * c * std::cos(s * std::sin(theta));
    }
    return sum * 2.0;  // (4/pi) * (pi/2)
}

}  // namespace detail

double eta_numeric_oracle(const CylinderGeometry& geom, DiffusionKind kind, const CslParams& csl,
                          const QuadratureConfig& cfg, RotationAxis axis) {
    cfg.validate();
    if (csl.lambda == 0.0) return 0.0;

    const double k_max = cfg.k_cutoff_factor / csl.r_c;
    // k_rho reaches sqrt(2) k_max in the octant corner; leave margin for the
    // finite-difference displacements as well.
    const double s_max = 1.5 * k_max * geom.radius + 2.0;
    DiscFormFactorTable table(s_max);

    const double half_len = 0.5 * geom.length;
    const double radius = geom.radius;
    OracleIntegrand f;
    f.kind = kind;
    f.axis = axis;
    f.fd_factor = cfg.fd_step_factor;
    f.fd_floor = cfg.fd_step_factor * 1e-3 * k_max;
    f.mu = [&table, half_len, radius](const Vec3& k) {
        const double krho = std::sqrt(k.x * k.x + k.y * k.y);
        return table(krho * radius) * sinc(k.z * half_len);
    };
    return run_oracle(f, k_max, csl, geom.mass, cfg.nodes_per_axis);
}

double eta_numeric_oracle(const CubeGeometry& geom, DiffusionKind kind, const CslParams& csl,
                          const QuadratureConfig& cfg, RotationAxis axis) {
    cfg.validate();
    if (kind == DiffusionKind::VibSym) {
        throw std::invalid_argument("eta_numeric_oracle: a cube has no distinct symmetry axis");
    }
    if (csl.lambda == 0.0) return 0.0;

    const double k_max = cfg.k_cutoff_factor / csl.r_c;
    const double half_side = 0.5 * geom.side;
    OracleIntegrand f;
    f.kind = kind;
    f.axis = axis;
    f.fd_factor = cfg.fd_step_factor;
    f.fd_floor = cfg.fd_step_factor * 1e-3 * k_max;
    f.mu = [half_side](const Vec3& k) {
        return sinc(k.x * half_side) * sinc(k.y * half_side) * sinc(k.z * half_side);
    };
    return run_oracle(f, k_max, csl, geom.mass, cfg.nodes_per_axis);
}

}  // namespace cslbounds
