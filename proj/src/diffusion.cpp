#include "cslbounds/diffusion.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cslbounds/constants.hpp"
#include "cslbounds/errors.hpp"
#include "cslbounds/specfun.hpp"

namespace cslbounds {

namespace {

#include "cube_rot_series.inc"
#include "cyl_rot_corner.inc"

constexpr double kSqrtPi = 1.7724538509055160273;

// Switch points between series and direct evaluation.  Chosen so that both
// branches agree to <= 1e-12 in an overlap window on either side (checked by
// the unit tests).
constexpr double kVSeriesMax = 2.0;    // erf brackets, cube bracket
constexpr double kWSeriesMax = 1.0;    // Bessel deficits, rotational w-sum
constexpr double kCornerMax = 0.7;     // joint (v, w) corner of the rot bracket

constexpr int kSeriesTerms = 30;

// ---------------------------------------------------------------------------
// Taylor coefficient tables, built once from exact recurrences.
//
//   g[m]  : 1 - e^(-v)                    = sum g[m] v^m
//   q[m]  : 2(1-e^(-v)) - sqrt(pi)u erf u = sum q[m] v^m
//   ab[m] : sqrt(pi)u erf u - 1 + e^(-v)  = sum ab[m] v^m   (u = sqrt(v))
//   uu[m] : q + 5b + 2v + v b  with b[m] = -ab[m]
//
//   a[j]  : e^(-w) I0(w) = sum a[j] w^j,  a[j]/a[j-1] = -(2j-1)/j^2
//   b1[j] : e^(-w) I1(w) = sum b1[j] w^j, b1[j] = (j+1) a[j+1] + a[j]
//   t[j]  : 2 e^(-w)(I0+I1) - 1
// ---------------------------------------------------------------------------

struct VSeriesTables {
    std::array<double, kSeriesTerms + 1> g{}, q{}, ab{}, uu{};

    VSeriesTables() {
        double fact = 1.0;
        std::array<double, kSeriesTerms + 1> b{};
        for (int m = 1; m <= kSeriesTerms; ++m) {
            fact *= m;
            const double sgn = (m % 2 == 0) ? -1.0 : 1.0;
            g[m] = sgn / fact;
            ab[m] = sgn / (fact * (2.0 * m - 1.0));
            b[m] = -ab[m];
            q[m] = 2.0 * sgn * (m - 1.0) / (fact * (2.0 * m - 1.0));
        }
        for (int m = 1; m <= kSeriesTerms; ++m) {
            uu[m] = q[m] + 5.0 * b[m] + (m == 1 ? 2.0 : 0.0) + (m >= 2 ? b[m - 1] : 0.0);
        }
    }
};

struct WSeriesTables {
    std::array<double, kSeriesTerms + 2> a{};
    std::array<double, kSeriesTerms + 1> b1{}, t{};

    WSeriesTables() {
        a[0] = 1.0;
        for (int j = 1; j <= kSeriesTerms + 1; ++j) {
            a[j] = -a[j - 1] * (2.0 * j - 1.0) / (static_cast<double>(j) * j);
        }
        for (int j = 0; j <= kSeriesTerms; ++j) b1[j] = (j + 1) * a[j + 1] + a[j];
        t[0] = 1.0;
        for (int j = 1; j <= kSeriesTerms; ++j) t[j] = 2.0 * a[j] + 2.0 * b1[j];
    }
};

const VSeriesTables& vtab() {
    static const VSeriesTables tables;
    return tables;
}

const WSeriesTables& wtab() {
    static const WSeriesTables tables;
    return tables;
}

// ---------------------------------------------------------------------------
// Double-double helpers for the joint small-(v, w) corner.  On the line
// w = 2v/3 the rotational bracket drops four orders below its individual
// terms, so the corner polynomial is accumulated in ~32 digits.
// ---------------------------------------------------------------------------

struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD two_sum(double x, double y) {
    const double s = x + y;
    const double b = s - x;
    return {s, (x - (s - b)) + (y - b)};
}

inline DD dd_add(DD x, DD y) {
    DD s = two_sum(x.hi, y.hi);
    s.lo += x.lo + y.lo;
    return two_sum(s.hi, s.lo);
}

inline DD dd_mul(DD x, DD y) {
    const double p = x.hi * y.hi;
    const double e = std::fma(x.hi, y.hi, -p) + x.hi * y.lo + x.lo * y.hi;
    return two_sum(p, e);
}

inline DD dd_from(double x) { return {x, 0.0}; }

double cylinder_rot_bracket_corner(double v, double w) {
    // head = (v/3 - w/2)^2, with v/3 carried to double-double accuracy
    const double q = v / 3.0;
    const DD v_third{q, (v - q * 3.0) / 3.0};
    const DD diff = dd_add(v_third, dd_from(-0.5 * w));
    DD acc = dd_mul(diff, diff);

    constexpr int kMaxPow = 19;
    std::array<DD, kMaxPow> vp, wp;
    vp[0] = wp[0] = dd_from(1.0);
    for (int i = 1; i < kMaxPow; ++i) {
        vp[i] = dd_mul(vp[i - 1], dd_from(v));
        wp[i] = dd_mul(wp[i - 1], dd_from(w));
    }
    for (const auto& term : kCylRotCorner) {
        acc = dd_add(acc, dd_mul(DD{term.hi, term.lo}, dd_mul(vp[term.m], wp[term.j])));
    }
    return dd_mul(dd_from(v), dd_mul(dd_from(w), acc)).hi;
}

// ---------------------------------------------------------------------------
// Stable primitives
// ---------------------------------------------------------------------------

double sum_v_series(const std::array<double, kSeriesTerms + 1>& c, double v) {
    double sum = 0.0, p = 1.0;
    for (int m = 1; m <= kSeriesTerms; ++m) {
        p *= v;
        sum += c[m] * p;
    }
    return sum;
}

inline double one_minus_exp_neg(double v) { return -std::expm1(-v); }

inline double erf_p(double v) {
    const double u = std::sqrt(v);
    return kSqrtPi * u * specfun::erf(u);
}

struct ErfCombos {
    double g;  // 1 - e^(-v)
    double q;  // 2g - p
    double u;  // q + 5(g - p) + 2v + v(g - p)
};

ErfCombos erf_combos(double v) {
    if (v <= kVSeriesMax) {
        const auto& t = vtab();
        double g = 0.0, q = 0.0, u = 0.0, p = 1.0;
        for (int m = 1; m <= kSeriesTerms; ++m) {
            p *= v;
            g += t.g[m] * p;
            q += t.q[m] * p;
            u += t.uu[m] * p;
        }
        return {g, q, u};
    }
    const double g = one_minus_exp_neg(v);
    const double p = erf_p(v);
    const double b = g - p;
    const double q = 2.0 * g - p;
    return {g, q, q + 5.0 * b + 2.0 * v + v * b};
}

}  // namespace

namespace detail {

double erf_bracket_a(double v) {
    if (v <= kVSeriesMax) return sum_v_series(vtab().ab, v);
    return erf_p(v) - one_minus_exp_neg(v);
}

double erf_bracket_q(double v) {
    if (v <= kVSeriesMax) return sum_v_series(vtab().q, v);
    return 2.0 * one_minus_exp_neg(v) - erf_p(v);
}

double bessel_deficit_i0(double w) {
    if (w <= kWSeriesMax) {
        const auto& t = wtab();
        double sum = 0.0, p = 1.0;
        for (int j = 1; j <= kSeriesTerms; ++j) {
            p *= w;
            sum -= t.a[j] * p;
        }
        return sum;
    }
    return 1.0 - specfun::bessel_i_scaled(0, w);
}

double bessel_deficit_i01(double w) {
    if (w <= kWSeriesMax) {
        const auto& t = wtab();
        double sum = 0.0, p = 1.0;
        for (int j = 1; j <= kSeriesTerms; ++j) {
            p *= w;
            sum -= (t.a[j] + t.b1[j]) * p;
        }
        return sum;
    }
    return 1.0 - specfun::bessel_i_scaled(0, w) - specfun::bessel_i_scaled(1, w);
}

// The bracket is assembled from one of three routes:
//   - joint corner: factored form v*w*((v/3 - w/2)^2 + remainder series),
//   - small w: power series in w whose coefficients combine G, Q, U,
//   - otherwise: -2wG*T + 4*d0*Q - (4/3)*I1s*U directly.
// The three agree to <= 1e-11 in their overlap windows (unit tested).
double cylinder_rot_bracket(double v, double w) {
    if (v <= kCornerMax && w <= kCornerMax) return cylinder_rot_bracket_corner(v, w);

    const ErfCombos c = erf_combos(v);
    if (w <= kWSeriesMax) {
        const auto& t = wtab();
        double sum = 0.0, p = 1.0;
        for (int j = 1; j <= kSeriesTerms; ++j) {
            p *= w;
            sum += (-2.0 * t.t[j - 1] * c.g - 4.0 * t.a[j] * c.q - (4.0 / 3.0) * t.b1[j] * c.u) * p;
        }
        return sum;
    }
    const double i0s = specfun::bessel_i_scaled(0, w);
    const double i1s = specfun::bessel_i_scaled(1, w);
    const double d0 = 1.0 - i0s;
    const double t_w = 2.0 * i0s + 2.0 * i1s - 1.0;
    return -2.0 * w * c.g * t_w + 4.0 * d0 * c.q - (4.0 / 3.0) * i1s * c.u;
}

double cube_rot_bracket(double v) {
    if (v <= kVSeriesMax) {
        double sum = 0.0;
        double p = 1.0;
        for (int i = 0; i < kCubeRotSeriesFirstPower; ++i) p *= v;
        for (const double c : kCubeRotSeries) {
            sum += c * p;
            p *= v;
        }
        return sum;
    }
    const double g = one_minus_exp_neg(v);
    const double p = erf_p(v);
    const double d = 8.0 * v * (2.0 + g) + 32.0 * g - (48.0 + 8.0 * v) * p;
    return g * d + 12.0 * p * p;
}

}  // namespace detail

namespace {

double check_finite(double eta, const char* what) {
    if (!std::isfinite(eta)) {
        throw PrecisionError(std::string(what) + ": non-finite intermediate value");
    }
    return eta;
}

}  // namespace

double eta_cylinder(const CylinderGeometry& geom, DiffusionKind kind, const CslParams& csl) {
    if (csl.lambda == 0.0) return 0.0;

    const double m0 = constants::csl_reference_mass;
    const double rc = csl.r_c;
    const double u = geom.length / (2.0 * rc);
    const double v = u * u;
    const double w = geom.radius * geom.radius / (2.0 * rc * rc);
    const double mass_ratio_sq = (geom.mass / m0) * (geom.mass / m0);

    double eta = 0.0;
    switch (kind) {
        case DiffusionKind::VibPerp: {
            const double pref = 8.0 * csl.lambda * mass_ratio_sq * rc * rc /
                                (geom.length * geom.length * geom.radius * geom.radius);
            eta = pref * specfun::bessel_i_scaled(1, w) * detail::erf_bracket_a(v);
            break;
        }
        case DiffusionKind::VibSym: {
            const double pref = 8.0 * csl.lambda * mass_ratio_sq * rc * rc /
                                (geom.length * geom.length * geom.radius * geom.radius);
            eta = pref * one_minus_exp_neg(v) * detail::bessel_deficit_i01(w);
            break;
        }
        case DiffusionKind::Rot: {
            const double pref = 2.0 * csl.lambda * mass_ratio_sq * rc * rc * rc * rc /
                                (geom.length * geom.length * geom.radius * geom.radius);
            eta = pref * detail::cylinder_rot_bracket(v, w);
            break;
        }
    }
    return check_finite(eta, "eta_cylinder");
}

double eta_cube(const CubeGeometry& geom, DiffusionKind kind, const CslParams& csl) {
    if (kind == DiffusionKind::VibSym) {
        throw std::invalid_argument("eta_cube: a cube has no distinct symmetry axis (VibSym)");
    }
    if (csl.lambda == 0.0) return 0.0;

    const double m0 = constants::csl_reference_mass;
    const double rc = csl.r_c;
    const double L = geom.side;
    const double u = L / (2.0 * rc);
    const double v = u * u;
    const double mass_ratio_sq = (geom.mass / m0) * (geom.mass / m0);

    double eta = 0.0;
    if (kind == DiffusionKind::VibPerp) {
        const double a = detail::erf_bracket_a(v);
        const double rc_over_l_sq = (rc / L) * (rc / L);
        eta = 32.0 * csl.lambda * mass_ratio_sq * rc_over_l_sq * rc_over_l_sq /
              (L * L) * a * a * one_minus_exp_neg(v);
    } else {
        const double r6 = std::pow(rc / L, 6);
        // bracket B = -(erf bracket A); C is negative, so the product is positive
        eta = (8.0 / 3.0) * csl.lambda * mass_ratio_sq * r6 *
              detail::erf_bracket_a(v) * (-detail::cube_rot_bracket(v));
    }
    return check_finite(eta, "eta_cube");
}

}  // namespace cslbounds
