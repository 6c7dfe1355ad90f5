#pragma once

#include <stdexcept>

namespace cslbounds {

/// The two free parameters of the collapse model.
///
/// lambda = 0 is admitted so null tests and linear rescaling work; r_c must
/// be positive.
struct CslParams {
    double lambda;  // collapse rate [1/s]
    double r_c;     // noise correlation length [m]

    CslParams(double lambda_, double r_c_) : lambda(lambda_), r_c(r_c_) {
        if (!(lambda_ >= 0.0)) throw std::domain_error("CslParams: lambda must be >= 0");
        if (!(r_c_ > 0.0)) throw std::domain_error("CslParams: r_c must be positive");
    }
};

/// Uniform-density cylinder; the symmetry axis is the local z axis, the
/// monitored vibration/rotation axis is x.
struct CylinderGeometry {
    double radius;  // R [m]
    double length;  // L [m]
    double mass;    // m [kg]

    CylinderGeometry(double radius_, double length_, double mass_)
        : radius(radius_), length(length_), mass(mass_) {
        if (!(radius_ > 0.0)) throw std::domain_error("CylinderGeometry: radius must be positive");
        if (!(length_ > 0.0)) throw std::domain_error("CylinderGeometry: length must be positive");
        if (!(mass_ > 0.0)) throw std::domain_error("CylinderGeometry: mass must be positive");
    }

    /// Moment of inertia about a transverse axis through the center.
    double moment_of_inertia_transverse() const {
        return mass * (radius * radius / 4.0 + length * length / 12.0);
    }
};

/// Uniform-density cube.
struct CubeGeometry {
    double side;  // L [m]
    double mass;  // m [kg]

    CubeGeometry(double side_, double mass_) : side(side_), mass(mass_) {
        if (!(side_ > 0.0)) throw std::domain_error("CubeGeometry: side must be positive");
        if (!(mass_ > 0.0)) throw std::domain_error("CubeGeometry: mass must be positive");
    }

    double moment_of_inertia() const { return mass * side * side / 6.0; }
};

/// Which diffusion constant is requested.
///  - VibPerp: center-of-mass motion along x (perpendicular to the symmetry axis)
///  - VibSym:  center-of-mass motion along the symmetry axis z
///  - Rot:     rotation about x
enum class DiffusionKind { VibPerp, VibSym, Rot };

}  // namespace cslbounds
