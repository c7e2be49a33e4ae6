// SPDX-License-Identifier: Apache-2.0
//
// Euler-rotation algebra for device orientation: maps yaw/pitch/roll to the
// rotated device normal, its polar and azimuth angles, and the user's facing
// direction. Angle convention follows the W3C device-orientation order
// (intrinsic z -> x' -> y''), all values in radians.

#pragma once

#include "orilink/errors.hpp"
#include "orilink/math_util.hpp"

namespace orilink {

// Yaw/pitch/roll triple. Valid ranges: alpha in [0, 2*pi), beta in [-pi, pi),
// gamma in [-pi/2, pi/2).
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    void validate() const;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
};

enum class DeviceMode { Portrait, Landscape };

// Device normal after the yaw/pitch/roll rotation, expressed in Earth
// coordinates. Unit norm by construction.
Vec3 rotated_normal(const EulerAngles& angles);

// Polar angle of the rotated normal, acos(cos(beta) cos(gamma)) in [0, pi].
// Independent of alpha.
double polar_angle(const EulerAngles& angles);

// Azimuth of the rotated normal in (-pi, pi]. Throws DegeneratePose when the
// normal is (anti)parallel to Z and the azimuth is undefined.
double azimuth_angle(const EulerAngles& angles);

// Azimuth approximation for an untilted grip (gamma = 0 in portrait, beta = 0
// in landscape), a pure function of yaw. Result in (-pi, pi].
double omega_hat(double alpha, DeviceMode mode);

// Facing/movement direction as a function of yaw, normalized to [0, 2*pi).
// Satisfies facing_angle(alpha, mode) = omega_hat(alpha, mode) + pi (mod 2*pi).
double facing_angle(double alpha, DeviceMode mode);

}  // namespace orilink
