// SPDX-License-Identifier: Apache-2.0

#include "orilink/geometry.hpp"

#include <cmath>

namespace orilink {

void EulerAngles::validate() const {
    if (!(alpha >= 0.0 && alpha < kTwoPi))
        throw ValidationError("EulerAngles.alpha out of [0, 2*pi)");
    if (!(beta >= -kPi && beta < kPi))
        throw ValidationError("EulerAngles.beta out of [-pi, pi)");
    if (!(gamma >= -kHalfPi && gamma < kHalfPi))
        throw ValidationError("EulerAngles.gamma out of [-pi/2, pi/2)");
}

Vec3 rotated_normal(const EulerAngles& angles) {
    const double ca = std::cos(angles.alpha), sa = std::sin(angles.alpha);
    const double cb = std::cos(angles.beta), sb = std::sin(angles.beta);
    const double cg = std::cos(angles.gamma), sg = std::sin(angles.gamma);
    return {cg * sa * sb + ca * sg, sa * sg - ca * cg * sb, cb * cg};
}

double polar_angle(const EulerAngles& angles) {
    double c = std::cos(angles.beta) * std::cos(angles.gamma);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

double azimuth_angle(const EulerAngles& angles) {
    const Vec3 n = rotated_normal(angles);
    if (std::hypot(n.x, n.y) < 1e-12)
        throw DegeneratePose("azimuth undefined: rotated normal parallel to Z");
    return std::atan2(n.y, n.x);
}

// Branch boundaries are half-open below; alpha = 0 takes the first branch
// (limit from above).
double omega_hat(double alpha, DeviceMode mode) {
    if (mode == DeviceMode::Portrait) {
        if (alpha <= 1.5 * kPi) return alpha - kHalfPi;
        return alpha - 2.5 * kPi;
    }
    if (alpha <= kPi) return alpha;
    return alpha - kTwoPi;
}

double facing_angle(double alpha, DeviceMode mode) {
    double omega;
    if (mode == DeviceMode::Portrait) {
        omega = (alpha <= 1.5 * kPi) ? alpha + kHalfPi : alpha - 1.5 * kPi;
    } else {
        omega = (alpha <= kPi) ? alpha + kPi : alpha - kPi;
    }
    return wrap_two_pi(omega);
}

}  // namespace orilink
