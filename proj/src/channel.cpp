// SPDX-License-Identifier: Apache-2.0

#include "orilink/channel.hpp"

#include <algorithm>
#include <cmath>

namespace orilink {

void ChannelParams::validate() const {
    if (!(area > 0.0)) throw ValidationError("channel.area must be > 0");
    if (!(half_angle > 0.0 && half_angle < kHalfPi))
        throw ValidationError("channel.half_angle must be in (0, pi/2)");
    if (!(fov > 0.0 && fov <= kHalfPi))
        throw ValidationError("channel.fov must be in (0, pi/2]");
    if (!(responsivity > 0.0)) throw ValidationError("channel.responsivity must be > 0");
    if (!(p_opt > 0.0)) throw ValidationError("channel.p_opt must be > 0");
    if (!(noise_psd > 0.0)) throw ValidationError("channel.noise_psd must be > 0");
    if (!(bandwidth > 0.0)) throw ValidationError("channel.bandwidth must be > 0");
}

double lambertian_order(double half_angle) {
    if (!(half_angle > 0.0 && half_angle < kHalfPi))
        throw ValidationError("half_angle must be in (0, pi/2)");
    return -std::log(2.0) / std::log(std::cos(half_angle));
}

double ChannelParams::lambertian_order() const { return orilink::lambertian_order(half_angle); }

double ChannelParams::snr_scale() const {
    return responsivity * responsivity * p_opt * p_opt / (noise_psd * bandwidth);
}

double los_gain(const LinkGeometry& g, const ChannelParams& p, double theta) {
    g.validate();
    p.validate();
    const double d = g.distance();
    const double cos_phi = g.height() / d;  // AP normal points straight down
    const double cpsi = cos_psi(g, theta);
    if (cpsi < std::cos(p.fov)) return 0.0;
    const double m = p.lambertian_order();
    return (m + 1.0) * p.area / (2.0 * kPi * d * d) * std::pow(cos_phi, m) * cpsi;
}

GainDistribution gain_distribution(const LinkGeometry& g, const ChannelParams& p,
                                   const OrientationModel& m) {
    g.validate();
    p.validate();
    const IncidenceCoeffs c = coefficients(g);
    const ApproxParams ap = approx_params(c, m);

    const double order = p.lambertian_order();
    const double d = g.distance();
    const double h0 = (order + 1.0) * p.area * std::pow(g.height(), order) / (2.0 * kPi);

    GainDistribution dist;
    dist.cos_model = ap;
    dist.h_n = h0 / std::pow(d, order + 2.0);
    dist.h_clip = dist.h_n * std::cos(p.fov);
    dist.h_max = dist.h_n * ap.tau_max;
    dist.mu_h = dist.h_n * ap.mu_hat;
    dist.b_h = dist.h_n * ap.b_hat;

    // Support edge of the exact transformed gain: the FOV boundary when the
    // cos(psi) support reaches below it, the geometric minimum otherwise.
    const double tau_lo_exact = std::min(c.a, c.b);
    const double cos_fov = std::cos(p.fov);
    dist.h_min = dist.h_n * std::max(cos_fov, tau_lo_exact);

    if (!(ap.b_hat > 0.0)) {
        // Degenerate linearized scale: all continuous mass sits at mu_h.
        dist.point_mass = dist.mu_h;
        dist.dirac_mass = ap.mu_hat <= cos_fov ? 1.0 : 0.0;
        return dist;
    }
    if (cos_fov >= ap.tau_max) {
        dist.dirac_mass = 1.0;
        dist.point_mass = 0.0;
        return dist;
    }

    dist.dirac_mass = approx_cdf(ap, std::max(cos_fov, ap.tau_min));

    const double full = ap.normalizer();
    const double upper_only =
        2.0 * ap.b_hat * (1.0 - 0.5 * std::exp((ap.mu_hat - ap.tau_max) / ap.b_hat));
    dist.normalizer_discrepancy = std::abs(full - upper_only) / full;
    return dist;
}

double gain_pdf(const GainDistribution& dist, double h) {
    if (dist.point_mass)
        throw DegenerateScale("gain density degenerates to a point mass");
    if (h < 0.0 || h > dist.h_max)
        throw OutOfSupport("gain_pdf: h outside [0, h_max]");
    if (h < dist.h_clip) return 0.0;
    return approx_pdf(dist.cos_model, h / dist.h_n) / dist.h_n;
}

double gain_cdf(const GainDistribution& dist, double h) {
    if (h < 0.0 || h > dist.h_max)
        throw OutOfSupport("gain_cdf: h outside [0, h_max]");
    if (dist.point_mass) {
        double f = h >= *dist.point_mass ? 1.0 : 0.0;
        if (h >= 0.0) f = std::max(f, dist.dirac_mass);
        return f;
    }
    if (h < dist.h_clip) return dist.dirac_mass;
    return approx_cdf(dist.cos_model, h / dist.h_n);
}

SnrSupport snr_support(const GainDistribution& dist, const ChannelParams& p) {
    const double s0 = p.snr_scale();
    return {s0 * dist.h_min * dist.h_min, s0 * dist.h_max * dist.h_max};
}

double snr_pdf(const GainDistribution& dist, const ChannelParams& p, double s) {
    const double s0 = p.snr_scale();
    if (s < 0.0 || s > s0 * dist.h_max * dist.h_max)
        throw OutOfSupport("snr_pdf: s outside [0, s_max]");
    if (s == 0.0) return 0.0;
    const double h = std::sqrt(s / s0);
    return gain_pdf(dist, h) / (2.0 * s0 * h);
}

double snr_cdf(const GainDistribution& dist, const ChannelParams& p, double s) {
    const double s0 = p.snr_scale();
    if (s < 0.0 || s > s0 * dist.h_max * dist.h_max)
        throw OutOfSupport("snr_cdf: s outside [0, s_max]");
    return gain_cdf(dist, std::sqrt(s / s0));
}

}  // namespace orilink
