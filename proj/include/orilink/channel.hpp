// SPDX-License-Identifier: Apache-2.0
//
// LOS channel gain and SNR statistics for a randomly oriented receiver:
// deterministic Lambertian gain, the gain distribution with its Dirac mass at
// zero (field-of-view clipping), and the SNR density induced by S = S0 H^2.

#pragma once

#include <optional>

#include "orilink/incidence.hpp"

namespace orilink {

// Emitter/receiver constants. Defaults follow a 60 degree half-intensity
// LED, 90 degree FOV, 1 cm^2 photodiode, 1 A/W, 1 W optics, 10 MHz bandwidth
// and 1e-21 A^2/Hz noise density.
struct ChannelParams {
    double area = 1e-4;            // photodiode area, m^2
    double half_angle = deg2rad(60.0);  // LED half-intensity angle
    double fov = deg2rad(90.0);    // receiver field of view
    double responsivity = 1.0;     // A/W
    double p_opt = 1.0;            // transmitted optical power, W
    double noise_psd = 1e-21;      // A^2/Hz
    double bandwidth = 1e7;        // Hz

    void validate() const;
    double lambertian_order() const;
    // SNR scale S0 = (responsivity * p_opt)^2 / (noise_psd * bandwidth).
    double snr_scale() const;
};

// Lambertian order m = -ln(2) / ln(cos(half_angle)).
double lambertian_order(double half_angle);

// Deterministic LOS gain for a given polar angle, with the AP pointing
// straight down. Zero outside the receiver FOV.
double los_gain(const LinkGeometry& g, const ChannelParams& p, double theta);

// Gain distribution induced by the truncated-Laplace cos(psi) approximation.
// The continuous part lives on [h_n * cos(fov), h_max]; everything the FOV
// clips collapses into a Dirac mass at zero.
struct GainDistribution {
    ApproxParams cos_model;  // linearized cos(psi) parameters
    double h_n = 0.0;        // gain scale H0 / d^(m+2)
    double h_min = 0.0;      // support edge (exact-model bound)
    double h_max = 0.0;
    double mu_h = 0.0;       // location of the continuous Laplace part
    double b_h = 0.0;        // scale of the continuous Laplace part
    double dirac_mass = 0.0;
    // Set when the continuous part collapses to a point (zero linearized
    // scale on the worst-configuration locus, or a fully clipped FOV).
    std::optional<double> point_mass;
    // Relative gap between the full two-sided normalizer and the closed form
    // that keeps only the upper truncation term.
    double normalizer_discrepancy = 0.0;

    double clip_gain() const { return h_clip; }

    double h_clip = 0.0;  // h_n * cos(fov), lower edge of the continuous part
};

GainDistribution gain_distribution(const LinkGeometry& g, const ChannelParams& p,
                                   const OrientationModel& m);

// Continuous density of the gain distribution (the Dirac mass is reported
// separately, never evaluated pointwise).
double gain_pdf(const GainDistribution& dist, double h);

// CDF including the step at zero.
double gain_cdf(const GainDistribution& dist, double h);

struct SnrSupport {
    double s_min = 0.0;
    double s_max = 0.0;
};

SnrSupport snr_support(const GainDistribution& dist, const ChannelParams& p);

// Continuous SNR density for s = S0 h^2.
double snr_pdf(const GainDistribution& dist, const ChannelParams& p, double s);

double snr_cdf(const GainDistribution& dist, const ChannelParams& p, double s);

}  // namespace orilink
