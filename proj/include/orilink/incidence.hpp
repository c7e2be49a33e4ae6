// SPDX-License-Identifier: Apache-2.0
//
// Statistics of the incidence-angle cosine for a fixed link geometry:
// cos(psi) = a sin(theta) + b cos(theta) with geometry coefficients (a, b),
// its exact transformed PDF/CDF for a random polar angle, the truncated
// Laplace approximation, and numerical verification of the density's
// monotonicity structure.

#pragma once

#include <optional>
#include <string>

#include "orilink/errors.hpp"
#include "orilink/geometry.hpp"
#include "orilink/stats.hpp"

namespace orilink {

// Downlink link geometry: AP position, UE position and the user's facing
// angle Omega. The AP must sit strictly above the UE.
struct LinkGeometry {
    Vec3 ap{0.0, 0.0, 2.0};
    Vec3 ue{0.0, 0.0, 0.0};
    double omega = 0.0;

    double distance() const;
    double height() const { return ap.z - ue.z; }
    void validate() const;
};

// Coefficients of cos(psi) = a sin(theta) + b cos(theta). For any geometry
// with the AP above the UE: -1 < a < 1, 0 < b <= 1 and
// b <= sqrt(a^2 + b^2) <= 1.
struct IncidenceCoeffs {
    double a = 0.0;
    double b = 1.0;

    double radius() const { return std::hypot(a, b); }
    // Phase of the harmonic form sqrt(a^2+b^2) * sin(theta + phase).
    double phase() const { return std::atan2(b, a); }
};

enum class CosPsiKind { ExactCase1, ExactCase2, ApproxTruncLaplace };

// The distribution of cos(psi) induced by a truncated polar-angle model over
// a fixed geometry. `support` is open at both ends for density evaluation.
struct CosPsiDistribution {
    IncidenceCoeffs coeffs;
    OrientationModel theta_model;
    CosPsiKind kind = CosPsiKind::ExactCase1;
    double support_lo = -1.0;
    double support_hi = 1.0;
    std::optional<double> tau_star;  // peak location, when inside the support
    double ss_f = 1.0;               // supremum of the support
};

IncidenceCoeffs coefficients(const LinkGeometry& g);

// cos(psi) under the facing-angle approximation for the geometry's Omega.
double cos_psi(const LinkGeometry& g, double theta);
double cos_psi(const IncidenceCoeffs& c, double theta);

// cos(psi) from the full spherical form with an explicit normal azimuth
// omega; used as an independent cross-check of the coefficient route.
double cos_psi_full(const LinkGeometry& g, double theta, double omega);

// Builds the exact transformed distribution of cos(psi).
CosPsiDistribution make_cos_psi(const IncidenceCoeffs& c, const OrientationModel& m);
CosPsiDistribution make_cos_psi(const LinkGeometry& g, const OrientationModel& m);

// Density of the exact distribution; tau must lie strictly inside the
// support. Diverges integrably at the upper end when a >= 0.
double exact_pdf(const CosPsiDistribution& d, double tau);

// CDF of the exact distribution, defined on all reals.
double exact_cdf(const CosPsiDistribution& d, double tau);

// Peak location of the exact density, absent when it degenerates onto the
// support's supremum (the worst-configuration locus).
std::optional<double> tau_star(const CosPsiDistribution& d);

// Total mass of the exact density by adaptive quadrature; the integrable
// endpoint singularity is removed with the substitution
// tau = sqrt(a^2+b^2) sin(u).
double exact_pdf_mass(const CosPsiDistribution& d, double tol = 1e-9);

// First-order (small polar-angle spread) truncated-Laplace approximation.
struct ApproxParams {
    double mu_hat = 0.0;
    double b_hat = 0.0;
    double tau_min = -1.0;
    double tau_max = 1.0;

    double normalizer() const;  // total mass scale Delta
};

// Linearized model parameters; the theta model must be Laplace.
ApproxParams approx_params(const IncidenceCoeffs& c, const OrientationModel& m);

double approx_pdf(const IncidenceCoeffs& c, const OrientationModel& m, double tau);
double approx_cdf(const IncidenceCoeffs& c, const OrientationModel& m, double tau);
double approx_quantile(const IncidenceCoeffs& c, const OrientationModel& m, double p);

double approx_pdf(const ApproxParams& p, double tau);
double approx_cdf(const ApproxParams& p, double tau);
double approx_quantile(const ApproxParams& p, double prob);

enum class PropositionStatus { Passed, ConditionUnmet, Failed };

// Result of a numerical monotonicity/continuity scan of the exact density.
struct PropositionReport {
    PropositionStatus status = PropositionStatus::Passed;
    bool condition_met = true;
    bool pattern_ok = true;
    bool continuous_at_peak = true;
    std::optional<double> tau_star;
    std::optional<double> tau_d;  // upward turning point for a >= 0
    std::string detail;

    bool passed() const { return status == PropositionStatus::Passed; }
};

// Scans the a < 0 density: exponential rise to the peak, exponential decay
// after it, continuity at the peak. Requires the scale bound
// b_theta < min(-b/a, -a/b); when the bound fails the report carries
// ConditionUnmet instead of a pass/fail verdict.
PropositionReport verify_proposition1(const IncidenceCoeffs& c,
                                      const OrientationModel& m, int n_grid = 200);

// Scans the a >= 0 density: rise to the peak, decay to the turning point
// tau_d = sqrt((a^2+b^2)/(1+b_theta^2)), then rise into the divergent upper
// end; pure monotone rise when the peak sits on the support boundary.
PropositionReport verify_proposition2(const IncidenceCoeffs& c,
                                      const OrientationModel& m, int n_grid = 200);

// UE position on the worst-configuration locus: the device normal's mean
// direction points exactly at the AP, collapsing the linearized scale to 0.
// (x_delta, y_delta) slide the point along the locus line.
Vec3 cw_locus(const Vec3& ap, double ue_z, double omega, double x_delta,
              double y_delta, const OrientationModel& m);

}  // namespace orilink
