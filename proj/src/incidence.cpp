// SPDX-License-Identifier: Apache-2.0

#include "orilink/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace orilink {

double LinkGeometry::distance() const {
    return std::sqrt((ap.x - ue.x) * (ap.x - ue.x) + (ap.y - ue.y) * (ap.y - ue.y) +
                     (ap.z - ue.z) * (ap.z - ue.z));
}

void LinkGeometry::validate() const {
    if (!(distance() > 0.0)) throw DegenerateGeometry("AP and UE coincide");
    if (!(ap.z > ue.z)) throw DegenerateGeometry("AP must be strictly above the UE");
}

IncidenceCoeffs coefficients(const LinkGeometry& g) {
    g.validate();
    const double d = g.distance();
    IncidenceCoeffs c;
    c.a = -((g.ap.x - g.ue.x) / d) * std::cos(g.omega) -
          ((g.ap.y - g.ue.y) / d) * std::sin(g.omega);
    c.b = (g.ap.z - g.ue.z) / d;
    return c;
}

double cos_psi(const IncidenceCoeffs& c, double theta) {
    return c.a * std::sin(theta) + c.b * std::cos(theta);
}

double cos_psi(const LinkGeometry& g, double theta) {
    return cos_psi(coefficients(g), theta);
}

double cos_psi_full(const LinkGeometry& g, double theta, double omega) {
    g.validate();
    const double d = g.distance();
    return ((g.ap.x - g.ue.x) / d) * std::sin(theta) * std::cos(omega) +
           ((g.ap.y - g.ue.y) / d) * std::sin(theta) * std::sin(omega) +
           ((g.ap.z - g.ue.z) / d) * std::cos(theta);
}

namespace {

double clamped_asin(double x) {
    return std::asin(std::clamp(x, -1.0, 1.0));
}

// Preimages of tau under tau = R sin(theta + phase); contributions outside
// the theta model's truncation vanish through trunc_pdf/trunc_cdf.
struct Preimages {
    double rising;   // theta on the rising flank of the harmonic
    double falling;  // theta on the falling flank
};

Preimages preimages(const CosPsiDistribution& d, double tau) {
    const double r = d.coeffs.radius();
    const double phase = d.coeffs.phase();
    const double s = clamped_asin(tau / r);
    return {s - phase, kPi - s - phase};
}

// Density without the support check; used by quadrature and the scans.
double density_unchecked(const CosPsiDistribution& d, double tau) {
    const double r = d.coeffs.radius();
    const double jac2 = r * r - tau * tau;
    if (jac2 <= 0.0) return 0.0;
    const Preimages p = preimages(d, tau);
    return (trunc_pdf(d.theta_model, p.rising) + trunc_pdf(d.theta_model, p.falling)) /
           std::sqrt(jac2);
}

}  // namespace

CosPsiDistribution make_cos_psi(const IncidenceCoeffs& c, const OrientationModel& m) {
    if (!(c.b > 0.0)) throw DegenerateGeometry("incidence coefficient b must be > 0");
    if (!(std::abs(c.a) < 1.0)) throw DegenerateGeometry("incidence coefficient a out of (-1, 1)");
    m.validate();

    CosPsiDistribution d;
    d.coeffs = c;
    d.theta_model = m;
    const double r = c.radius();
    if (c.a < 0.0) {
        d.kind = CosPsiKind::ExactCase1;
        d.support_lo = c.a;
        d.support_hi = c.b;
        d.ss_f = c.b;
    } else {
        d.kind = CosPsiKind::ExactCase2;
        d.support_lo = std::min(c.a, c.b);
        d.support_hi = r;
        d.ss_f = r;
    }

    // Peak of the transformed density: the image of the theta model's mode.
    // On the worst-configuration locus the mode maps onto the support's
    // supremum and no interior peak exists.
    if (m.mu > m.lower && m.mu < m.upper) {
        const double peak = r * std::sin(m.mu + c.phase());
        const double theta_apex = std::atan2(std::max(c.a, 0.0), c.b);
        const bool on_locus = c.a >= 0.0 && std::abs(m.mu - theta_apex) < 1e-9;
        if (!on_locus && peak > d.support_lo && peak < d.support_hi) d.tau_star = peak;
    }
    return d;
}

CosPsiDistribution make_cos_psi(const LinkGeometry& g, const OrientationModel& m) {
    return make_cos_psi(coefficients(g), m);
}

double exact_pdf(const CosPsiDistribution& d, double tau) {
    if (!(tau > d.support_lo && tau < d.support_hi))
        throw OutOfSupport("exact_pdf: tau outside the open support");
    return density_unchecked(d, tau);
}

double exact_cdf(const CosPsiDistribution& d, double tau) {
    if (tau <= d.support_lo) return 0.0;
    if (tau >= d.support_hi) return 1.0;
    const Preimages p = preimages(d, tau);
    const double f = trunc_cdf(d.theta_model, p.rising) +
                     (1.0 - trunc_cdf(d.theta_model, p.falling));
    return std::clamp(f, 0.0, 1.0);
}

std::optional<double> tau_star(const CosPsiDistribution& d) { return d.tau_star; }

double exact_pdf_mass(const CosPsiDistribution& d, double tol) {
    // Substituting tau = R sin(u) cancels the 1/sqrt(R^2 - tau^2) Jacobian:
    // the integrand becomes the sum of the theta density at the two
    // preimages, smooth except at kinks and truncation crossings.
    const double r = d.coeffs.radius();
    const double phase = d.coeffs.phase();
    const OrientationModel& m = d.theta_model;
    const double u_lo = clamped_asin(d.support_lo / r);
    const double u_hi = clamped_asin(d.support_hi / r);

    std::vector<double> cuts{u_lo, u_hi};
    // Rising-flank preimage theta = u - phase crosses {lower, mu, upper} and
    // the falling-flank preimage theta = pi - u - phase likewise.
    for (double theta : {m.lower, m.mu, m.upper}) {
        cuts.push_back(theta + phase);
        cuts.push_back(kPi - theta - phase);
    }
    std::sort(cuts.begin(), cuts.end());

    const auto integrand = [&](double u) {
        return trunc_pdf(m, u - phase) + trunc_pdf(m, kPi - u - phase);
    };

    double mass = 0.0;
    double prev = u_lo;
    for (double c : cuts) {
        if (c <= prev || c > u_hi) continue;
        mass += integrate(integrand, prev, std::min(c, u_hi), tol / cuts.size());
        prev = c;
    }
    if (prev < u_hi) mass += integrate(integrand, prev, u_hi, tol / cuts.size());
    return mass;
}

double ApproxParams::normalizer() const {
    return 2.0 * b_hat *
           (1.0 - 0.5 * std::exp((mu_hat - tau_max) / b_hat) -
            0.5 * std::exp((tau_min - mu_hat) / b_hat));
}

ApproxParams approx_params(const IncidenceCoeffs& c, const OrientationModel& m) {
    if (m.family != Family::Laplace)
        throw ValidationError("approx_params: theta model must be Laplace");
    ApproxParams p;
    p.mu_hat = c.a * std::sin(m.mu) + c.b * std::cos(m.mu);
    p.b_hat = m.scale * std::abs(c.a * std::cos(m.mu) - c.b * std::sin(m.mu));
    p.tau_min = -1.0;
    p.tau_max = c.a < 0.0 ? c.b : c.radius();
    return p;
}

double approx_pdf(const ApproxParams& p, double tau) {
    if (!(p.b_hat > 0.0))
        throw DegenerateScale("approx density degenerates to a point mass");
    if (tau < p.tau_min || tau > p.tau_max)
        throw OutOfSupport("approx_pdf: tau outside [-1, tau_max]");
    return std::exp(-std::abs(tau - p.mu_hat) / p.b_hat) / p.normalizer();
}

double approx_cdf(const ApproxParams& p, double tau) {
    if (!(p.b_hat > 0.0))
        throw DegenerateScale("approx CDF degenerates to a step");
    if (tau < p.tau_min || tau > p.tau_max)
        throw OutOfSupport("approx_cdf: tau outside [-1, tau_max]");
    const double delta = p.normalizer();
    const double low_tail = std::exp((p.tau_min - p.mu_hat) / p.b_hat);
    double f;
    if (tau < p.mu_hat) {
        f = p.b_hat / delta * (std::exp((tau - p.mu_hat) / p.b_hat) - low_tail);
    } else {
        f = p.b_hat / delta * (2.0 - std::exp((p.mu_hat - tau) / p.b_hat) - low_tail);
    }
    return std::clamp(f, 0.0, 1.0);
}

double approx_quantile(const ApproxParams& p, double prob) {
    if (!(p.b_hat > 0.0))
        throw DegenerateScale("approx quantile degenerates to a constant");
    if (!(prob >= 0.0 && prob <= 1.0))
        throw ValidationError("approx_quantile: probability outside [0, 1]");
    const double delta = p.normalizer();
    const double low_tail = std::exp((p.tau_min - p.mu_hat) / p.b_hat);
    const double split = p.b_hat / delta * (1.0 - low_tail);  // CDF at mu_hat
    double tau;
    if (prob <= split) {
        tau = p.mu_hat + p.b_hat * std::log(prob * delta / p.b_hat + low_tail);
    } else {
        tau = p.mu_hat - p.b_hat * std::log(2.0 - low_tail - prob * delta / p.b_hat);
    }
    return std::clamp(tau, p.tau_min, p.tau_max);
}

double approx_pdf(const IncidenceCoeffs& c, const OrientationModel& m, double tau) {
    return approx_pdf(approx_params(c, m), tau);
}

double approx_cdf(const IncidenceCoeffs& c, const OrientationModel& m, double tau) {
    return approx_cdf(approx_params(c, m), tau);
}

double approx_quantile(const IncidenceCoeffs& c, const OrientationModel& m, double p) {
    return approx_quantile(approx_params(c, m), p);
}

namespace {

// Checks that f is (non-strictly, within a relative slack) monotone on the
// open interval, sampling n interior points.
bool scan_monotone(const CosPsiDistribution& d, double lo, double hi, int n,
                   bool increasing) {
    if (!(hi > lo)) return true;
    const double margin = (hi - lo) * 1e-4;
    lo += margin;
    hi -= margin;
    if (!(hi > lo) || n < 2) return true;
    double prev = density_unchecked(d, lo);
    for (int i = 1; i < n; ++i) {
        const double tau = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
        const double f = density_unchecked(d, tau);
        const double slack = 1e-9 * std::max(std::abs(prev), std::abs(f));
        if (increasing ? f < prev - slack : f > prev + slack) return false;
        prev = f;
    }
    return true;
}

bool scan_continuity(const CosPsiDistribution& d, double tau, double width) {
    const double eps = width * 1e-7;
    const double left = density_unchecked(d, tau - eps);
    const double right = density_unchecked(d, tau + eps);
    const double scale = std::max({left, right, 1e-300});
    return std::abs(left - right) <= 1e-3 * scale;
}

}  // namespace

PropositionReport verify_proposition1(const IncidenceCoeffs& c,
                                      const OrientationModel& m, int n_grid) {
    if (!(c.a < 0.0)) throw ValidationError("verify_proposition1 requires a < 0");
    const CosPsiDistribution d = make_cos_psi(c, m);
    PropositionReport rep;
    rep.tau_star = d.tau_star;

    const double bound = std::min(-c.b / c.a, -c.a / c.b);
    rep.condition_met = m.scale < bound;
    if (!rep.condition_met) {
        rep.status = PropositionStatus::ConditionUnmet;
        std::ostringstream os;
        os << "scale " << m.scale << " not below bound " << bound;
        rep.detail = os.str();
        return rep;
    }
    if (!d.tau_star) {
        rep.status = PropositionStatus::Failed;
        rep.detail = "interior peak missing";
        return rep;
    }

    const double ts = *d.tau_star;
    const double width = d.support_hi - d.support_lo;
    rep.pattern_ok = scan_monotone(d, d.support_lo, ts, n_grid, true) &&
                     scan_monotone(d, ts, d.support_hi, n_grid, false);
    rep.continuous_at_peak = scan_continuity(d, ts, width);
    if (!rep.pattern_ok || !rep.continuous_at_peak) {
        rep.status = PropositionStatus::Failed;
        rep.detail = rep.pattern_ok ? "discontinuity at the peak" : "monotonicity scan failed";
    }
    return rep;
}

PropositionReport verify_proposition2(const IncidenceCoeffs& c,
                                      const OrientationModel& m, int n_grid) {
    if (!(c.a >= 0.0)) throw ValidationError("verify_proposition2 requires a >= 0");
    const CosPsiDistribution d = make_cos_psi(c, m);
    PropositionReport rep;
    rep.tau_star = d.tau_star;

    const double r = c.radius();
    const double tau_d = r / std::sqrt(1.0 + m.scale * m.scale);
    rep.tau_d = tau_d;
    const double width = d.support_hi - d.support_lo;

    if (!d.tau_star) {
        rep.pattern_ok = scan_monotone(d, d.support_lo, d.support_hi, n_grid, true);
        if (!rep.pattern_ok) {
            rep.status = PropositionStatus::Failed;
            rep.detail = "expected pure monotone rise on the locus";
        }
        return rep;
    }

    const double ts = *d.tau_star;
    rep.continuous_at_peak = scan_continuity(d, ts, width);

    bool ok = scan_monotone(d, d.support_lo, ts, n_grid, true);
    if (ts < tau_d) {
        // The second transformation branch switches on at max(a, b); the
        // activation is an upward jump, so the decay scan is split there.
        const double m2 = std::max(c.a, c.b);
        if (m2 > ts && m2 < tau_d) {
            ok = ok && scan_monotone(d, ts, m2, n_grid, false) &&
                 scan_monotone(d, m2, tau_d, n_grid, false);
        } else {
            ok = ok && scan_monotone(d, ts, tau_d, n_grid, false);
        }
        ok = ok && scan_monotone(d, tau_d, d.support_hi, n_grid, true);
    } else {
        // Turning point below the peak: the density keeps rising past the
        // peak into the divergent upper end.
        ok = ok && scan_monotone(d, ts, d.support_hi, n_grid, true);
    }
    rep.pattern_ok = ok;
    if (!rep.pattern_ok || !rep.continuous_at_peak) {
        rep.status = PropositionStatus::Failed;
        rep.detail = rep.pattern_ok ? "discontinuity at the peak" : "monotonicity scan failed";
    }
    return rep;
}

Vec3 cw_locus(const Vec3& ap, double ue_z, double omega, double x_delta,
              double y_delta, const OrientationModel& m) {
    if (!(m.mu > 0.0 && m.mu < kHalfPi))
        throw ValidationError("cw_locus requires 0 < mu < pi/2");
    const double reach = (ap.z - ue_z) * std::tan(m.mu);
    return {ap.x + reach * std::cos(omega) + x_delta,
            ap.y + reach * std::sin(omega) + y_delta, ue_z};
}

}  // namespace orilink
