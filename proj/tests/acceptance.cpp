// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero when any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "orilink/channel.hpp"
#include "orilink/mobility.hpp"
#include "orilink/table.hpp"

using namespace orilink;

namespace {

int failures = 0;

void report(int number, bool pass, const std::string& text) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", number, text.c_str());
    if (!pass) ++failures;
}

LinkGeometry geom(double ue_x, double ue_y, double omega, const Vec3& ap = {0, 0, 2}) {
    LinkGeometry g;
    g.ap = ap;
    g.ue = {ue_x, ue_y, 0.0};
    g.omega = omega;
    return g;
}

// Random in-room geometry with a usable linearized scale.
LinkGeometry random_geometry(Rng& rng, const OrientationModel& m) {
    for (;;) {
        LinkGeometry g = geom(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0),
                              rng.uniform(-kPi, kPi));
        if (g.distance() < 0.3) continue;
        if (approx_params(coefficients(g), m).b_hat > 1e-4) return g;
    }
}

double total_gain_mass(const GainDistribution& dist, double tol) {
    const double mid = std::clamp(dist.mu_h, dist.clip_gain(), dist.h_max);
    return integrate([&](double h) { return gain_pdf(dist, h); }, dist.clip_gain(), mid, tol) +
           integrate([&](double h) { return gain_pdf(dist, h); }, mid, dist.h_max, tol) +
           dist.dirac_mass;
}

double total_snr_mass(const GainDistribution& dist, const ChannelParams& chan, double tol) {
    const double root_s0 = std::sqrt(chan.snr_scale());
    const auto in_u = [&](double u) {
        const double s = u * u;
        return s > 0.0 ? snr_pdf(dist, chan, s) * 2.0 * u : 0.0;
    };
    const double mid = std::clamp(dist.mu_h, dist.clip_gain(), dist.h_max);
    return integrate(in_u, root_s0 * dist.clip_gain(), root_s0 * mid, tol) +
           integrate(in_u, root_s0 * mid, root_s0 * dist.h_max, tol) + dist.dirac_mass;
}

void criterion_1() {
    const double m = lambertian_order(deg2rad(60.0));
    report(1, std::abs(m - 1.0) <= 1e-12,
           "Lambertian order at 60 deg half angle: m = " + format_double(m));
}

void criterion_2() {
    Rng rng(20250809);
    double worst_polar = 0.0;
    double worst_mod = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const EulerAngles e{rng.uniform(0.0, kTwoPi), rng.uniform(-kPi, kPi),
                            rng.uniform(-kHalfPi, kHalfPi)};
        const Vec3 n = rotated_normal(e);
        const double via_dot = std::acos(std::clamp(n.z, -1.0, 1.0));
        worst_polar = std::max(worst_polar, std::abs(polar_angle(e) - via_dot));

        const double alpha = rng.uniform(0.0, kTwoPi);
        for (DeviceMode mode : {DeviceMode::Portrait, DeviceMode::Landscape}) {
            const double gap =
                wrap_two_pi(facing_angle(alpha, mode) - omega_hat(alpha, mode));
            worst_mod = std::max(worst_mod, std::abs(gap - kPi));
        }
    }
    report(2, worst_polar <= 1e-12 && worst_mod <= 1e-12,
           "geometry consistency over 1e5 triples: max polar deviation " +
               format_double(worst_polar) + ", max facing-offset deviation " +
               format_double(worst_mod));
}

void criterion_3() {
    const OrientationModel m = OrientationModel::sitting_laplace();
    const ChannelParams chan;
    Rng rng(31);
    double worst = 0.0;
    int n_neg = 0, n_pos = 0;
    for (int i = 0; i < 24; ++i) {
        const LinkGeometry g = random_geometry(rng, m);
        const IncidenceCoeffs c = coefficients(g);
        (c.a < 0 ? n_neg : n_pos) += 1;

        worst = std::max(worst, std::abs(exact_pdf_mass(make_cos_psi(c, m), 1e-8) - 1.0));

        const ApproxParams ap = approx_params(c, m);
        const double approx_mass =
            integrate([&](double x) { return approx_pdf(ap, x); }, ap.tau_min,
                      ap.mu_hat, 1e-9) +
            integrate([&](double x) { return approx_pdf(ap, x); }, ap.mu_hat,
                      ap.tau_max, 1e-9);
        worst = std::max(worst, std::abs(approx_mass - 1.0));

        const GainDistribution dist = gain_distribution(g, chan, m);
        worst = std::max(worst, std::abs(total_gain_mass(dist, 1e-9) - 1.0));
        worst = std::max(worst, std::abs(total_snr_mass(dist, chan, 1e-9) - 1.0));
    }
    report(3, worst <= 1e-6 && n_neg >= 5 && n_pos >= 5,
           "distribution normalization over 24 geometries (" + std::to_string(n_neg) +
               " facing-away, " + std::to_string(n_pos) +
               " facing-toward): worst |mass - 1| = " + format_double(worst));
}

void criterion_4() {
    const OrientationModel m = OrientationModel::sitting_laplace();
    const ChannelParams chan;
    const double cos_fov = std::cos(chan.fov);
    const std::size_t n = 1000000;

    // Geometries spanning negative, near-zero and positive coefficients.
    std::vector<LinkGeometry> geoms;
    Rng rng(41);
    while (geoms.size() < 9) {
        const LinkGeometry g = random_geometry(rng, m);
        if (coefficients(g).a < -0.05) geoms.push_back(g);
    }
    while (geoms.size() < 18) {
        const LinkGeometry g = random_geometry(rng, m);
        if (coefficients(g).a > 0.05) geoms.push_back(g);
    }
    // Facing perpendicular to the horizontal offset nulls the tilt term.
    for (double r : {0.5, 2.0, 4.0}) {
        LinkGeometry g = geom(r, 0.0, kHalfPi);
        geoms.push_back(g);
    }

    double worst = 0.0;
    std::uint64_t stream = 0;
    for (const LinkGeometry& g : geoms) {
        const IncidenceCoeffs c = coefficients(g);
        const CosPsiDistribution d = make_cos_psi(c, m);
        const GainDistribution dist = gain_distribution(g, chan, m);
        const double s0 = chan.snr_scale();

        Rng sampler(Rng::mix(20250809, ++stream));
        std::vector<double> taus;
        taus.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            taus.push_back(cos_psi(c, trunc_quantile(m, sampler.uniform01())));

        worst = std::max(worst, ks_distance(taus, [&](double x) { return exact_cdf(d, x); }));

        std::vector<double> gains;
        gains.reserve(n);
        for (double tau : taus) gains.push_back(tau >= cos_fov ? dist.h_n * tau : 0.0);
        const auto gain_cdf_exact = [&](double h) {
            return h < 0.0 ? 0.0 : exact_cdf(d, std::max(h / dist.h_n, cos_fov));
        };
        const auto gain_cdf_left = [&](double h) {
            return h <= 0.0 ? 0.0 : gain_cdf_exact(h);
        };
        worst = std::max(worst, ks_distance(gains, gain_cdf_exact, gain_cdf_left));

        std::vector<double> snrs;
        snrs.reserve(n);
        for (double h : gains) snrs.push_back(s0 * h * h);
        worst = std::max(
            worst, ks_distance(
                       snrs,
                       [&](double s) {
                           return s < 0.0 ? 0.0 : gain_cdf_exact(std::sqrt(s / s0));
                       },
                       [&](double s) {
                           return s <= 0.0 ? 0.0 : gain_cdf_exact(std::sqrt(s / s0));
                       }));
    }
    report(4, worst < 0.01,
           "transformation oracle over " + std::to_string(geoms.size()) +
               " geometries, 1e6 samples each: worst sup-distance = " +
               format_double(worst));
}

void criterion_5() {
    // Regression bound pinned from the reference run of this implementation
    // (measured 0.0355 grid-averaged sup distance).
    const double pinned_bound = 0.040;
    const OrientationModel m = OrientationModel::sitting_laplace();
    double acc = 0.0;
    int count = 0;
    for (int ix = 0; ix <= 20; ++ix) {
        for (int iy = 0; iy <= 20; ++iy) {
            const LinkGeometry g = geom(-5.0 + 0.5 * ix, -5.0 + 0.5 * iy, kPi / 4.0);
            const IncidenceCoeffs c = coefficients(g);
            const ApproxParams ap = approx_params(c, m);
            if (ap.b_hat < 1e-3) continue;  // worst-configuration band
            const CosPsiDistribution d = make_cos_psi(c, m);
            double ksd = 0.0;
            for (int k = 0; k <= 4000; ++k) {
                const double tau = std::min(
                    ap.tau_min + (ap.tau_max - ap.tau_min) * k / 4000.0, ap.tau_max);
                ksd = std::max(ksd, std::abs(exact_cdf(d, tau) - approx_cdf(ap, tau)));
            }
            acc += ksd;
            ++count;
        }
    }
    const double avg = acc / count;
    report(5, avg < pinned_bound,
           "grid-averaged exact-vs-approx sup distance = " + format_double(avg) +
               " over " + std::to_string(count) + " positions (bound " +
               format_double(pinned_bound) + ")");
}

void criterion_6() {
    const OrientationModel m = OrientationModel::sitting_laplace();
    Rng rng(61);
    int pass1 = 0, total1 = 0;
    while (total1 < 100) {
        const LinkGeometry g = random_geometry(rng, m);
        const IncidenceCoeffs c = coefficients(g);
        if (c.a >= 0.0) continue;
        if (m.scale >= std::min(-c.b / c.a, -c.a / c.b)) continue;
        ++total1;
        if (verify_proposition1(c, m, 400).passed()) ++pass1;
    }

    int pass2 = 0, total2 = 0;
    while (total2 < 100) {
        const LinkGeometry g = random_geometry(rng, m);
        const IncidenceCoeffs c = coefficients(g);
        if (c.a < 0.0) continue;
        const CosPsiDistribution d = make_cos_psi(c, m);
        const double tau_d = c.radius() / std::sqrt(1.0 + m.scale * m.scale);
        if (!d.tau_star || *d.tau_star >= tau_d) continue;  // generic pattern only
        ++total2;
        const PropositionReport rep = verify_proposition2(c, m, 400);
        if (rep.passed() && rep.tau_d && *rep.tau_d < c.radius()) ++pass2;
    }
    report(6, pass1 == 100 && pass2 == 100,
           "density monotonicity scans: " + std::to_string(pass1) +
               "/100 facing-away and " + std::to_string(pass2) +
               "/100 facing-toward geometries");
}

void criterion_7() {
    Rng rng(71);
    const std::size_t n = 1000000;
    const double length = 10.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += transition_length(draw_waypoint(length, rng), draw_waypoint(length, rng));
    const double ratio = acc / static_cast<double>(n) / length;
    report(7, std::abs(ratio - 0.5214) <= 0.003,
           "mean transition length / room length = " + format_double(ratio));
}

void criterion_8() {
    const double mean = deg2rad(29.67), sd = deg2rad(7.78);
    const Ar1Params p = ar1_from_stats(mean, sd, 0.013, 0.130);
    const std::size_t n = 1000000;
    Rng rng(81);
    std::vector<double> series;
    series.reserve(n);
    double theta = ar1_stationary_draw(p, rng);
    for (std::size_t i = 0; i < n; ++i) {
        theta = ar1_step(p, theta, rng);
        series.push_back(theta);
    }
    double m = 0.0;
    for (double v : series) m += v;
    m /= static_cast<double>(n);
    double var = 0.0;
    for (double v : series) var += (v - m) * (v - m);
    var /= static_cast<double>(n);

    const double n_d = static_cast<double>(n);
    const double se_mean = sd * std::sqrt((1.0 + p.c1) / (1.0 - p.c1)) / std::sqrt(n_d);
    const double corr = (1.0 + p.c1 * p.c1) / (1.0 - p.c1 * p.c1);
    const double se_var = sd * sd * std::sqrt(2.0 * corr / n_d);
    const std::vector<double> acf = autocorrelation(series, 10);

    const bool mean_ok = std::abs(m - p.stationary_mean()) <= 3.0 * se_mean;
    const bool var_ok = std::abs(var - p.stationary_var()) <= 3.0 * se_var;
    const bool acf_ok = std::abs(acf[10] - 0.05) <= 0.02;
    report(8, mean_ok && var_ok && acf_ok,
           "AR(1) fidelity: |mean err| = " + format_double(std::abs(m - p.stationary_mean())) +
               " (3se " + format_double(3.0 * se_mean) + "), |var err| = " +
               format_double(std::abs(var - p.stationary_var())) + " (3se " +
               format_double(3.0 * se_var) + "), acf@coherence = " +
               format_double(acf[10]));
}

void criterion_9() {
    const ChannelParams chan;
    const std::vector<double> lengths{4.0, 8.0, 12.0, 16.0};
    const std::vector<double> speeds{1.0, 1.4, 2.0};
    const std::size_t runs = 10000;

    double up[3][4], gauss[3][4];
    for (std::size_t iv = 0; iv < speeds.size(); ++iv) {
        for (std::size_t il = 0; il < lengths.size(); ++il) {
            OrwpConfig cfg;
            cfg.room_length = lengths[il];
            cfg.speed = speeds[iv];
            cfg.theta_mean = deg2rad(29.67);
            cfg.theta_std = deg2rad(7.78);
            cfg.ap_positions = quadrant_aps(lengths[il]);
            cfg.seed = 20250809;
            up[iv][il] = handover_rate(cfg, chan, MobilityMode::VerticalUpward, runs).rate_hz;
            gauss[iv][il] =
                handover_rate(cfg, chan, MobilityMode::OrwpGaussian, runs).rate_hz;
        }
    }

    bool down_in_length = true, up_in_speed = true, gauss_above = true,
         gap_shrinks = true;
    for (std::size_t iv = 0; iv < 3; ++iv) {
        for (std::size_t il = 0; il < 4; ++il) {
            if (il > 0 && !(up[iv][il] < up[iv][il - 1] && gauss[iv][il] < gauss[iv][il - 1]))
                down_in_length = false;
            if (iv > 0 && !(up[iv][il] > up[iv - 1][il] && gauss[iv][il] > gauss[iv - 1][il]))
                up_in_speed = false;
            if (!(gauss[iv][il] > up[iv][il])) gauss_above = false;
            if (il > 0) {
                const double gap_prev = gauss[iv][il - 1] - up[iv][il - 1];
                const double gap_cur = gauss[iv][il] - up[iv][il];
                if (!(gap_cur < gap_prev)) gap_shrinks = false;
            }
        }
    }

    std::printf("    handover rates (Hz), vertical vs orientation-driven:\n");
    for (std::size_t iv = 0; iv < 3; ++iv) {
        std::printf("      v=%.1f:", speeds[iv]);
        for (std::size_t il = 0; il < 4; ++il)
            std::printf("  L=%-2.0f %.4f/%.4f", lengths[il], up[iv][il], gauss[iv][il]);
        std::printf("\n");
    }
    std::printf("    clauses: rate down in L=%s, rate up in v=%s, orientation above vertical=%s, gap shrinking in L=%s\n",
                down_in_length ? "yes" : "NO", up_in_speed ? "yes" : "NO",
                gauss_above ? "yes" : "NO", gap_shrinks ? "yes" : "NO");
    report(9, down_in_length && up_in_speed && gauss_above && gap_shrinks,
           "handover-rate trends over L in {4,8,12,16} m, v in {1,1.4,2} m/s");
}

void criterion_10() {
    const OrientationModel m = OrientationModel::sitting_laplace();
    const ChannelParams chan;
    const LinkGeometry g = geom(-1.0, -1.0, kPi / 4.0);

    // Reference derived once by a 1e7-sample run of this Monte Carlo.
    const double pinned = 0.042693;

    const IncidenceCoeffs c = coefficients(g);
    Rng rng(424242);
    const double cos_fov = std::cos(chan.fov);
    const std::size_t n = 1000000;
    std::size_t clipped = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (cos_psi(c, trunc_quantile(m, rng.uniform01())) < cos_fov) ++clipped;
    const double mc = static_cast<double>(clipped) / static_cast<double>(n);

    const GainDistribution dist = gain_distribution(g, chan, m);
    const double closed_form = exact_cdf(make_cos_psi(c, m), cos_fov);

    const bool ok = std::abs(mc - pinned) <= 0.002 &&
                    std::abs(dist.dirac_mass - pinned) <= 0.01 &&
                    std::abs(closed_form - pinned) <= 0.01;
    report(10, ok,
           "zero-gain mass at the offset link: monte carlo " + format_double(mc) +
               ", closed form " + format_double(closed_form) + ", model " +
               format_double(dist.dirac_mass) + " (pinned " + format_double(pinned) +
               ")");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
