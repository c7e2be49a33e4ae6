// SPDX-License-Identifier: Apache-2.0

#include "orilink/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "orilink/version.hpp"

namespace orilink {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_number(const std::string& cell, std::size_t line_no, const char* column) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(cell, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": column '" + column +
                         "' is not a number: '" + cell + "'");
    }
    if (pos != cell.size())
        throw ParseError("line " + std::to_string(line_no) + ": column '" + column +
                         "' has trailing characters: '" + cell + "'");
    return v;
}

}  // namespace

OrientationDataset parse_orientation_csv(std::istream& in) {
    static const char* kColumns[] = {"t_seconds", "alpha_deg", "beta_deg", "gamma_deg"};

    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty file: header row required");
    const std::vector<std::string> header = split_csv_line(line);
    for (const char* want : kColumns) {
        if (std::find(header.begin(), header.end(), want) == header.end())
            throw ParseError(std::string("missing column '") + want + "' in header");
    }
    if (header.size() != 4) throw ParseError("header must be t_seconds,alpha_deg,beta_deg,gamma_deg");
    std::size_t idx[4];
    for (int c = 0; c < 4; ++c)
        idx[c] = static_cast<std::size_t>(
            std::find(header.begin(), header.end(), kColumns[c]) - header.begin());

    OrientationDataset data;
    std::size_t line_no = 1;
    double prev_t = -std::numeric_limits<double>::infinity();
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(cells.size()));
        const double t = parse_number(cells[idx[0]], line_no, kColumns[0]);
        const double alpha_deg = parse_number(cells[idx[1]], line_no, kColumns[1]);
        const double beta_deg = parse_number(cells[idx[2]], line_no, kColumns[2]);
        const double gamma_deg = parse_number(cells[idx[3]], line_no, kColumns[3]);
        if (!(t > prev_t))
            throw NonMonotonicTimestamps("line " + std::to_string(line_no) +
                                         ": t_seconds must be strictly increasing");
        prev_t = t;
        if (gamma_deg < -90.0 || gamma_deg >= 90.0)
            throw ParseError("line " + std::to_string(line_no) +
                             ": gamma_deg outside [-90, 90)");

        const double alpha = wrap_two_pi(deg2rad(alpha_deg));
        double beta = wrap_pi(deg2rad(beta_deg));
        if (beta == kPi) beta = -kPi;  // header range is [-pi, pi)
        const double gamma = deg2rad(gamma_deg);

        for (SampleSeries* s : {&data.alpha, &data.beta, &data.gamma, &data.theta})
            s->timestamps.push_back(t);
        data.alpha.values.push_back(alpha);
        data.beta.values.push_back(beta);
        data.gamma.values.push_back(gamma);
        data.theta.values.push_back(polar_angle({alpha, beta, gamma}));
    }
    if (data.theta.values.empty()) throw ParseError("no data rows");
    return data;
}

OrientationDataset ingest_orientation_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open dataset '" + path + "'");
    return parse_orientation_csv(in);
}

namespace {

void stamp(TableArtifact& t, const RunConfig& cfg) {
    t.scenario = to_string(cfg.scenario);
    t.config_hash = config_hash(cfg);
    t.seed = cfg.seed;
    t.version = kVersion;
}

std::string fmt(double v) { return format_double(v); }

TableArtifact tabulate_cospsi(const RunConfig& cfg) {
    TableArtifact t;
    stamp(t, cfg);
    t.columns = {"ue_x", "ue_y", "tau", "exact_pdf", "approx_pdf", "exact_cdf", "approx_cdf"};

    const OrientationModel model = cfg.orientation.build();
    LinkGeometry base = cfg.geometry.build();
    std::vector<std::array<double, 2>> grid = cfg.tabulate.ue_grid_m;
    if (grid.empty()) grid.push_back({base.ue.x, base.ue.y});

    for (const auto& ue : grid) {
        LinkGeometry g = base;
        g.ue.x = ue[0];
        g.ue.y = ue[1];
        const IncidenceCoeffs c = coefficients(g);
        const CosPsiDistribution d = make_cos_psi(c, model);
        const ApproxParams ap = approx_params(c, model);
        const std::size_t n = cfg.tabulate.n_points;
        for (std::size_t i = 0; i < n; ++i) {
            const double tau =
                ap.tau_min + (ap.tau_max - ap.tau_min) * static_cast<double>(i) /
                                 static_cast<double>(n - 1);
            double fe = 0.0;
            if (tau > d.support_lo && tau < d.support_hi)
                fe = std::min(exact_pdf(d, tau), cfg.tabulate.pdf_ceiling);
            const double fa = ap.b_hat > 0.0 ? approx_pdf(ap, tau) : 0.0;
            const double Fe = exact_cdf(d, tau);
            const double Fa = ap.b_hat > 0.0 ? approx_cdf(ap, tau) : (tau >= ap.mu_hat);
            t.add_row({fmt(ue[0]), fmt(ue[1]), fmt(tau), fmt(fe), fmt(fa), fmt(Fe), fmt(Fa)});
        }
    }
    return t;
}

TableArtifact tabulate_gain(const RunConfig& cfg) {
    TableArtifact t;
    stamp(t, cfg);
    t.columns = {"h", "pdf", "cdf", "dirac_mass"};
    const GainDistribution dist = gain_distribution(
        cfg.geometry.build(), cfg.channel.build(), cfg.orientation.build());
    if (dist.point_mass)
        throw NumericError("gain distribution is a point mass at " +
                           format_double(*dist.point_mass) + "; nothing to tabulate");
    const std::size_t n = cfg.tabulate.n_points;
    for (std::size_t i = 0; i < n; ++i) {
        const double h = dist.h_max * static_cast<double>(i) / static_cast<double>(n - 1);
        t.add_row({fmt(h), fmt(gain_pdf(dist, h)), fmt(gain_cdf(dist, h)),
                   fmt(dist.dirac_mass)});
    }
    return t;
}

TableArtifact tabulate_snr(const RunConfig& cfg) {
    TableArtifact t;
    stamp(t, cfg);
    t.columns = {"snr", "pdf", "cdf", "dirac_mass"};
    const ChannelParams chan = cfg.channel.build();
    const GainDistribution dist =
        gain_distribution(cfg.geometry.build(), chan, cfg.orientation.build());
    if (dist.point_mass)
        throw NumericError("gain distribution is a point mass; nothing to tabulate");
    const SnrSupport sup = snr_support(dist, chan);
    const double s_max = sup.s_max;
    const std::size_t n = cfg.tabulate.n_points;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = s_max * static_cast<double>(i) / static_cast<double>(n - 1);
        t.add_row({fmt(s), fmt(snr_pdf(dist, chan, s)), fmt(snr_cdf(dist, chan, s)),
                   fmt(dist.dirac_mass)});
    }
    return t;
}

TableArtifact orwp_sweep(const RunConfig& cfg) {
    TableArtifact t;
    stamp(t, cfg);
    t.columns = {"L", "v", "mode", "rate_hz", "n_handovers", "sim_seconds", "seed"};
    const ChannelParams chan = cfg.channel.build();
    for (double length : cfg.sweep.lengths_m) {
        for (double speed : cfg.sweep.speeds_mps) {
            for (MobilityMode mode :
                 {MobilityMode::VerticalUpward, MobilityMode::OrwpGaussian}) {
                OrwpSection section = cfg.orwp;
                section.room_length_m = length;
                section.speed_mps = speed;
                section.ap_positions_m.clear();  // quadrant layout scales with L
                const OrwpConfig orwp = section.build(cfg.seed);
                const HandoverStats stats = handover_rate(orwp, chan, mode, cfg.sweep.runs);
                t.add_row({fmt(length), fmt(speed),
                           mode == MobilityMode::VerticalUpward ? "vertical_upward"
                                                                : "orwp_gaussian",
                           fmt(stats.rate_hz), std::to_string(stats.handovers),
                           fmt(stats.sim_seconds), std::to_string(cfg.seed)});
            }
        }
    }
    return t;
}

// One row per validation check: name, measured value, bound, verdict.
class ValidationTable {
  public:
    explicit ValidationTable(TableArtifact& t) : t_(t) {
        t_.columns = {"check", "measured", "bound", "result"};
    }

    void check(const std::string& name, double measured, double bound) {
        const bool pass = measured <= bound;
        t_.add_row({name, format_double(measured), format_double(bound),
                    pass ? "pass" : "fail"});
        if (!pass) t_.ok = false;
    }

  private:
    TableArtifact& t_;
};

TableArtifact validate_scenario(const RunConfig& cfg) {
    TableArtifact t;
    stamp(t, cfg);
    ValidationTable table(t);

    const OrientationModel model = cfg.orientation.build();
    const ChannelParams chan = cfg.channel.build();
    const ToleranceSection& tol = cfg.tolerances;
    const std::size_t n = tol.mc_samples;

    // Geometries spanning a < 0, a ~ 0 and a > 0 around the configured AP.
    LinkGeometry base = cfg.geometry.build();
    base.omega = kPi / 4.0;
    std::vector<std::pair<std::string, LinkGeometry>> geoms;
    for (const auto& [label, dx, dy] :
         {std::tuple<const char*, double, double>{"neg_a", -1.0, -1.0},
          std::tuple<const char*, double, double>{"zero_a", 0.0, 0.0},
          std::tuple<const char*, double, double>{"pos_a", 3.0, 3.0}}) {
        LinkGeometry g = base;
        g.ue.x = g.ap.x + dx;
        g.ue.y = g.ap.y + dy;
        geoms.emplace_back(label, g);
    }

    int stream = 0;
    for (const auto& [label, g] : geoms) {
        const IncidenceCoeffs c = coefficients(g);
        const CosPsiDistribution d = make_cos_psi(c, model);
        table.check("exact_cospsi_mass_" + label,
                    std::abs(exact_pdf_mass(d, tol.quadrature * 0.1) - 1.0),
                    tol.quadrature);

        const ApproxParams ap = approx_params(c, model);
        const double approx_mass =
            integrate([&](double x) { return approx_pdf(ap, x); }, ap.tau_min, ap.mu_hat,
                      tol.quadrature * 0.05) +
            integrate([&](double x) { return approx_pdf(ap, x); }, ap.mu_hat, ap.tau_max,
                      tol.quadrature * 0.05);
        table.check("approx_cospsi_mass_" + label, std::abs(approx_mass - 1.0),
                    tol.quadrature);

        const GainDistribution dist = gain_distribution(g, chan, model);
        const double gain_mass =
            integrate([&](double h) { return gain_pdf(dist, h); }, dist.clip_gain(),
                      std::clamp(dist.mu_h, dist.clip_gain(), dist.h_max),
                      tol.quadrature * 0.05) +
            integrate([&](double h) { return gain_pdf(dist, h); },
                      std::clamp(dist.mu_h, dist.clip_gain(), dist.h_max), dist.h_max,
                      tol.quadrature * 0.05) +
            dist.dirac_mass;
        table.check("gain_mass_" + label, std::abs(gain_mass - 1.0), tol.quadrature);

        const double s0 = chan.snr_scale();
        const auto snr_in_u = [&](double u) {
            const double s = u * u;
            return s > 0.0 ? snr_pdf(dist, chan, s) * 2.0 * u : 0.0;
        };
        const double u_lo = std::sqrt(s0) * dist.clip_gain();
        const double u_mid = std::sqrt(s0) * std::clamp(dist.mu_h, dist.clip_gain(), dist.h_max);
        const double u_hi = std::sqrt(s0) * dist.h_max;
        const double snr_mass = integrate(snr_in_u, u_lo, u_mid, tol.quadrature * 0.05) +
                                integrate(snr_in_u, u_mid, u_hi, tol.quadrature * 0.05) +
                                dist.dirac_mass;
        table.check("snr_mass_" + label, std::abs(snr_mass - 1.0), tol.quadrature);

        // Monte-Carlo pushforward against the closed forms along the exact
        // route.
        Rng rng(Rng::mix(cfg.seed, static_cast<std::uint64_t>(stream++)));
        std::vector<double> taus;
        taus.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            taus.push_back(cos_psi(c, trunc_quantile(model, rng.uniform01())));
        table.check("cospsi_mc_ksd_" + label,
                    ks_distance(taus, [&](double x) { return exact_cdf(d, x); }), tol.ksd);

        const double cos_fov = std::cos(chan.fov);
        std::vector<double> gains;
        gains.reserve(n);
        for (double tau : taus)
            gains.push_back(tau >= cos_fov ? dist.h_n * tau : 0.0);
        const auto gain_cdf_exact = [&](double h) {
            if (h < 0.0) return 0.0;
            return exact_cdf(d, std::max(h / dist.h_n, cos_fov));
        };
        // The pushforward has an atom at zero gain; its left limit there is 0.
        const auto gain_cdf_left = [&](double h) {
            return h <= 0.0 ? 0.0 : gain_cdf_exact(h);
        };
        table.check("gain_mc_ksd_" + label,
                    ks_distance(gains, gain_cdf_exact, gain_cdf_left), tol.ksd);

        std::vector<double> snrs;
        snrs.reserve(n);
        for (double h : gains) snrs.push_back(s0 * h * h);
        table.check("snr_mc_ksd_" + label,
                    ks_distance(
                        snrs,
                        [&](double s) {
                            return s < 0.0 ? 0.0 : gain_cdf_exact(std::sqrt(s / s0));
                        },
                        [&](double s) {
                            return s <= 0.0 ? 0.0 : gain_cdf_exact(std::sqrt(s / s0));
                        }),
                    tol.ksd);
    }

    // AR(1) moments and coherence decay.
    {
        const OrwpConfig orwp = cfg.orwp.build(cfg.seed);
        const Ar1Params ar =
            ar1_from_stats(orwp.theta_mean, orwp.theta_std, orwp.ts, orwp.tc_theta);
        Rng rng(Rng::mix(cfg.seed, 7));
        std::vector<double> series;
        series.reserve(n);
        double theta = ar1_stationary_draw(ar, rng);
        for (std::size_t i = 0; i < n; ++i) {
            theta = ar1_step(ar, theta, rng);
            series.push_back(theta);
        }
        double mean = 0.0;
        for (double v : series) mean += v;
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (double v : series) var += (v - mean) * (v - mean);
        var /= static_cast<double>(n);

        const double n_d = static_cast<double>(n);
        const double se_mean = orwp.theta_std *
                               std::sqrt((1.0 + ar.c1) / (1.0 - ar.c1)) / std::sqrt(n_d);
        table.check("ar1_mean", std::abs(mean - ar.stationary_mean()),
                    tol.moment_sigmas * se_mean);
        table.check("ar1_var_rel",
                    std::abs(var - ar.stationary_var()) / ar.stationary_var(), 0.05);

        const auto lag = static_cast<std::size_t>(std::lround(orwp.tc_theta / orwp.ts));
        const std::vector<double> acf = autocorrelation(series, lag);
        table.check("ar1_acf_coherence", std::abs(acf[lag] - 0.05), 0.02);
    }

    // Mean transition length of uniform waypoint pairs.
    {
        Rng rng(Rng::mix(cfg.seed, 202));
        const double length = cfg.orwp.room_length_m;
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 p0 = draw_waypoint(length, rng);
            const Point2 p1 = draw_waypoint(length, rng);
            acc += transition_length(p0, p1);
        }
        const double mean_ratio = acc / static_cast<double>(n) / length;
        const double bound = std::max(0.003, tol.moment_sigmas * 0.2447 / std::sqrt(static_cast<double>(n)));
        table.check("rwp_mean_transition", std::abs(mean_ratio - 0.5214), bound);
    }

    return t;
}

TableArtifact fit_scenario(const RunConfig& cfg) {
    if (cfg.input.empty())
        throw InvalidConfig("fit_dataset: config.input must name a CSV file");
    TableArtifact t = fit_dataset_table(ingest_orientation_csv(cfg.input));
    stamp(t, cfg);
    return t;
}

}  // namespace

TableArtifact fit_dataset_table(const OrientationDataset& data) {
    TableArtifact t;
    t.scenario = to_string(Scenario::FitDataset);
    t.columns = {"angle", "family", "n",        "mu_deg", "sigma_deg",
                 "scale",  "ksd",    "skewness", "kurtosis"};
    for (Family family : {Family::Laplace, Family::Gaussian}) {
        const FitReport rep = fit_mle(data.theta, family);
        const double sigma = family == Family::Laplace
                                 ? rep.model.scale * std::sqrt(2.0)
                                 : rep.model.scale;
        t.add_row({"theta", family == Family::Laplace ? "laplace" : "gaussian",
                   std::to_string(data.theta.size()), fmt(rad2deg(rep.model.mu)),
                   fmt(rad2deg(sigma)), fmt(rep.model.scale), fmt(rep.ksd),
                   fmt(rep.skewness), fmt(rep.kurtosis)});
    }
    return t;
}

TableArtifact trajectory_table(const RunConfig& cfg, std::size_t n_runs) {
    TableArtifact t;
    stamp(t, cfg);
    t.scenario = "orwp_trajectory";
    t.columns = {"t", "x", "y", "omega_rad", "theta_rad", "serving_ap"};
    const Trajectory traj = generate_trajectory(cfg.orwp.build(cfg.seed),
                                                cfg.channel.build(), n_runs);
    for (const TrajectorySample& s : traj.samples) {
        t.add_row({fmt(s.t), fmt(s.position.x), fmt(s.position.y), fmt(s.omega),
                   fmt(s.theta), std::to_string(s.serving_ap)});
    }
    return t;
}

TableArtifact run(const RunConfig& cfg) {
    switch (cfg.scenario) {
        case Scenario::FitDataset: return fit_scenario(cfg);
        case Scenario::TabulateCosPsi: return tabulate_cospsi(cfg);
        case Scenario::TabulateGain: return tabulate_gain(cfg);
        case Scenario::TabulateSnr: return tabulate_snr(cfg);
        case Scenario::OrwpSweep: return orwp_sweep(cfg);
        case Scenario::Validate: return validate_scenario(cfg);
    }
    throw ValidationError("unknown scenario");
}

}  // namespace orilink
