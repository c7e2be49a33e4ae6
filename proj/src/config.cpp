// SPDX-License-Identifier: Apache-2.0

#include "orilink/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "orilink/math_util.hpp"

namespace orilink {

using nlohmann::json;

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::FitDataset: return "fit_dataset";
        case Scenario::TabulateCosPsi: return "tabulate_cospsi";
        case Scenario::TabulateGain: return "tabulate_gain";
        case Scenario::TabulateSnr: return "tabulate_snr";
        case Scenario::OrwpSweep: return "orwp_sweep";
        case Scenario::Validate: return "validate";
    }
    throw ValidationError("unknown scenario value");
}

Scenario scenario_from_string(const std::string& name) {
    if (name == "fit_dataset") return Scenario::FitDataset;
    if (name == "tabulate_cospsi") return Scenario::TabulateCosPsi;
    if (name == "tabulate_gain") return Scenario::TabulateGain;
    if (name == "tabulate_snr") return Scenario::TabulateSnr;
    if (name == "orwp_sweep") return Scenario::OrwpSweep;
    if (name == "validate") return Scenario::Validate;
    throw ValidationError("scenario: unknown name '" + name + "'");
}

namespace {

double sigma_from(double value_deg, bool is_variance, const char* field) {
    if (is_variance && value_deg < 0.0)
        throw ValidationError(std::string(field) + ": variance must be >= 0");
    return is_variance ? std::sqrt(value_deg) : value_deg;
}

// Typed field extraction with strict key checking.
class ObjectReader {
  public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ParseError(path_ + ": expected a JSON object");
    }

    template <typename T>
    void get(const char* key, T& out) {
        seen_.insert(key);
        auto it = j_.find(key);
        if (it == j_.end()) return;
        try {
            out = it->get<T>();
        } catch (const json::exception& e) {
            throw ParseError(path_ + "." + key + ": " + e.what());
        }
    }

    bool has(const char* key) const { return j_.contains(key); }

    const json& child(const char* key) {
        seen_.insert(key);
        return j_.at(key);
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!seen_.count(it.key()))
                throw ParseError(path_ + "." + it.key() + ": unknown field");
        }
    }

  private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

void read_orientation(const json& j, OrientationConfig& c) {
    ObjectReader r(j, "orientation");
    r.get("family", c.family);
    r.get("mu_deg", c.mu_deg);
    r.get("sigma_deg", c.sigma_deg);
    r.get("sigma_is_variance", c.sigma_is_variance);
    r.get("lower_deg", c.lower_deg);
    r.get("upper_deg", c.upper_deg);
    r.get("exact_normalization", c.exact_normalization);
    r.finish();
}

void read_geometry(const json& j, GeometryConfig& c) {
    ObjectReader r(j, "geometry");
    r.get("ap_m", c.ap_m);
    r.get("ue_m", c.ue_m);
    r.get("omega_deg", c.omega_deg);
    r.finish();
}

void read_channel(const json& j, ChannelConfig& c) {
    ObjectReader r(j, "channel");
    r.get("area_cm2", c.area_cm2);
    r.get("half_angle_deg", c.half_angle_deg);
    r.get("fov_deg", c.fov_deg);
    r.get("responsivity_a_per_w", c.responsivity_a_per_w);
    r.get("p_opt_w", c.p_opt_w);
    r.get("noise_psd_a2_per_hz", c.noise_psd_a2_per_hz);
    r.get("bandwidth_hz", c.bandwidth_hz);
    r.finish();
}

void read_orwp(const json& j, OrwpSection& c) {
    ObjectReader r(j, "orwp");
    r.get("room_length_m", c.room_length_m);
    r.get("speed_mps", c.speed_mps);
    r.get("sample_time_s", c.sample_time_s);
    r.get("coherence_time_s", c.coherence_time_s);
    r.get("theta_mean_deg", c.theta_mean_deg);
    r.get("theta_sigma_deg", c.theta_sigma_deg);
    r.get("sigma_is_variance", c.sigma_is_variance);
    r.get("ue_height_m", c.ue_height_m);
    r.get("ap_height_m", c.ap_height_m);
    r.get("ap_positions_m", c.ap_positions_m);
    r.get("random_initial_ap", c.random_initial_ap);
    r.finish();
}

void read_sweep(const json& j, SweepSection& c) {
    ObjectReader r(j, "sweep");
    r.get("lengths_m", c.lengths_m);
    r.get("speeds_mps", c.speeds_mps);
    r.get("runs", c.runs);
    r.finish();
}

void read_tabulate(const json& j, TabulateSection& c) {
    ObjectReader r(j, "tabulate");
    r.get("n_points", c.n_points);
    r.get("pdf_ceiling", c.pdf_ceiling);
    r.get("ue_grid_m", c.ue_grid_m);
    r.finish();
}

void read_tolerances(const json& j, ToleranceSection& c) {
    ObjectReader r(j, "tolerances");
    r.get("ksd", c.ksd);
    r.get("quadrature", c.quadrature);
    r.get("moment_sigmas", c.moment_sigmas);
    r.get("cw_band", c.cw_band);
    r.get("mc_samples", c.mc_samples);
    r.finish();
}

void validate_config(const RunConfig& cfg) {
    cfg.orientation.build();
    cfg.geometry.build();
    cfg.channel.build();
    cfg.orwp.build(cfg.seed);
    if (cfg.sweep.lengths_m.empty()) throw ValidationError("sweep.lengths_m: must not be empty");
    if (cfg.sweep.speeds_mps.empty()) throw ValidationError("sweep.speeds_mps: must not be empty");
    for (double l : cfg.sweep.lengths_m)
        if (!(l > 0.0)) throw ValidationError("sweep.lengths_m: lengths must be > 0");
    for (double v : cfg.sweep.speeds_mps)
        if (!(v > 0.0)) throw ValidationError("sweep.speeds_mps: speeds must be > 0");
    if (cfg.sweep.runs == 0) throw ValidationError("sweep.runs: must be >= 1");
    if (cfg.tabulate.n_points < 2) throw ValidationError("tabulate.n_points: must be >= 2");
    if (!(cfg.tabulate.pdf_ceiling > 0.0))
        throw ValidationError("tabulate.pdf_ceiling: must be > 0");
    if (!(cfg.tolerances.ksd > 0.0)) throw ValidationError("tolerances.ksd: must be > 0");
    if (!(cfg.tolerances.quadrature > 0.0))
        throw ValidationError("tolerances.quadrature: must be > 0");
    if (!(cfg.tolerances.moment_sigmas > 0.0))
        throw ValidationError("tolerances.moment_sigmas: must be > 0");
    if (cfg.tolerances.mc_samples < 100)
        throw ValidationError("tolerances.mc_samples: must be >= 100");
}

}  // namespace

OrientationModel OrientationConfig::build() const {
    OrientationModel m;
    if (family == "laplace") {
        m.family = Family::Laplace;
    } else if (family == "gaussian") {
        m.family = Family::Gaussian;
    } else {
        throw ValidationError("orientation.family: expected 'laplace' or 'gaussian'");
    }
    const double sigma_rad =
        deg2rad(sigma_from(sigma_deg, sigma_is_variance, "orientation.sigma_deg"));
    m.mu = deg2rad(mu_deg);
    m.scale = m.family == Family::Laplace ? sigma_rad / std::sqrt(2.0) : sigma_rad;
    m.lower = deg2rad(lower_deg);
    m.upper = deg2rad(upper_deg);
    m.exact_normalization = exact_normalization;
    m.validate();
    return m;
}

LinkGeometry GeometryConfig::build() const {
    LinkGeometry g;
    g.ap = {ap_m[0], ap_m[1], ap_m[2]};
    g.ue = {ue_m[0], ue_m[1], ue_m[2]};
    g.omega = deg2rad(omega_deg);
    g.validate();
    return g;
}

ChannelParams ChannelConfig::build() const {
    ChannelParams p;
    p.area = area_cm2 * 1e-4;
    p.half_angle = deg2rad(half_angle_deg);
    p.fov = deg2rad(fov_deg);
    p.responsivity = responsivity_a_per_w;
    p.p_opt = p_opt_w;
    p.noise_psd = noise_psd_a2_per_hz;
    p.bandwidth = bandwidth_hz;
    p.validate();
    return p;
}

OrwpConfig OrwpSection::build(std::uint64_t seed) const {
    OrwpConfig c;
    c.room_length = room_length_m;
    c.speed = speed_mps;
    c.ts = sample_time_s;
    c.tc_theta = coherence_time_s;
    c.theta_mean = deg2rad(theta_mean_deg);
    c.theta_std =
        deg2rad(sigma_from(theta_sigma_deg, sigma_is_variance, "orwp.theta_sigma_deg"));
    c.ue_height = ue_height_m;
    if (ap_positions_m.empty()) {
        c.ap_positions = quadrant_aps(room_length_m, ap_height_m);
    } else {
        for (const auto& p : ap_positions_m) c.ap_positions.push_back({p[0], p[1], p[2]});
    }
    c.seed = seed;
    c.random_initial_ap = random_initial_ap;
    c.validate();
    return c;
}

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
    }

    RunConfig cfg;
    ObjectReader r(j, "config");
    std::string scenario_name = to_string(cfg.scenario);
    r.get("scenario", scenario_name);
    cfg.scenario = scenario_from_string(scenario_name);
    r.get("seed", cfg.seed);
    r.get("output", cfg.output);
    r.get("input", cfg.input);
    if (r.has("orientation")) read_orientation(r.child("orientation"), cfg.orientation);
    if (r.has("geometry")) read_geometry(r.child("geometry"), cfg.geometry);
    if (r.has("channel")) read_channel(r.child("channel"), cfg.channel);
    if (r.has("orwp")) read_orwp(r.child("orwp"), cfg.orwp);
    if (r.has("sweep")) read_sweep(r.child("sweep"), cfg.sweep);
    if (r.has("tabulate")) read_tabulate(r.child("tabulate"), cfg.tabulate);
    if (r.has("tolerances")) read_tolerances(r.child("tolerances"), cfg.tolerances);
    r.finish();

    validate_config(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string save_config(const RunConfig& cfg) {
    json j;
    j["scenario"] = to_string(cfg.scenario);
    j["seed"] = cfg.seed;
    j["output"] = cfg.output;
    j["input"] = cfg.input;
    j["orientation"] = {{"family", cfg.orientation.family},
                        {"mu_deg", cfg.orientation.mu_deg},
                        {"sigma_deg", cfg.orientation.sigma_deg},
                        {"sigma_is_variance", cfg.orientation.sigma_is_variance},
                        {"lower_deg", cfg.orientation.lower_deg},
                        {"upper_deg", cfg.orientation.upper_deg},
                        {"exact_normalization", cfg.orientation.exact_normalization}};
    j["geometry"] = {{"ap_m", cfg.geometry.ap_m},
                     {"ue_m", cfg.geometry.ue_m},
                     {"omega_deg", cfg.geometry.omega_deg}};
    j["channel"] = {{"area_cm2", cfg.channel.area_cm2},
                    {"half_angle_deg", cfg.channel.half_angle_deg},
                    {"fov_deg", cfg.channel.fov_deg},
                    {"responsivity_a_per_w", cfg.channel.responsivity_a_per_w},
                    {"p_opt_w", cfg.channel.p_opt_w},
                    {"noise_psd_a2_per_hz", cfg.channel.noise_psd_a2_per_hz},
                    {"bandwidth_hz", cfg.channel.bandwidth_hz}};
    j["orwp"] = {{"room_length_m", cfg.orwp.room_length_m},
                 {"speed_mps", cfg.orwp.speed_mps},
                 {"sample_time_s", cfg.orwp.sample_time_s},
                 {"coherence_time_s", cfg.orwp.coherence_time_s},
                 {"theta_mean_deg", cfg.orwp.theta_mean_deg},
                 {"theta_sigma_deg", cfg.orwp.theta_sigma_deg},
                 {"sigma_is_variance", cfg.orwp.sigma_is_variance},
                 {"ue_height_m", cfg.orwp.ue_height_m},
                 {"ap_height_m", cfg.orwp.ap_height_m},
                 {"ap_positions_m", cfg.orwp.ap_positions_m},
                 {"random_initial_ap", cfg.orwp.random_initial_ap}};
    j["sweep"] = {{"lengths_m", cfg.sweep.lengths_m},
                  {"speeds_mps", cfg.sweep.speeds_mps},
                  {"runs", cfg.sweep.runs}};
    j["tabulate"] = {{"n_points", cfg.tabulate.n_points},
                     {"pdf_ceiling", cfg.tabulate.pdf_ceiling},
                     {"ue_grid_m", cfg.tabulate.ue_grid_m}};
    j["tolerances"] = {{"ksd", cfg.tolerances.ksd},
                       {"quadrature", cfg.tolerances.quadrature},
                       {"moment_sigmas", cfg.tolerances.moment_sigmas},
                       {"cw_band", cfg.tolerances.cw_band},
                       {"mc_samples", cfg.tolerances.mc_samples}};
    return j.dump(2) + "\n";
}

std::string config_hash(const RunConfig& cfg) {
    const std::string text = save_config(cfg);
    const std::uint64_t h = fnv1a64(text.data(), text.size());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace orilink
