// SPDX-License-Identifier: Apache-2.0
//
// Run configuration for the CLI. The JSON schema keeps boundary units
// (degrees, centimeters) verbatim; the build() methods convert to the
// radian/SI domain objects used by the library.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "orilink/channel.hpp"
#include "orilink/mobility.hpp"

namespace orilink {

enum class Scenario {
    FitDataset,
    TabulateCosPsi,
    TabulateGain,
    TabulateSnr,
    OrwpSweep,
    Validate,
};

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);

struct OrientationConfig {
    std::string family = "laplace";
    double mu_deg = 41.39;
    double sigma_deg = 7.68;
    // When true, sigma_deg carries a variance in squared degrees.
    bool sigma_is_variance = false;
    double lower_deg = 0.0;
    double upper_deg = 90.0;
    bool exact_normalization = true;

    OrientationModel build() const;
    bool operator==(const OrientationConfig&) const = default;
};

struct GeometryConfig {
    std::array<double, 3> ap_m{0.0, 0.0, 2.0};
    std::array<double, 3> ue_m{0.0, 0.0, 0.0};
    double omega_deg = 45.0;

    LinkGeometry build() const;
    bool operator==(const GeometryConfig&) const = default;
};

struct ChannelConfig {
    double area_cm2 = 1.0;
    double half_angle_deg = 60.0;
    double fov_deg = 90.0;
    double responsivity_a_per_w = 1.0;
    double p_opt_w = 1.0;
    double noise_psd_a2_per_hz = 1e-21;
    double bandwidth_hz = 1e7;

    ChannelParams build() const;
    bool operator==(const ChannelConfig&) const = default;
};

struct OrwpSection {
    double room_length_m = 10.0;
    double speed_mps = 1.4;
    double sample_time_s = 0.013;
    double coherence_time_s = 0.130;
    double theta_mean_deg = 29.67;
    double theta_sigma_deg = 7.78;
    bool sigma_is_variance = false;
    double ue_height_m = 0.0;
    double ap_height_m = 2.0;
    // Empty: four APs at the quadrant centers.
    std::vector<std::array<double, 3>> ap_positions_m;
    bool random_initial_ap = false;

    OrwpConfig build(std::uint64_t seed) const;
    bool operator==(const OrwpSection&) const = default;
};

struct SweepSection {
    std::vector<double> lengths_m{4.0, 8.0, 12.0, 16.0};
    std::vector<double> speeds_mps{1.0, 1.4, 2.0};
    std::size_t runs = 10000;
    bool operator==(const SweepSection&) const = default;
};

struct TabulateSection {
    std::size_t n_points = 512;
    double pdf_ceiling = 1e6;
    // UE (x, y) positions for the cos(psi) table; empty means the single
    // geometry.ue position.
    std::vector<std::array<double, 2>> ue_grid_m;
    bool operator==(const TabulateSection&) const = default;
};

struct ToleranceSection {
    double ksd = 0.01;
    double quadrature = 1e-6;
    double moment_sigmas = 3.0;
    double cw_band = 1e-3;
    std::size_t mc_samples = 200000;
    bool operator==(const ToleranceSection&) const = default;
};

struct RunConfig {
    Scenario scenario = Scenario::Validate;
    std::uint64_t seed = 1;
    std::string output;  // empty writes to stdout
    std::string input;   // dataset path for the fit scenario

    OrientationConfig orientation;
    GeometryConfig geometry;
    ChannelConfig channel;
    OrwpSection orwp;
    SweepSection sweep;
    TabulateSection tabulate;
    ToleranceSection tolerances;

    bool operator==(const RunConfig&) const = default;
};

// Parses and validates a config file. Unknown keys are rejected; missing
// keys take defaults. Throws ParseError (malformed JSON, wrong types) or
// ValidationError (violated invariants, naming the field).
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

// Canonical JSON serialization; load(save(cfg)) reproduces cfg exactly.
std::string save_config(const RunConfig& cfg);

// 16-hex-digit fingerprint of the canonical serialization.
std::string config_hash(const RunConfig& cfg);

}  // namespace orilink
