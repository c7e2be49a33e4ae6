// SPDX-License-Identifier: Apache-2.0
//
// Orientation-based random-waypoint mobility: waypoint kinematics, the AR(1)
// correlated polar-angle process, trajectory generation and the handover-rate
// Monte Carlo.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orilink/channel.hpp"

namespace orilink {

// First-order autoregressive parameters for the polar-angle process
// theta[n] = c0 + c1 theta[n-1] + w[n].
struct Ar1Params {
    double c0 = 0.0;
    double c1 = 0.0;
    double sigma_w = 0.0;

    double stationary_mean() const { return c0 / (1.0 - c1); }
    double stationary_var() const { return sigma_w * sigma_w / (1.0 - c1 * c1); }
    void validate() const;
};

// Parameters matching a target stationary mean/std with the coherence
// criterion: the autocorrelation decays to 0.05 after tc/ts lags.
Ar1Params ar1_from_stats(double mean, double std, double ts, double tc);

// One AR(1) step with a Gaussian innovation, clamped to [0, pi/2].
double ar1_step(const Ar1Params& p, double prev_theta, Rng& rng);

// Draw from the stationary distribution; used to initialize the process.
double ar1_stationary_draw(const Ar1Params& p, Rng& rng);

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Uniform waypoint over the square [-L/2, L/2]^2.
Point2 draw_waypoint(double room_length, Rng& rng);

double transition_length(const Point2& p0, const Point2& p1);

enum class MobilityMode { VerticalUpward, OrwpGaussian };

struct OrwpConfig {
    double room_length = 10.0;   // m
    double speed = 1.4;          // m/s
    double ts = 0.013;           // AR sample time for process diagnostics, s
    double tc_theta = 0.130;     // polar-angle coherence time, s
    double theta_mean = deg2rad(29.67);
    double theta_std = deg2rad(7.78);
    double ue_height = 0.0;      // m
    std::vector<Vec3> ap_positions;
    std::uint64_t seed = 1;
    // When set, the first serving AP of every trajectory is drawn uniformly
    // instead of being the strongest AP at the start position.
    bool random_initial_ap = false;

    void validate() const;
};

// Four access points at the quadrant centers (+-L/4, +-L/4, height).
std::vector<Vec3> quadrant_aps(double room_length, double height = 2.0);

struct TrajectorySample {
    double t = 0.0;        // s
    Point2 position;
    double omega = 0.0;    // facing/movement direction, rad
    double theta = 0.0;    // polar angle, rad
    std::size_t serving_ap = 0;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    std::size_t handovers = 0;
    double traveled = 0.0;  // m
};

// Strongest-gain AP selection; ties break toward the lowest index and an
// all-zero sweep keeps the previous AP.
std::size_t serving_ap(const Point2& position, double theta, double omega,
                       const std::vector<Vec3>& aps, const ChannelParams& chan,
                       double ue_height = 0.0,
                       std::optional<std::size_t> previous = std::nullopt);

// Runs `n_runs` waypoint legs: per leg, draws a destination, walks toward it
// in steps of speed * tc_theta while the polar angle follows the AR(1)
// process (one step per emitted sample), then a shorter remainder step lands
// exactly on the waypoint.
Trajectory generate_trajectory(const OrwpConfig& cfg, const ChannelParams& chan,
                               std::size_t n_runs,
                               MobilityMode mode = MobilityMode::OrwpGaussian);

struct HandoverStats {
    double rate_hz = 0.0;
    std::size_t handovers = 0;
    double sim_seconds = 0.0;
    std::size_t runs = 0;
};

// Monte-Carlo handover rate over independent uniformly drawn
// (start, destination) legs: expected handovers divided by the expected
// elapsed time E[D]/v.
HandoverStats handover_rate(const OrwpConfig& cfg, const ChannelParams& chan,
                            MobilityMode mode, std::size_t n_runs);

// Coherence time of the LOS gain process driven by an AR(1) polar angle
// sampled at ts: the first lag where the gain autocorrelation falls to 0.05.
double estimate_gain_coherence_time(const LinkGeometry& g, const ChannelParams& chan,
                                    const Ar1Params& ar, double ts, std::size_t n,
                                    std::uint64_t seed);

}  // namespace orilink
