// SPDX-License-Identifier: Apache-2.0

#include "orilink/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orilink {

void Ar1Params::validate() const {
    if (!(std::abs(c1) < 1.0))
        throw ValidationError("Ar1Params: |c1| < 1 required for stationarity");
    if (!(sigma_w > 0.0)) throw ValidationError("Ar1Params: sigma_w must be > 0");
    const double mean = stationary_mean();
    if (!(mean > 0.0 && mean < kHalfPi))
        throw ValidationError("Ar1Params: stationary mean outside (0, pi/2)");
}

Ar1Params ar1_from_stats(double mean, double std, double ts, double tc) {
    if (!(std > 0.0)) throw InvalidTiming("ar1_from_stats: std must be > 0");
    if (!(ts > 0.0 && ts <= tc))
        throw InvalidTiming("ar1_from_stats: need 0 < ts <= tc");
    Ar1Params p;
    p.c1 = std::pow(0.05, ts / tc);
    p.c0 = (1.0 - p.c1) * mean;
    p.sigma_w = std::sqrt((1.0 - p.c1 * p.c1)) * std;
    p.validate();
    return p;
}

double ar1_step(const Ar1Params& p, double prev_theta, Rng& rng) {
    const double next = p.c0 + p.c1 * prev_theta + p.sigma_w * rng.normal();
    return std::clamp(next, 0.0, kHalfPi);
}

double ar1_stationary_draw(const Ar1Params& p, Rng& rng) {
    const double draw = p.stationary_mean() + std::sqrt(p.stationary_var()) * rng.normal();
    return std::clamp(draw, 0.0, kHalfPi);
}

Point2 draw_waypoint(double room_length, Rng& rng) {
    if (!(room_length > 0.0)) throw ValidationError("room_length must be > 0");
    const double half = 0.5 * room_length;
    return {rng.uniform(-half, half), rng.uniform(-half, half)};
}

double transition_length(const Point2& p0, const Point2& p1) {
    return std::hypot(p1.x - p0.x, p1.y - p0.y);
}

void OrwpConfig::validate() const {
    if (!(room_length > 0.0)) throw InvalidConfig("orwp.room_length must be > 0");
    if (!(speed > 0.0)) throw InvalidConfig("orwp.speed must be > 0");
    if (!(ts > 0.0)) throw InvalidConfig("orwp.ts must be > 0");
    if (!(tc_theta > 0.0)) throw InvalidConfig("orwp.tc_theta must be > 0");
    if (!(ts <= tc_theta)) throw InvalidConfig("orwp.ts must not exceed tc_theta");
    if (!(theta_std > 0.0)) throw InvalidConfig("orwp.theta_std must be > 0");
    if (ap_positions.empty()) throw InvalidConfig("orwp needs at least one AP");
    for (const Vec3& ap : ap_positions)
        if (!(ap.z > ue_height)) throw InvalidConfig("every AP must sit above the UE plane");
}

std::vector<Vec3> quadrant_aps(double room_length, double height) {
    const double q = room_length / 4.0;
    return {{-q, -q, height}, {q, -q, height}, {-q, q, height}, {q, q, height}};
}

std::size_t serving_ap(const Point2& position, double theta, double omega,
                       const std::vector<Vec3>& aps, const ChannelParams& chan,
                       double ue_height, std::optional<std::size_t> previous) {
    if (aps.empty()) throw InvalidConfig("serving_ap: empty AP list");
    double best_gain = 0.0;
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < aps.size(); ++i) {
        LinkGeometry g;
        g.ap = aps[i];
        g.ue = {position.x, position.y, ue_height};
        g.omega = omega;
        const double gain = los_gain(g, chan, theta);
        if (gain > best_gain) {
            best_gain = gain;
            best = i;
        }
    }
    if (best) return *best;
    if (previous) return *previous;
    // No AP in view and no history: fall back to the nearest AP.
    std::size_t nearest = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < aps.size(); ++i) {
        const double dx = aps[i].x - position.x;
        const double dy = aps[i].y - position.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
            best_d2 = d2;
            nearest = i;
        }
    }
    return nearest;
}

namespace {

// Walks chained waypoint legs: positions, the AR(1) polar angle and the
// serving AP all carry over from leg to leg, so a turn at a waypoint is a
// genuine orientation change that can trigger a handover.
struct LegWalker {
    const OrwpConfig& cfg;
    const ChannelParams& chan;
    MobilityMode mode;
    Ar1Params ar;
    Rng rng;

    Point2 position;
    double theta = 0.0;
    double t = 0.0;
    std::optional<std::size_t> serving;
    std::size_t handovers = 0;
    double traveled = 0.0;
    TrajectorySample initial;  // state when the first serving AP was picked

    LegWalker(const OrwpConfig& c, const ChannelParams& ch, MobilityMode m,
              std::uint64_t seed)
        : cfg(c), chan(ch), mode(m),
          ar(ar1_from_stats(c.theta_mean, c.theta_std, c.ts, c.tc_theta)),
          rng(seed) {
        position = draw_waypoint(cfg.room_length, rng);
        theta = mode == MobilityMode::OrwpGaussian ? ar1_stationary_draw(ar, rng) : 0.0;
    }

    // The first serving AP is picked once the first leg's direction is
    // known (the user faces where they walk).
    void ensure_serving(double omega) {
        if (serving) return;
        if (cfg.random_initial_ap) {
            auto pick = static_cast<std::size_t>(
                rng.uniform01() * static_cast<double>(cfg.ap_positions.size()));
            serving = std::min(pick, cfg.ap_positions.size() - 1);
        } else {
            serving = serving_ap(position, theta, omega, cfg.ap_positions, chan,
                                 cfg.ue_height);
        }
        initial = {t, position, omega, theta, *serving};
    }

    void step_theta() {
        if (mode == MobilityMode::OrwpGaussian) theta = ar1_step(ar, theta, rng);
    }

    void reselect(double omega) {
        const std::size_t next = serving_ap(position, theta, omega, cfg.ap_positions,
                                            chan, cfg.ue_height, serving);
        if (next != *serving) {
            serving = next;
            ++handovers;
        }
    }

    // Walks one leg toward a fresh waypoint, emitting one sample per step
    // into `out` when it is non-null.
    void walk_leg(std::vector<TrajectorySample>* out) {
        const Point2 dest = draw_waypoint(cfg.room_length, rng);
        const double dist = transition_length(position, dest);
        if (dist <= 0.0) return;
        const double omega = std::atan2(dest.y - position.y, dest.x - position.x);
        ensure_serving(omega);
        const double step = cfg.speed * cfg.tc_theta;
        const auto full_steps = static_cast<std::size_t>(dist / step);
        const double cos_o = std::cos(omega);
        const double sin_o = std::sin(omega);

        for (std::size_t i = 0; i < full_steps; ++i) {
            position.x += step * cos_o;
            position.y += step * sin_o;
            t += cfg.tc_theta;
            step_theta();
            reselect(omega);
            if (out) out->push_back({t, position, omega, theta, *serving});
        }
        const double remainder = dist - static_cast<double>(full_steps) * step;
        if (remainder > 0.0) {
            position = dest;
            t += remainder / cfg.speed;
            step_theta();
            reselect(omega);
            if (out) out->push_back({t, position, omega, theta, *serving});
        }
        traveled += dist;
    }
};

}  // namespace

Trajectory generate_trajectory(const OrwpConfig& cfg, const ChannelParams& chan,
                               std::size_t n_runs, MobilityMode mode) {
    cfg.validate();
    chan.validate();
    if (n_runs == 0) throw InvalidConfig("generate_trajectory: n_runs must be >= 1");

    LegWalker walker(cfg, chan, mode, cfg.seed);
    Trajectory traj;
    for (std::size_t k = 0; k < n_runs; ++k) walker.walk_leg(&traj.samples);
    traj.samples.insert(traj.samples.begin(), walker.initial);
    traj.handovers = walker.handovers;
    traj.traveled = walker.traveled;
    return traj;
}

HandoverStats handover_rate(const OrwpConfig& cfg, const ChannelParams& chan,
                            MobilityMode mode, std::size_t n_runs) {
    cfg.validate();
    chan.validate();
    if (n_runs == 0) throw InvalidConfig("handover_rate: n_runs must be >= 1");

    // Legs are simulated in independently seeded blocks of chained legs;
    // blocks can run concurrently and the aggregation is a pure reduction.
    const std::size_t block_size = 100;
    std::size_t handovers = 0;
    double traveled = 0.0;
    std::size_t done = 0;
    std::size_t block = 0;
    while (done < n_runs) {
        const std::size_t legs = std::min(block_size, n_runs - done);
        LegWalker walker(cfg, chan, mode, Rng::mix(cfg.seed, block++));
        for (std::size_t k = 0; k < legs; ++k) walker.walk_leg(nullptr);
        handovers += walker.handovers;
        traveled += walker.traveled;
        done += legs;
    }

    HandoverStats stats;
    stats.handovers = handovers;
    stats.runs = n_runs;
    stats.sim_seconds = traveled / cfg.speed;
    const double mean_handovers = static_cast<double>(handovers) / static_cast<double>(n_runs);
    const double mean_elapsed = stats.sim_seconds / static_cast<double>(n_runs);
    stats.rate_hz = mean_elapsed > 0.0 ? mean_handovers / mean_elapsed : 0.0;
    return stats;
}

double estimate_gain_coherence_time(const LinkGeometry& g, const ChannelParams& chan,
                                    const Ar1Params& ar, double ts, std::size_t n,
                                    std::uint64_t seed) {
    if (!(ts > 0.0)) throw InvalidTiming("ts must be > 0");
    if (n < 16) throw ValidationError("series too short for a coherence estimate");
    Rng rng(seed);
    std::vector<double> gains;
    gains.reserve(n);
    double theta = ar1_stationary_draw(ar, rng);
    for (std::size_t i = 0; i < n; ++i) {
        theta = ar1_step(ar, theta, rng);
        gains.push_back(los_gain(g, chan, theta));
    }
    const std::size_t max_lag = std::min<std::size_t>(n / 4, 4096);
    const std::vector<double> acf = autocorrelation(gains, max_lag);
    for (std::size_t lag = 1; lag <= max_lag; ++lag)
        if (acf[lag] <= 0.05) return static_cast<double>(lag) * ts;
    return static_cast<double>(max_lag) * ts;
}

}  // namespace orilink
