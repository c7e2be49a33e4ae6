// SPDX-License-Identifier: Apache-2.0
//
// Orientation-angle distribution models (truncated Laplace / truncated
// Gaussian), maximum-likelihood fitting and the diagnostic statistics used to
// select between them.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "orilink/errors.hpp"
#include "orilink/math_util.hpp"
#include "orilink/rng.hpp"

namespace orilink {

enum class Family { Laplace, Gaussian };

// Truncated location-scale model of the polar angle. `scale` is the Laplace
// diversity b or the Gaussian standard deviation, depending on the family.
// When `exact_normalization` is false, pdf/cdf use the untruncated form
// restricted to [lower, upper] (the tail mass outside the bounds is simply
// dropped); the default renormalizes so the truncated density integrates
// to exactly 1.
struct OrientationModel {
    Family family = Family::Laplace;
    double mu = 0.0;
    double scale = 1.0;
    double lower = 0.0;
    double upper = kHalfPi;
    bool exact_normalization = true;

    static OrientationModel laplace(double mu, double b);
    // Laplace model from a standard deviation: b = sqrt(sigma^2 / 2).
    static OrientationModel laplace_from_std(double mu, double sigma);
    static OrientationModel gaussian(double mu, double sigma);

    // Table-calibrated presets: static (sitting) users follow a Laplace
    // model, mobile (walking) users a Gaussian one.
    static OrientationModel sitting_laplace();
    static OrientationModel walking_gaussian();

    void validate() const;

    // CDF of the untruncated parent distribution.
    double parent_cdf(double x) const;
    double parent_pdf(double x) const;
    double parent_quantile(double p) const;

    // Probability mass the parent distribution assigns to [lower, upper].
    double truncation_mass() const;
};

// Raw measurement series; timestamps, when present, must be strictly
// increasing.
struct SampleSeries {
    std::vector<double> values;
    std::vector<double> timestamps;  // empty when not time-tagged

    std::size_t size() const { return values.size(); }
    void validate() const;
};

struct FitReport {
    OrientationModel model;
    double ksd = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
};

// Density of the truncated model; zero outside [lower, upper].
double trunc_pdf(const OrientationModel& m, double theta);

// CDF of the truncated model, clamped to [0, 1].
double trunc_cdf(const OrientationModel& m, double theta);

// Quantile of the truncated model for p in [0, 1].
double trunc_quantile(const OrientationModel& m, double p);

// i.i.d. inverse-CDF samples; deterministic for a given seed.
SampleSeries sample(const OrientationModel& m, std::size_t n, std::uint64_t seed);
void sample_into(const OrientationModel& m, std::size_t n, Rng& rng,
                 std::vector<double>& out);

// Two-sample Kolmogorov-Smirnov distance: the largest absolute gap between
// the two empirical CDFs over the pooled sample points.
double ksd_two_sample(const SampleSeries& a, const SampleSeries& b);

// One-sample Kolmogorov-Smirnov distance between an empirical CDF and an
// arbitrary model CDF. For a model with atoms, pass its left limit
// P(X < x) as `cdf_left`; it defaults to the CDF itself (continuous case).
double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf,
                   const std::function<double(double)>& cdf_left = {});

double ksd_vs_model(const SampleSeries& a, const OrientationModel& m);

// Population third standardized moment.
double skewness(const SampleSeries& a);

// Population fourth standardized moment.
double kurtosis(const SampleSeries& a);

// Maximum-likelihood fit of the requested family (Laplace: median and mean
// absolute deviation; Gaussian: mean and population standard deviation),
// reported together with the diagnostics against the fitted model.
FitReport fit_mle(const SampleSeries& a, Family family);

// Empirical autocorrelation of a series at lags 0..max_lag, normalized by
// the lag-0 autocovariance.
std::vector<double> autocorrelation(const std::vector<double>& x, std::size_t max_lag);

// Constant-density azimuth model on [lower, upper), default U[-pi, pi).
struct UniformAngleModel {
    double lower = -kPi;
    double upper = kPi;

    double pdf(double x) const {
        return (x >= lower && x < upper) ? 1.0 / (upper - lower) : 0.0;
    }
    double cdf(double x) const {
        if (x <= lower) return 0.0;
        if (x >= upper) return 1.0;
        return (x - lower) / (upper - lower);
    }
    SampleSeries sample(std::size_t n, std::uint64_t seed) const;
};

}  // namespace orilink
