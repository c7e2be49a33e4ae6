// SPDX-License-Identifier: Apache-2.0

#include "orilink/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace orilink {

OrientationModel OrientationModel::laplace(double mu, double b) {
    OrientationModel m;
    m.family = Family::Laplace;
    m.mu = mu;
    m.scale = b;
    m.validate();
    return m;
}

OrientationModel OrientationModel::laplace_from_std(double mu, double sigma) {
    return laplace(mu, std::sqrt(sigma * sigma / 2.0));
}

OrientationModel OrientationModel::gaussian(double mu, double sigma) {
    OrientationModel m;
    m.family = Family::Gaussian;
    m.mu = mu;
    m.scale = sigma;
    m.validate();
    return m;
}

OrientationModel OrientationModel::sitting_laplace() {
    return laplace_from_std(deg2rad(41.39), deg2rad(7.68));
}

OrientationModel OrientationModel::walking_gaussian() {
    return gaussian(deg2rad(29.67), deg2rad(7.78));
}

void OrientationModel::validate() const {
    if (!(scale > 0.0)) throw ValidationError("OrientationModel.scale must be > 0");
    if (!(lower < upper)) throw ValidationError("OrientationModel bounds: lower < upper required");
    if (!(lower >= 0.0)) throw ValidationError("OrientationModel.lower must be >= 0");
    if (!(upper <= kHalfPi + 1e-12)) throw ValidationError("OrientationModel.upper must be <= pi/2");
}

double OrientationModel::parent_cdf(double x) const {
    const double z = (x - mu) / scale;
    if (family == Family::Laplace) {
        return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
    }
    return normal_cdf(z);
}

double OrientationModel::parent_pdf(double x) const {
    const double z = (x - mu) / scale;
    if (family == Family::Laplace) {
        return std::exp(-std::abs(z)) / (2.0 * scale);
    }
    return normal_pdf(z) / scale;
}

double OrientationModel::parent_quantile(double p) const {
    if (family == Family::Laplace) {
        if (p < 0.5) return mu + scale * std::log(2.0 * p);
        return mu - scale * std::log(2.0 * (1.0 - p));
    }
    return mu + scale * normal_quantile(p);
}

double OrientationModel::truncation_mass() const {
    return parent_cdf(upper) - parent_cdf(lower);
}

void SampleSeries::validate() const {
    if (values.empty()) throw EmptySeries("sample series is empty");
    if (!timestamps.empty()) {
        if (timestamps.size() != values.size())
            throw ValidationError("timestamps and values differ in length");
        for (std::size_t i = 1; i < timestamps.size(); ++i)
            if (!(timestamps[i] > timestamps[i - 1]))
                throw NonMonotonicTimestamps("timestamps must be strictly increasing");
    }
}

double trunc_pdf(const OrientationModel& m, double theta) {
    if (theta < m.lower || theta > m.upper) return 0.0;
    if (m.exact_normalization) return m.parent_pdf(theta) / m.truncation_mass();
    return m.parent_pdf(theta);
}

double trunc_cdf(const OrientationModel& m, double theta) {
    if (theta <= m.lower && m.exact_normalization) return 0.0;
    if (theta >= m.upper && m.exact_normalization) return 1.0;
    double p;
    if (m.exact_normalization) {
        p = (m.parent_cdf(theta) - m.parent_cdf(m.lower)) / m.truncation_mass();
    } else {
        p = m.parent_cdf(theta);
    }
    return std::clamp(p, 0.0, 1.0);
}

double trunc_quantile(const OrientationModel& m, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("quantile argument outside [0, 1]");
    const double plo = m.parent_cdf(m.lower);
    const double phi = m.parent_cdf(m.upper);
    const double x = m.parent_quantile(plo + p * (phi - plo));
    return std::clamp(x, m.lower, m.upper);
}

void sample_into(const OrientationModel& m, std::size_t n, Rng& rng,
                 std::vector<double>& out) {
    out.reserve(out.size() + n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(trunc_quantile(m, rng.uniform01()));
}

SampleSeries sample(const OrientationModel& m, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ValidationError("sample: n must be >= 1");
    Rng rng(seed);
    SampleSeries s;
    sample_into(m, n, rng, s.values);
    return s;
}

double ksd_two_sample(const SampleSeries& a, const SampleSeries& b) {
    a.validate();
    b.validate();
    std::vector<double> x = a.values;
    std::vector<double> y = b.values;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double nx = static_cast<double>(x.size());
    const double ny = static_cast<double>(y.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        const double t = std::min(x[i], y[j]);
        while (i < x.size() && x[i] <= t) ++i;
        while (j < y.size() && y[j] <= t) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
    }
    return d;
}

double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf,
                   const std::function<double(double)>& cdf_left) {
    if (samples.empty()) throw EmptySeries("ks_distance: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        const double fl = cdf_left ? cdf_left(samples[i]) : f;
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
        d = std::max(d, fl - static_cast<double>(i) / n);
    }
    return d;
}

double ksd_vs_model(const SampleSeries& a, const OrientationModel& m) {
    a.validate();
    return ks_distance(a.values, [&m](double x) { return trunc_cdf(m, x); });
}

namespace {

struct Moments {
    double mean;
    double m2;
    double m3;
    double m4;
};

Moments central_moments(const std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : v) {
        const double d = x - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    return {mean, m2 / n, m3 / n, m4 / n};
}

}  // namespace

double skewness(const SampleSeries& a) {
    a.validate();
    if (a.size() < 3) throw ValidationError("skewness requires n >= 3");
    const Moments m = central_moments(a.values);
    if (!(m.m2 > 0.0)) throw DegenerateVariance("skewness undefined for zero variance");
    return m.m3 / std::pow(m.m2, 1.5);
}

double kurtosis(const SampleSeries& a) {
    a.validate();
    if (a.size() < 4) throw ValidationError("kurtosis requires n >= 4");
    const Moments m = central_moments(a.values);
    if (!(m.m2 > 0.0)) throw DegenerateVariance("kurtosis undefined for zero variance");
    return m.m4 / (m.m2 * m.m2);
}

FitReport fit_mle(const SampleSeries& a, Family family) {
    a.validate();
    if (a.size() < 2) throw ValidationError("fit_mle requires n >= 2");

    OrientationModel m;
    m.family = family;
    if (family == Family::Laplace) {
        std::vector<double> v = a.values;
        std::sort(v.begin(), v.end());
        // Even n: lower-middle order statistic, a deterministic tie-break.
        const double median = v[(v.size() - 1) / 2];
        double mad = 0.0;
        for (double x : v) mad += std::abs(x - median);
        mad /= static_cast<double>(v.size());
        if (!(mad > 0.0)) throw DegenerateVariance("Laplace MLE scale is zero");
        m.mu = median;
        m.scale = mad;
    } else {
        const Moments mom = central_moments(a.values);
        if (!(mom.m2 > 0.0)) throw DegenerateVariance("Gaussian MLE variance is zero");
        m.mu = mom.mean;
        m.scale = std::sqrt(mom.m2);
    }

    FitReport report;
    report.model = m;
    report.ksd = ksd_vs_model(a, m);
    report.skewness = skewness(a);
    report.kurtosis = kurtosis(a);
    return report;
}

std::vector<double> autocorrelation(const std::vector<double>& x, std::size_t max_lag) {
    if (x.empty()) throw EmptySeries("autocorrelation: empty series");
    if (max_lag >= x.size()) throw ValidationError("autocorrelation: max_lag >= series length");
    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    std::vector<double> r(max_lag + 1, 0.0);
    for (std::size_t lag = 0; lag <= max_lag; ++lag) {
        double acc = 0.0;
        for (std::size_t i = lag; i < x.size(); ++i)
            acc += (x[i] - mean) * (x[i - lag] - mean);
        r[lag] = acc / n;
    }
    const double r0 = r[0];
    if (!(r0 > 0.0)) throw DegenerateVariance("autocorrelation undefined for zero variance");
    for (double& v : r) v /= r0;
    return r;
}

SampleSeries UniformAngleModel::sample(std::size_t n, std::uint64_t seed) const {
    if (n == 0) throw ValidationError("sample: n must be >= 1");
    Rng rng(seed);
    SampleSeries s;
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.values.push_back(rng.uniform(lower, upper));
    return s;
}

}  // namespace orilink
