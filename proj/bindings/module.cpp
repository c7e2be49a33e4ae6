// SPDX-License-Identifier: Apache-2.0

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orilink/runner.hpp"
#include "orilink/version.hpp"

namespace py = pybind11;
using namespace orilink;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Device-orientation statistics and optical wireless link models";
    m.attr("__version__") = kVersion;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    // geometry
    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z)
        .def("norm", &Vec3::norm)
        .def("__repr__", [](const Vec3& v) {
            return "Vec3(" + format_double(v.x) + ", " + format_double(v.y) + ", " +
                   format_double(v.z) + ")";
        });

    py::class_<EulerAngles>(m, "EulerAngles")
        .def(py::init<double, double, double>(), py::arg("alpha"), py::arg("beta"),
             py::arg("gamma"))
        .def_readwrite("alpha", &EulerAngles::alpha)
        .def_readwrite("beta", &EulerAngles::beta)
        .def_readwrite("gamma", &EulerAngles::gamma)
        .def("validate", &EulerAngles::validate);

    py::enum_<DeviceMode>(m, "DeviceMode")
        .value("Portrait", DeviceMode::Portrait)
        .value("Landscape", DeviceMode::Landscape);

    m.def("rotated_normal", &rotated_normal, py::arg("angles"));
    m.def("polar_angle", &polar_angle, py::arg("angles"));
    m.def("azimuth_angle", &azimuth_angle, py::arg("angles"));
    m.def("omega_hat", &omega_hat, py::arg("alpha"), py::arg("mode"));
    m.def("facing_angle", &facing_angle, py::arg("alpha"), py::arg("mode"));
    m.def("deg2rad", &deg2rad);
    m.def("rad2deg", &rad2deg);

    // orientation statistics
    py::enum_<Family>(m, "Family")
        .value("Laplace", Family::Laplace)
        .value("Gaussian", Family::Gaussian);

    py::class_<OrientationModel>(m, "OrientationModel")
        .def_static("laplace", &OrientationModel::laplace, py::arg("mu"), py::arg("b"))
        .def_static("laplace_from_std", &OrientationModel::laplace_from_std,
                    py::arg("mu"), py::arg("sigma"))
        .def_static("gaussian", &OrientationModel::gaussian, py::arg("mu"),
                    py::arg("sigma"))
        .def_static("sitting_laplace", &OrientationModel::sitting_laplace)
        .def_static("walking_gaussian", &OrientationModel::walking_gaussian)
        .def_readwrite("family", &OrientationModel::family)
        .def_readwrite("mu", &OrientationModel::mu)
        .def_readwrite("scale", &OrientationModel::scale)
        .def_readwrite("lower", &OrientationModel::lower)
        .def_readwrite("upper", &OrientationModel::upper)
        .def_readwrite("exact_normalization", &OrientationModel::exact_normalization);

    py::class_<SampleSeries>(m, "SampleSeries")
        .def(py::init([](std::vector<double> values) {
                 SampleSeries s;
                 s.values = std::move(values);
                 return s;
             }),
             py::arg("values"))
        .def_readwrite("values", &SampleSeries::values)
        .def_readwrite("timestamps", &SampleSeries::timestamps)
        .def("__len__", &SampleSeries::size);

    py::class_<FitReport>(m, "FitReport")
        .def_readonly("model", &FitReport::model)
        .def_readonly("ksd", &FitReport::ksd)
        .def_readonly("skewness", &FitReport::skewness)
        .def_readonly("kurtosis", &FitReport::kurtosis);

    m.def("trunc_pdf", &trunc_pdf, py::arg("model"), py::arg("theta"));
    m.def("trunc_cdf", &trunc_cdf, py::arg("model"), py::arg("theta"));
    m.def("trunc_quantile", &trunc_quantile, py::arg("model"), py::arg("p"));
    m.def("sample", &sample, py::arg("model"), py::arg("n"), py::arg("seed"));
    m.def("ksd_two_sample", &ksd_two_sample, py::arg("a"), py::arg("b"));
    m.def("ksd_vs_model", &ksd_vs_model, py::arg("a"), py::arg("model"));
    m.def("skewness", &skewness, py::arg("a"));
    m.def("kurtosis", &kurtosis, py::arg("a"));
    m.def("fit_mle", &fit_mle, py::arg("a"), py::arg("family"));

    // incidence
    py::class_<LinkGeometry>(m, "LinkGeometry")
        .def(py::init([](const Vec3& ap, const Vec3& ue, double omega) {
                 LinkGeometry g{ap, ue, omega};
                 g.validate();
                 return g;
             }),
             py::arg("ap"), py::arg("ue"), py::arg("omega"))
        .def_readwrite("ap", &LinkGeometry::ap)
        .def_readwrite("ue", &LinkGeometry::ue)
        .def_readwrite("omega", &LinkGeometry::omega)
        .def("distance", &LinkGeometry::distance)
        .def("height", &LinkGeometry::height);

    py::class_<IncidenceCoeffs>(m, "IncidenceCoeffs")
        .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
        .def_readwrite("a", &IncidenceCoeffs::a)
        .def_readwrite("b", &IncidenceCoeffs::b)
        .def("radius", &IncidenceCoeffs::radius);

    py::enum_<CosPsiKind>(m, "CosPsiKind")
        .value("ExactCase1", CosPsiKind::ExactCase1)
        .value("ExactCase2", CosPsiKind::ExactCase2)
        .value("ApproxTruncLaplace", CosPsiKind::ApproxTruncLaplace);

    py::class_<CosPsiDistribution>(m, "CosPsiDistribution")
        .def_readonly("coeffs", &CosPsiDistribution::coeffs)
        .def_readonly("kind", &CosPsiDistribution::kind)
        .def_readonly("support_lo", &CosPsiDistribution::support_lo)
        .def_readonly("support_hi", &CosPsiDistribution::support_hi)
        .def_readonly("tau_star", &CosPsiDistribution::tau_star)
        .def_readonly("ss_f", &CosPsiDistribution::ss_f);

    m.def("coefficients", &coefficients, py::arg("geometry"));
    m.def("cos_psi", py::overload_cast<const LinkGeometry&, double>(&cos_psi),
          py::arg("geometry"), py::arg("theta"));
    m.def("cos_psi", py::overload_cast<const IncidenceCoeffs&, double>(&cos_psi),
          py::arg("coeffs"), py::arg("theta"));
    m.def("cos_psi_full", &cos_psi_full, py::arg("geometry"), py::arg("theta"),
          py::arg("omega"));
    m.def("make_cos_psi",
          py::overload_cast<const IncidenceCoeffs&, const OrientationModel&>(&make_cos_psi),
          py::arg("coeffs"), py::arg("model"));
    m.def("make_cos_psi",
          py::overload_cast<const LinkGeometry&, const OrientationModel&>(&make_cos_psi),
          py::arg("geometry"), py::arg("model"));
    m.def("exact_pdf", &exact_pdf, py::arg("dist"), py::arg("tau"));
    m.def("exact_cdf", &exact_cdf, py::arg("dist"), py::arg("tau"));
    m.def("tau_star", &tau_star, py::arg("dist"));
    m.def("exact_pdf_mass", &exact_pdf_mass, py::arg("dist"), py::arg("tol") = 1e-9);

    py::class_<ApproxParams>(m, "ApproxParams")
        .def_readonly("mu_hat", &ApproxParams::mu_hat)
        .def_readonly("b_hat", &ApproxParams::b_hat)
        .def_readonly("tau_min", &ApproxParams::tau_min)
        .def_readonly("tau_max", &ApproxParams::tau_max);

    m.def("approx_params", &approx_params, py::arg("coeffs"), py::arg("model"));
    m.def("approx_pdf",
          py::overload_cast<const IncidenceCoeffs&, const OrientationModel&, double>(
              &approx_pdf),
          py::arg("coeffs"), py::arg("model"), py::arg("tau"));
    m.def("approx_cdf",
          py::overload_cast<const IncidenceCoeffs&, const OrientationModel&, double>(
              &approx_cdf),
          py::arg("coeffs"), py::arg("model"), py::arg("tau"));
    m.def("cw_locus", &cw_locus, py::arg("ap"), py::arg("ue_z"), py::arg("omega"),
          py::arg("x_delta"), py::arg("y_delta"), py::arg("model"));

    py::enum_<PropositionStatus>(m, "PropositionStatus")
        .value("Passed", PropositionStatus::Passed)
        .value("ConditionUnmet", PropositionStatus::ConditionUnmet)
        .value("Failed", PropositionStatus::Failed);

    py::class_<PropositionReport>(m, "PropositionReport")
        .def_readonly("status", &PropositionReport::status)
        .def_readonly("condition_met", &PropositionReport::condition_met)
        .def_readonly("pattern_ok", &PropositionReport::pattern_ok)
        .def_readonly("continuous_at_peak", &PropositionReport::continuous_at_peak)
        .def_readonly("tau_star", &PropositionReport::tau_star)
        .def_readonly("tau_d", &PropositionReport::tau_d)
        .def_readonly("detail", &PropositionReport::detail)
        .def("passed", &PropositionReport::passed);

    m.def("verify_proposition1", &verify_proposition1, py::arg("coeffs"),
          py::arg("model"), py::arg("n_grid") = 200);
    m.def("verify_proposition2", &verify_proposition2, py::arg("coeffs"),
          py::arg("model"), py::arg("n_grid") = 200);

    // channel
    py::class_<ChannelParams>(m, "ChannelParams")
        .def(py::init<>())
        .def_readwrite("area", &ChannelParams::area)
        .def_readwrite("half_angle", &ChannelParams::half_angle)
        .def_readwrite("fov", &ChannelParams::fov)
        .def_readwrite("responsivity", &ChannelParams::responsivity)
        .def_readwrite("p_opt", &ChannelParams::p_opt)
        .def_readwrite("noise_psd", &ChannelParams::noise_psd)
        .def_readwrite("bandwidth", &ChannelParams::bandwidth)
        .def("lambertian_order", &ChannelParams::lambertian_order)
        .def("snr_scale", &ChannelParams::snr_scale);

    m.def("lambertian_order", py::overload_cast<double>(&lambertian_order),
          py::arg("half_angle"));
    m.def("los_gain", &los_gain, py::arg("geometry"), py::arg("params"), py::arg("theta"));

    py::class_<GainDistribution>(m, "GainDistribution")
        .def_readonly("h_n", &GainDistribution::h_n)
        .def_readonly("h_min", &GainDistribution::h_min)
        .def_readonly("h_max", &GainDistribution::h_max)
        .def_readonly("mu_h", &GainDistribution::mu_h)
        .def_readonly("b_h", &GainDistribution::b_h)
        .def_readonly("dirac_mass", &GainDistribution::dirac_mass)
        .def_readonly("point_mass", &GainDistribution::point_mass);

    m.def("gain_distribution", &gain_distribution, py::arg("geometry"),
          py::arg("params"), py::arg("model"));
    m.def("gain_pdf", &gain_pdf, py::arg("dist"), py::arg("h"));
    m.def("gain_cdf", &gain_cdf, py::arg("dist"), py::arg("h"));
    m.def("snr_pdf", &snr_pdf, py::arg("dist"), py::arg("params"), py::arg("s"));
    m.def("snr_cdf", &snr_cdf, py::arg("dist"), py::arg("params"), py::arg("s"));
    m.def("snr_support", [](const GainDistribution& d, const ChannelParams& p) {
        const SnrSupport s = snr_support(d, p);
        return std::pair<double, double>(s.s_min, s.s_max);
    });

    // mobility
    py::class_<Ar1Params>(m, "Ar1Params")
        .def_readwrite("c0", &Ar1Params::c0)
        .def_readwrite("c1", &Ar1Params::c1)
        .def_readwrite("sigma_w", &Ar1Params::sigma_w)
        .def("stationary_mean", &Ar1Params::stationary_mean)
        .def("stationary_var", &Ar1Params::stationary_var);

    m.def("ar1_from_stats", &ar1_from_stats, py::arg("mean"), py::arg("std"),
          py::arg("ts"), py::arg("tc"));

    py::enum_<MobilityMode>(m, "MobilityMode")
        .value("VerticalUpward", MobilityMode::VerticalUpward)
        .value("OrwpGaussian", MobilityMode::OrwpGaussian);

    py::class_<Point2>(m, "Point2")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Point2::x)
        .def_readwrite("y", &Point2::y);

    py::class_<OrwpConfig>(m, "OrwpConfig")
        .def(py::init<>())
        .def_readwrite("room_length", &OrwpConfig::room_length)
        .def_readwrite("speed", &OrwpConfig::speed)
        .def_readwrite("ts", &OrwpConfig::ts)
        .def_readwrite("tc_theta", &OrwpConfig::tc_theta)
        .def_readwrite("theta_mean", &OrwpConfig::theta_mean)
        .def_readwrite("theta_std", &OrwpConfig::theta_std)
        .def_readwrite("ue_height", &OrwpConfig::ue_height)
        .def_readwrite("ap_positions", &OrwpConfig::ap_positions)
        .def_readwrite("seed", &OrwpConfig::seed)
        .def_readwrite("random_initial_ap", &OrwpConfig::random_initial_ap);

    m.def("quadrant_aps", &quadrant_aps, py::arg("room_length"), py::arg("height") = 2.0);

    py::class_<TrajectorySample>(m, "TrajectorySample")
        .def_readonly("t", &TrajectorySample::t)
        .def_readonly("position", &TrajectorySample::position)
        .def_readonly("omega", &TrajectorySample::omega)
        .def_readonly("theta", &TrajectorySample::theta)
        .def_readonly("serving_ap", &TrajectorySample::serving_ap);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("samples", &Trajectory::samples)
        .def_readonly("handovers", &Trajectory::handovers)
        .def_readonly("traveled", &Trajectory::traveled);

    m.def("generate_trajectory", &generate_trajectory, py::arg("cfg"), py::arg("chan"),
          py::arg("n_runs"), py::arg("mode") = MobilityMode::OrwpGaussian);

    py::class_<HandoverStats>(m, "HandoverStats")
        .def_readonly("rate_hz", &HandoverStats::rate_hz)
        .def_readonly("handovers", &HandoverStats::handovers)
        .def_readonly("sim_seconds", &HandoverStats::sim_seconds)
        .def_readonly("runs", &HandoverStats::runs);

    m.def("handover_rate", &handover_rate, py::arg("cfg"), py::arg("chan"),
          py::arg("mode"), py::arg("n_runs"));
}
