// bindings.cpp — pybind11 module exposing the main operations.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "mirrorlab/consistency.hpp"
#include "mirrorlab/dde.hpp"
#include "mirrorlab/effective.hpp"
#include "mirrorlab/microscopic.hpp"
#include "mirrorlab/optics.hpp"
#include "mirrorlab/scenarios.hpp"
#include "mirrorlab/types.hpp"

namespace py = pybind11;
using namespace mirrorlab;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Delayed-feedback dynamics of an emitter in front of a dielectric mirror";

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<>())
        .def_readwrite("k00", &ModelParams::k00)
        .def_readwrite("k11", &ModelParams::k11)
        .def_readwrite("k01", &ModelParams::k01)
        .def_readwrite("omega_e", &ModelParams::omega_e)
        .def_readwrite("omega", &ModelParams::omega)
        .def_readwrite("tau", &ModelParams::tau)
        .def_readwrite("alpha", &ModelParams::alpha)
        .def_readwrite("mu_ratio", &ModelParams::mu_ratio)
        .def("detuning", &ModelParams::detuning)
        .def("k0", &ModelParams::k0)
        .def("front_face", &ModelParams::front_face)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(k00=" + std::to_string(p.k00) +
                   ", k11=" + std::to_string(p.k11) + ", tau=" + std::to_string(p.tau) +
                   ")";
        });

    m.def("derive_params", &derive_params, py::arg("k00"), py::arg("k11"),
          py::arg("omega_e"), py::arg("omega"), py::arg("tau"), py::arg("alpha") = 0.5,
          py::arg("mu_ratio") = 1.0);
    m.def("validity_warning",
          [](const ModelParams& p) { return validity_warning(p); });
    m.def("noise_prefactor", &noise_prefactor);

    py::class_<DielectricGeometry>(m, "DielectricGeometry")
        .def(py::init<>())
        .def_readonly("front_face", &DielectricGeometry::front_face)
        .def_readonly("slab_depth", &DielectricGeometry::slab_depth)
        .def_readonly("line_density", &DielectricGeometry::line_density)
        .def_readonly("positions", &DielectricGeometry::positions)
        .def_readonly("weights", &DielectricGeometry::weights)
        .def("__len__", &DielectricGeometry::size)
        .def_static("uniform_slab", &DielectricGeometry::uniform_slab,
                    py::arg("front_face"), py::arg("depth"), py::arg("n_atoms"),
                    py::arg("taper_fraction") = 0.0)
        .def_static("from_positions", &DielectricGeometry::from_positions,
                    py::arg("front_face"), py::arg("positions"),
                    py::arg("weights") = std::vector<double>{});

    m.def("commensurate_depth", &commensurate_depth, py::arg("k0"),
          py::arg("target_depth"));

    py::enum_<ReflectionProvenance>(m, "ReflectionProvenance")
        .value("fresnel_exact", ReflectionProvenance::fresnel_exact)
        .value("weak_limit", ReflectionProvenance::weak_limit)
        .value("user", ReflectionProvenance::user);

    py::class_<ReflectionSpec>(m, "ReflectionSpec")
        .def(py::init<>())
        .def_readwrite("value", &ReflectionSpec::value)
        .def_readwrite("provenance", &ReflectionSpec::provenance)
        .def_static("user", &ReflectionSpec::user)
        .def_static("fresnel", &ReflectionSpec::fresnel)
        .def_static("weak_limit", &ReflectionSpec::weak_limit);

    py::class_<AmplitudeHistory>(m, "AmplitudeHistory")
        .def(py::init<double, double, complex>(), py::arg("t_start"), py::arg("step"),
             py::arg("initial_value"))
        .def("append", &AmplitudeHistory::append, py::arg("value"),
             py::arg("right_derivative"))
        .def("at", &AmplitudeHistory::at)
        .def("latest_time", &AmplitudeHistory::latest_time)
        .def("__len__", &AmplitudeHistory::size);

    py::class_<TimeSeries>(m, "TimeSeries")
        .def_readonly("t0", &TimeSeries::t0)
        .def_readonly("dt", &TimeSeries::dt)
        .def("__len__", &TimeSeries::size)
        .def("times",
             [](const TimeSeries& s) {
                 std::vector<double> t(s.size());
                 for (std::size_t i = 0; i < t.size(); ++i) t[i] = s.time_at(i);
                 return t;
             })
        .def("values", &TimeSeries::component, py::arg("comp") = 0)
        .def("occupation", &TimeSeries::occupation, py::arg("comp") = 0)
        .def("at_time", &TimeSeries::at_time, py::arg("t"), py::arg("comp") = 0);

    py::class_<EffectiveModel>(m, "EffectiveModel")
        .def(py::init([](const ModelParams& p, const ReflectionSpec& r) {
                 return EffectiveModel{p, r};
             }),
             py::arg("params"), py::arg("reflection"))
        .def_readwrite("params", &EffectiveModel::params)
        .def_readwrite("reflection", &EffectiveModel::reflection)
        .def("feedback_coefficient", &EffectiveModel::feedback_coefficient);

    m.def("closed_form", &closed_form, py::arg("model"), py::arg("t"));
    m.def("integrate_effective", &scenarios::integrate_effective, py::arg("model"),
          py::arg("step"), py::arg("t_max"), py::arg("stride") = 1);

    py::class_<MirrorNetwork>(m, "MirrorNetwork")
        .def(py::init([](const ModelParams& p, const DielectricGeometry& g, bool born,
                         bool include_transient) {
                 return MirrorNetwork{p, g, born, include_transient};
             }),
             py::arg("params"), py::arg("geometry"), py::arg("born") = true,
             py::arg("include_transient") = false)
        .def_readwrite("params", &MirrorNetwork::params)
        .def_readwrite("geometry", &MirrorNetwork::geometry)
        .def_readwrite("born", &MirrorNetwork::born)
        .def_readwrite("include_transient", &MirrorNetwork::include_transient);

    m.def("integrate_network", &scenarios::integrate_network, py::arg("net"),
          py::arg("step"), py::arg("t_max"), py::arg("stride") = 1,
          py::arg("record_all") = false);
    m.def("integrate_reduced", &scenarios::integrate_reduced, py::arg("net"),
          py::arg("step"), py::arg("t_max"), py::arg("stride") = 1);

    py::class_<ContinuumCheck>(m, "ContinuumCheck")
        .def_readonly("discrete", &ContinuumCheck::discrete)
        .def_readonly("continuum", &ContinuumCheck::continuum)
        .def_readonly("rel_err", &ContinuumCheck::rel_err);

    m.def("continuum_sum_check", &continuum_sum_check, py::arg("geometry"),
          py::arg("params"), py::arg("probe"), py::arg("t"));

    py::class_<DielectricSpec>(m, "DielectricSpec")
        .def(py::init([](double strength, double detuning, double k11, double inversion) {
                 return DielectricSpec{strength, detuning, k11, inversion};
             }),
             py::arg("strength"), py::arg("detuning"), py::arg("k11") = 0.0,
             py::arg("inversion") = 1.0)
        .def_readwrite("strength", &DielectricSpec::strength)
        .def_readwrite("detuning", &DielectricSpec::detuning)
        .def_readwrite("k11", &DielectricSpec::k11)
        .def_readwrite("inversion", &DielectricSpec::inversion);

    m.def("susceptibility", &susceptibility);
    m.def("refraction_index", &refraction_index);
    m.def("fresnel_reflection", &fresnel_reflection);
    m.def("weak_limit_reflection", &weak_limit_reflection);

    py::class_<FeedbackIdentity>(m, "FeedbackIdentity")
        .def_readonly("lhs", &FeedbackIdentity::lhs)
        .def_readonly("rhs", &FeedbackIdentity::rhs)
        .def_readonly("ok", &FeedbackIdentity::ok);

    m.def("feedback_identity", &feedback_identity, py::arg("params"),
          py::arg("line_density"), py::arg("k0"), py::arg("detuning"));

    m.def("breaking_points", &breaking_points, py::arg("delays"), py::arg("t_max"),
          py::arg("h_target"));

    m.def(
        "anticommutator_value",
        [](double g0, double alpha, double t) {
            BoundaryWeightProblem p;
            p.g0 = g0;
            p.alpha = alpha;
            return anticommutator_value(p, t);
        },
        py::arg("g0"), py::arg("alpha"), py::arg("t"));
    m.def(
        "solve_alpha",
        [](double g0, const std::vector<double>& grid, double target) {
            BoundaryWeightProblem p;
            p.g0 = g0;
            return solve_alpha(p, grid, target);
        },
        py::arg("g0"), py::arg("grid"), py::arg("target") = 1.0);

    py::enum_<CompareQuantity>(m, "CompareQuantity")
        .value("amplitude", CompareQuantity::amplitude)
        .value("occupation", CompareQuantity::occupation);

    py::class_<SeriesMetrics>(m, "SeriesMetrics")
        .def_readonly("max_abs", &SeriesMetrics::max_abs)
        .def_readonly("l2", &SeriesMetrics::l2)
        .def_readonly("worst_time", &SeriesMetrics::worst_time);

    m.def("compare_series", &compare_series, py::arg("a"), py::arg("b"),
          py::arg("quantity") = CompareQuantity::amplitude, py::arg("comp") = 0);

    py::class_<scenarios::OpticsReport>(m, "OpticsReport")
        .def_readonly("chi", &scenarios::OpticsReport::chi)
        .def_readonly("n", &scenarios::OpticsReport::n)
        .def_readonly("r_fresnel", &scenarios::OpticsReport::r_fresnel)
        .def_readonly("r_weak", &scenarios::OpticsReport::r_weak);

    py::class_<scenarios::ValidateReport>(m, "ValidateReport")
        .def_readonly("alpha_star", &scenarios::ValidateReport::alpha_star)
        .def_readonly("anticom_drift", &scenarios::ValidateReport::anticom_drift)
        .def_readonly("quarter_asymptote", &scenarios::ValidateReport::quarter_asymptote)
        .def_readonly("identity_ok", &scenarios::ValidateReport::identity_ok)
        .def_readonly("factor2_ratio", &scenarios::ValidateReport::factor2_ratio)
        .def_readonly("ok", &scenarios::ValidateReport::ok);

    m.def("run_validate", &scenarios::run_validate);
    m.def(
        "run_fig2",
        [](const std::string& out_dir, unsigned max_threads) {
            return scenarios::run_fig2(out_dir, max_threads);
        },
        py::arg("out_dir"), py::arg("max_threads") = 0);

    py::register_exception<scenarios::ConfigError>(m, "ConfigError",
                                                   PyExc_ValueError);
}
