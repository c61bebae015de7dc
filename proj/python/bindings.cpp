/**
 * Copyright 2026 The su11 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "su11/closed_form.hpp"
#include "su11/config.hpp"
#include "su11/config_io.hpp"
#include "su11/fock.hpp"
#include "su11/gaussian.hpp"
#include "su11/metrics.hpp"
#include "su11/sweep.hpp"
#include "su11/validate.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

void bind_config(py::module_& m) {
  py::enum_<su11::Mode>(m, "Mode").value("SIGNAL", su11::Mode::Signal).value("IDLER", su11::Mode::Idler);

  py::class_<su11::InterferometerConfig>(m, "InterferometerConfig")
      .def(py::init([](double g1, double g2, double theta, double t_s, double t_i, double n_i) {
             return su11::InterferometerConfig{g1, g2, theta, t_s, t_i, n_i};
           }),
           "g1"_a = 0.0, "g2"_a = 0.0, "theta"_a = 0.0, "t_s"_a = 1.0, "t_i"_a = 1.0, "n_i"_a = 0.0)
      .def_readwrite("g1", &su11::InterferometerConfig::g1)
      .def_readwrite("g2", &su11::InterferometerConfig::g2)
      .def_readwrite("theta", &su11::InterferometerConfig::theta)
      .def_readwrite("t_s", &su11::InterferometerConfig::t_s)
      .def_readwrite("t_i", &su11::InterferometerConfig::t_i)
      .def_readwrite("n_i", &su11::InterferometerConfig::n_i)
      .def("validate", &su11::InterferometerConfig::validate)
      .def("with_theta", &su11::InterferometerConfig::with_theta, "theta"_a)
      .def(py::self == py::self)
      .def("__repr__", [](const su11::InterferometerConfig& c) { return "InterferometerConfig(" + su11::describe(c) + ")"; });
}

void bind_gaussian(py::module_& m) {
  py::class_<su11::PhotonStats>(m, "PhotonStats")
      .def_readonly("mean", &su11::PhotonStats::mean)
      .def_readonly("variance", &su11::PhotonStats::variance);

  py::class_<su11::GaussianTwoModeState>(m, "GaussianTwoModeState")
      .def(py::init<>())
      .def_readwrite("cov", &su11::GaussianTwoModeState::cov)
      .def_readwrite("disp", &su11::GaussianTwoModeState::disp)
      .def("reduced_cov", &su11::GaussianTwoModeState::reduced_cov, "mode"_a)
      .def("reduced_disp", &su11::GaussianTwoModeState::reduced_disp, "mode"_a)
      .def("symplectic_eigenvalues", &su11::GaussianTwoModeState::symplectic_eigenvalues);

  py::enum_<su11::PipelineStage>(m, "PipelineStage")
      .value("AFTER_SEED", su11::PipelineStage::AfterSeed)
      .value("AFTER_OPA1", su11::PipelineStage::AfterOpa1)
      .value("AFTER_LOSS", su11::PipelineStage::AfterLoss)
      .value("AFTER_PHASE", su11::PipelineStage::AfterPhase)
      .value("OUTPUT", su11::PipelineStage::Output);

  m.def("vacuum_state", &su11::vacuum_state);
  m.def("seed_idler", &su11::seed_idler, "state"_a, "n_i"_a);
  m.def("apply_squeezer", &su11::apply_squeezer, "state"_a, "gain"_a);
  m.def("apply_phase", &su11::apply_phase, "state"_a, "theta"_a, "target"_a = su11::Mode::Signal);
  m.def("apply_loss", &su11::apply_loss, "state"_a, "t_s"_a, "t_i"_a);
  m.def("photon_stats", &su11::photon_stats, "state"_a, "mode"_a = su11::Mode::Signal);
  m.def("run_interferometer", &su11::run_interferometer, "cfg"_a, "stop"_a = su11::PipelineStage::Output);
}

void bind_closed_form(py::module_& m) {
  auto cf = m.def_submodule("closed_form", "Analytic photon numbers, visibilities and sensitivity limit");
  cf.def("mean_signal", &su11::closed_form::mean_signal, "cfg"_a);
  cf.def("mean_signal_derivative", &su11::closed_form::mean_signal_derivative, "cfg"_a);
  cf.def("visibility", &su11::closed_form::visibility, "cfg"_a);
  cf.def("visibility_signal_loss", &su11::closed_form::visibility_signal_loss, "t_s"_a);
  cf.def("visibility_idler_loss", &su11::closed_form::visibility_idler_loss, "t_i"_a, "gain"_a, "n_i"_a);
  cf.def("visibility_symmetric_loss", &su11::closed_form::visibility_symmetric_loss, "t"_a, "gain"_a, "n_i"_a);
  cf.def("ideal_sensitivity", [](double gain, double n_i) {
    return su11::closed_form::ideal_sensitivity(gain, n_i).by_gain;
  }, "gain"_a, "n_i"_a);
}

void bind_metrics(py::module_& m) {
  py::enum_<su11::metrics::ShotNoiseConvention>(m, "ShotNoiseConvention")
      .value("AFTER_OPA1", su11::metrics::ShotNoiseConvention::AfterOpa1)
      .value("AFTER_LOSS", su11::metrics::ShotNoiseConvention::AfterLoss);

  py::class_<su11::metrics::SensitivityReport>(m, "SensitivityReport")
      .def_readonly("theta_opt", &su11::metrics::SensitivityReport::theta_opt)
      .def_readonly("dtheta2", &su11::metrics::SensitivityReport::dtheta2)
      .def_readonly("dtheta2_shotnoise", &su11::metrics::SensitivityReport::dtheta2_shotnoise)
      .def_readonly("db_vs_shotnoise", &su11::metrics::SensitivityReport::db_vs_shotnoise)
      .def_readonly("snl_convention", &su11::metrics::SensitivityReport::snl_convention);

  m.def("signal_mean", &su11::metrics::signal_mean, "cfg"_a);
  m.def("visibility_numeric", &su11::metrics::visibility_numeric, "cfg"_a);
  m.def("sensitivity", &su11::metrics::sensitivity, "cfg"_a, "theta0"_a, "derivative_step"_a = 1e-5);
  m.def("shot_noise_level", &su11::metrics::shot_noise_level, "cfg"_a, "convention"_a);
  m.def("optimal_sensitivity", &su11::metrics::optimal_sensitivity, "cfg"_a,
        "convention"_a = su11::metrics::ShotNoiseConvention::AfterOpa1);
}

void bind_fock(py::module_& m) {
  m.def(
      "fock_pipeline",
      [](const su11::InterferometerConfig& cfg, int cutoff, int max_cutoff) {
        su11::fock::FockOptions opts;
        opts.cutoff = cutoff;
        opts.max_cutoff = max_cutoff;
        py::gil_scoped_release release;
        return su11::fock::fock_pipeline(cfg, opts);
      },
      "cfg"_a, "cutoff"_a = 40, "max_cutoff"_a = 128);
}

void bind_sweep(py::module_& m) {
  py::class_<su11::SweepRow>(m, "SweepRow")
      .def_readonly("x", &su11::SweepRow::x)
      .def_readonly("values", &su11::SweepRow::values)
      .def_readonly("error", &su11::SweepRow::error)
      .def("ok", &su11::SweepRow::ok);

  m.def(
      "normalize_config",
      [](const std::string& text) { return su11::serialize_config(su11::parse_config(text)); }, "text"_a,
      "Normalizes config text: parses it and serializes every key back.");

  m.def(
      "run_sweep",
      [](const std::string& config_text, int threads) {
        const su11::SweepSpec spec = su11::parse_config(config_text);
        py::gil_scoped_release release;
        return su11::run_sweep(spec, threads);
      },
      "config_text"_a, "threads"_a = 0, "Runs the sweep described by flat `key = value` config text.");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lossy, seeded SU(1,1) interferometer simulator";
  m.attr("__version__") = SU11_VERSION;

  py::register_exception<su11::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<su11::UndefinedVisibilityError>(m, "UndefinedVisibilityError", PyExc_ValueError);
  py::register_exception<su11::InfiniteSensitivityError>(m, "InfiniteSensitivityError", PyExc_ValueError);
  py::register_exception<su11::StationaryPointError>(m, "StationaryPointError", PyExc_ValueError);
  py::register_exception<su11::DerivativeMismatchError>(m, "DerivativeMismatchError", PyExc_RuntimeError);
  py::register_exception<su11::TruncationError>(m, "TruncationError", PyExc_RuntimeError);
  py::register_exception<su11::ConfigError>(m, "ConfigError", PyExc_ValueError);

  bind_config(m);
  bind_gaussian(m);
  bind_closed_form(m);
  bind_metrics(m);
  bind_fock(m);
  bind_sweep(m);
}
