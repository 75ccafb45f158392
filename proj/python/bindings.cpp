// Copyright 2026 The qlitho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qlitho/baselines.hpp"
#include "qlitho/dosing.hpp"
#include "qlitho/error.hpp"
#include "qlitho/fock.hpp"
#include "qlitho/optics.hpp"
#include "qlitho/synthesis.hpp"

namespace py = pybind11;
using namespace qlitho;

namespace {

// Python-side states are dicts {(n, m): amplitude}.
std::vector<FockTerm> to_terms(const std::map<std::pair<int, int>, Complex>& amps) {
  std::vector<FockTerm> terms;
  for (const auto& [occ, a] : amps) terms.push_back({{occ.first, occ.second}, a});
  return terms;
}

std::map<std::pair<int, int>, Complex> to_dict(const FockVector& v) {
  std::map<std::pair<int, int>, Complex> out;
  for (const auto& t : v.terms()) out[{t.occupation.a, t.occupation.b}] = t.amplitude;
  return out;
}

}  // namespace

PYBIND11_MODULE(_qlitho, m) {
  m.doc() = "Entangled-photon interferometric lithography simulator";

  auto base = py::register_exception<Error>(m, "QlithoError", PyExc_ValueError);
  py::register_exception<DegenerateStateError>(m, "DegenerateStateError", base.ptr());
  py::register_exception<CutoffError>(m, "CutoffError", base.ptr());
  py::register_exception<UnitarityError>(m, "UnitarityError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<AliasingError>(m, "AliasingError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::enum_<SubstrateConvention>(m, "Convention")
      .value("SYMMETRIC", SubstrateConvention::Symmetric)
      .value("PAPER_LITERAL", SubstrateConvention::PaperLiteral);
  py::enum_<StatePort>(m, "Port").value("INPUT", StatePort::Input).value("OUTPUT", StatePort::Output);
  py::enum_<Mode>(m, "Mode").value("A", Mode::A).value("B", Mode::B);

  py::class_<FockVector>(m, "FockVector")
      .def_property_readonly("cutoff", &FockVector::cutoff)
      .def("amplitudes", [](const FockVector& v) { return to_dict(v); })
      .def("amplitude", [](const FockVector& v, int a, int b) { return v.amplitude({a, b}); })
      .def("squared_norm", [](const FockVector& v) { return squared_norm(v); });

  py::class_<FockState>(m, "FockState")
      .def_property_readonly("cutoff", &FockState::cutoff)
      .def("amplitudes", [](const FockState& s) { return to_dict(s); })
      .def("amplitude", [](const FockState& s, int a, int b) { return s.amplitude({a, b}); })
      .def("vector", &FockState::vector)
      .def("__repr__", [](const FockState& s) { return "<FockState cutoff=" + std::to_string(s.cutoff()) + ">"; });

  m.def("make_state",
        [](const std::map<std::pair<int, int>, Complex>& amps, std::optional<int> cutoff) {
          const auto terms = to_terms(amps);
          return make_state(std::span<const FockTerm>(terms), cutoff);
        },
        py::arg("amplitudes"), py::arg("cutoff") = py::none());
  m.def("number_state", &number_state, py::arg("n"), py::arg("m"), py::arg("cutoff") = py::none());
  m.def("apply_annihilation", [](const FockState& s, Mode mode) { return apply_annihilation(s, mode); });
  m.def("apply_field_power",
        [](const FockState& s, Complex alpha, Complex beta, int power) {
          return apply_field_power(s, {alpha, beta}, power);
        },
        py::arg("state"), py::arg("alpha"), py::arg("beta"), py::arg("power"));

  py::class_<ModeUnitary>(m, "ModeUnitary")
      .def(py::init<const ModeUnitary::Matrix&>())
      .def("entries", &ModeUnitary::entries)
      .def("__matmul__", [](const ModeUnitary& l, const ModeUnitary& r) { return compose(l, r); });
  m.def("beamsplitter", &beamsplitter);
  m.def("mirror", &mirror);
  m.def("phase_shifter", &phase_shifter, py::arg("phi"));
  m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
  m.def("evolve", py::overload_cast<const FockState&, const ModeUnitary&>(&evolve), py::arg("state"),
        py::arg("transfer"));

  py::class_<ExposureProfile>(m, "ExposureProfile")
      .def_readonly("phis", &ExposureProfile::phis)
      .def_readonly("doses", &ExposureProfile::doses)
      .def("__len__", &ExposureProfile::size);

  constexpr auto kSym = SubstrateConvention::Symmetric;
  m.def("deposition_rate",
        [](const FockState& s, int n, double phi, SubstrateConvention c) { return deposition_rate(s, n, phi, c); },
        py::arg("state"), py::arg("n"), py::arg("phi"), py::arg("convention") = kSym);
  m.def("pipeline_rate", &pipeline_rate, py::arg("state"), py::arg("n"), py::arg("phi"),
        py::arg("convention") = kSym);
  m.def("exposure_profile", &exposure_profile, py::arg("state"), py::arg("n"), py::arg("grid") = kDefaultGridSize,
        py::arg("convention") = kSym, py::arg("port") = StatePort::Input);
  m.def("fourier_components", &fourier_components, py::arg("profile"), py::arg("max_harmonic"));
  m.def("min_feature", &min_feature, py::arg("n"), py::arg("wavelength"));

  m.def("classical_one_photon", &classical_one_photon, py::arg("phi"));
  m.def("classical_two_photon", &classical_two_photon, py::arg("phi"));
  m.def("classical_n_photon", &classical_n_photon, py::arg("phi"), py::arg("n"));
  m.def("noon_exposure", &noon_exposure, py::arg("phi"), py::arg("n"));

  py::class_<PartitionBasis>(m, "PartitionBasis")
      .def(py::init<int, std::vector<int>>(), py::arg("n"), py::arg("partitions"))
      .def_static("trench_default", &PartitionBasis::trench_default)
      .def_property_readonly("n", &PartitionBasis::photons)
      .def_property_readonly("partitions",
                             [](const PartitionBasis& b) { return std::vector<int>(b.partitions().begin(), b.partitions().end()); });

  py::class_<SynthesisGenome>(m, "SynthesisGenome")
      .def(py::init(&SynthesisGenome::normalized), py::arg("coefficients"), py::arg("scale") = 1.0)
      .def_readonly("coefficients", &SynthesisGenome::coefficients)
      .def_readonly("scale", &SynthesisGenome::scale);

  py::class_<TargetPattern>(m, "TargetPattern")
      .def(py::init(&TargetPattern::from_samples), py::arg("samples"))
      .def_readonly("phis", &TargetPattern::phis)
      .def_readonly("samples", &TargetPattern::samples);

  py::class_<GaConfig>(m, "GAConfig")
      .def(py::init<>())
      .def_readwrite("population", &GaConfig::population)
      .def_readwrite("generations", &GaConfig::generations)
      .def_readwrite("mutation_sigma", &GaConfig::mutation_sigma)
      .def_readwrite("crossover_rate", &GaConfig::crossover_rate)
      .def_readwrite("elite_count", &GaConfig::elite_count)
      .def_readwrite("seed", &GaConfig::seed);

  py::class_<GaResult>(m, "GAResult")
      .def_readonly("best", &GaResult::best)
      .def_readonly("best_fitness", &GaResult::best_fitness)
      .def_readonly("trace", &GaResult::trace);

  py::class_<ClassicalFit>(m, "ClassicalFit")
      .def_readonly("offset", &ClassicalFit::offset)
      .def_readonly("amplitude", &ClassicalFit::amplitude)
      .def_readonly("phase", &ClassicalFit::phase)
      .def_readonly("error", &ClassicalFit::error)
      .def_readonly("profile", &ClassicalFit::profile);

  m.def("psi_np", &psi_np, py::arg("n"), py::arg("p"), py::arg("phi"));
  m.def("component_profile", &component_profile, py::arg("n"), py::arg("p"), py::arg("grid") = kDefaultGridSize,
        py::arg("convention") = kSym);
  m.def("genome_profile", &genome_profile, py::arg("genome"), py::arg("basis"),
        py::arg("grid") = kDefaultGridSize, py::arg("convention") = kSym);
  m.def("trench_target", &trench_target, py::arg("grid") = kDefaultGridSize);
  m.def("fitness", &fitness, py::arg("genome"), py::arg("basis"), py::arg("target"), py::arg("convention") = kSym);
  m.def("ga_optimize", &ga_optimize, py::arg("basis"), py::arg("target"), py::arg("config") = GaConfig{},
        py::arg("convention") = kSym, py::call_guard<py::gil_scoped_release>());
  m.def("best_classical_fit", &best_classical_fit, py::arg("target"), py::arg("convention") = kSym);
}
