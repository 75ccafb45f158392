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
#pragma once

#include <functional>
#include <vector>

#include "qlitho/fock.hpp"
#include "qlitho/optics.hpp"

namespace qlitho {

// How the phase coordinate enters the field at the substrate.
//
// Symmetric: e(phi) = c e^{i phi} + d e^{-i phi} acting on the state at the
// outputs C, D; the interferometer itself is mirror * beamsplitter. This
// reproduces 1 - sin 2phi, 1 + cos 4phi and 1 + cos 2N phi.
//
// PaperLiteral: e = c + d with T = P(phi) R B. Its doses equal the Symmetric
// ones with phi replaced by phi / 2.
enum class SubstrateConvention { Symmetric, PaperLiteral };

inline constexpr int kMinGridSize = 64;
inline constexpr int kDefaultGridSize = 512;

// Coefficients of the substrate field on the output modes C, D.
FieldCoefficients substrate_field(double phi, SubstrateConvention conv);

// Input-to-output transfer matrix for the given convention.
ModeUnitary input_transfer(double phi, SubstrateConvention conv);

// <delta_N> = || e^N |state> ||^2 / N! for a state at the outputs C, D.
// Returns 0 when N exceeds the photons present.
double deposition_rate(const FockVector& state_cd, int n, double phi,
                       SubstrateConvention conv = SubstrateConvention::Symmetric);

// Propagates an input-port state through the interferometer, then doses.
double pipeline_rate(const FockState& input_ab, int n, double phi,
                     SubstrateConvention conv = SubstrateConvention::Symmetric);

// Same quantity computed on the input state with the field pulled back
// through T (Heisenberg picture).
double pipeline_rate_heisenberg(const FockVector& input_ab, int n, double phi,
                                SubstrateConvention conv = SubstrateConvention::Symmetric);

// phi_i = 2 pi i / G, i = 0..G-1. Throws DomainError for G < 64.
std::vector<double> phase_grid(int g);

// Sampled dose on the uniform phase grid.
struct ExposureProfile {
  std::vector<double> phis;
  std::vector<double> doses;

  int size() const { return static_cast<int>(doses.size()); }

  // Validates the grid and clamps float noise in [-1e-12, 0) to 0.
  static ExposureProfile from_doses(std::vector<double> doses);
};

ExposureProfile sample_profile(int g, const std::function<double(double)>& dose);

enum class StatePort { Input, Output };

ExposureProfile exposure_profile(const FockState& source, int n, int g = kDefaultGridSize,
                                 SubstrateConvention conv = SubstrateConvention::Symmetric,
                                 StatePort port = StatePort::Input);

// c_h = (1/G) sum_i dose_i e^{-i h phi_i} for h = 0..max_harmonic.
// A real pattern a0 + a cos(h phi) gives c_0 = a0 and c_h = a/2.
std::vector<Complex> fourier_components(const ExposureProfile& profile, int max_harmonic);

// Smallest writable feature wavelength / (2N).
double min_feature(int n, double wavelength);

}  // namespace qlitho
