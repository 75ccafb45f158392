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
#include "qlitho/dosing.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qlitho/combinatorics.hpp"
#include "qlitho/error.hpp"

namespace qlitho {
namespace {

constexpr double kNegativeDoseNoise = 1e-12;

void check_order(int n) {
  if (n < 1) throw DomainError("absorption order N must be at least 1");
}

}  // namespace

FieldCoefficients substrate_field(double phi, SubstrateConvention conv) {
  if (conv == SubstrateConvention::Symmetric) return {std::polar(1.0, phi), std::polar(1.0, -phi)};
  return {1.0, 1.0};
}

ModeUnitary input_transfer(double phi, SubstrateConvention conv) {
  const ModeUnitary fixed = compose(mirror(), beamsplitter());
  if (conv == SubstrateConvention::Symmetric) return fixed;
  return compose(phase_shifter(phi), fixed);
}

double deposition_rate(const FockVector& state_cd, int n, double phi, SubstrateConvention conv) {
  check_order(n);
  const auto photons = state_cd.max_photons();
  if (!photons || n > *photons) return 0.0;
  const FockVector out = apply_field_power(state_cd, substrate_field(phi, conv), n);
  return squared_norm(out) / factorial(n);
}

double pipeline_rate(const FockState& input_ab, int n, double phi, SubstrateConvention conv) {
  return deposition_rate(evolve(input_ab.vector(), input_transfer(phi, conv)), n, phi, conv);
}

double pipeline_rate_heisenberg(const FockVector& input_ab, int n, double phi,
                                SubstrateConvention conv) {
  check_order(n);
  const auto photons = input_ab.max_photons();
  if (!photons || n > *photons) return 0.0;
  const FieldCoefficients f = pull_back(substrate_field(phi, conv), input_transfer(phi, conv));
  return squared_norm(apply_field_power(input_ab, f, n)) / factorial(n);
}

std::vector<double> phase_grid(int g) {
  if (g < kMinGridSize) {
    throw DomainError("grid size must be at least " + std::to_string(kMinGridSize) + ", got " +
                      std::to_string(g));
  }
  std::vector<double> phis(g);
  for (int i = 0; i < g; ++i) phis[i] = 2.0 * std::numbers::pi * i / g;
  return phis;
}

ExposureProfile ExposureProfile::from_doses(std::vector<double> doses) {
  ExposureProfile p;
  p.phis = phase_grid(static_cast<int>(doses.size()));
  for (double& d : doses) {
    if (!std::isfinite(d)) throw DomainError("non-finite dose");
    if (d < 0.0) {
      if (d < -kNegativeDoseNoise) throw DomainError("negative dose " + std::to_string(d));
      d = 0.0;
    }
  }
  p.doses = std::move(doses);
  return p;
}

ExposureProfile sample_profile(int g, const std::function<double(double)>& dose) {
  const auto phis = phase_grid(g);
  std::vector<double> doses(g);
  for (int i = 0; i < g; ++i) doses[i] = dose(phis[i]);
  return ExposureProfile::from_doses(std::move(doses));
}

ExposureProfile exposure_profile(const FockState& source, int n, int g, SubstrateConvention conv,
                                 StatePort port) {
  if (port == StatePort::Output) {
    return sample_profile(g, [&](double phi) { return deposition_rate(source, n, phi, conv); });
  }
  if (conv == SubstrateConvention::Symmetric) {
    // The transfer matrix does not depend on phi here; evolve once.
    const FockVector at_cd = evolve(source.vector(), input_transfer(0.0, conv));
    return sample_profile(g, [&](double phi) { return deposition_rate(at_cd, n, phi, conv); });
  }
  return sample_profile(g, [&](double phi) { return pipeline_rate(source, n, phi, conv); });
}

std::vector<Complex> fourier_components(const ExposureProfile& profile, int max_harmonic) {
  const int g = profile.size();
  if (max_harmonic < 0) throw DomainError("max_harmonic must be nonnegative");
  if (2 * max_harmonic >= g) {
    throw AliasingError("harmonic " + std::to_string(max_harmonic) + " aliases on a grid of " +
                        std::to_string(g) + " points");
  }
  std::vector<Complex> c(max_harmonic + 1);
  for (int h = 0; h <= max_harmonic; ++h) {
    Complex s{};
    for (int i = 0; i < g; ++i) s += profile.doses[i] * std::polar(1.0, -h * profile.phis[i]);
    c[h] = s / static_cast<double>(g);
  }
  return c;
}

double min_feature(int n, double wavelength) {
  if (n < 1) throw DomainError("N must be at least 1");
  if (!(wavelength > 0.0)) throw DomainError("wavelength must be positive");
  return wavelength / (2.0 * n);
}

}  // namespace qlitho
