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
#include "qlitho/baselines.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qlitho/dosing.hpp"
#include "qlitho/error.hpp"
#include "qlitho/fock.hpp"

namespace qlitho {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Baselines, OnePhoton) {
  EXPECT_NEAR(classical_one_photon(0.0), 2.0, 1e-15);
  EXPECT_NEAR(classical_one_photon(kPi / 2), 0.0, 1e-15);
  double mean = 0;
  for (double phi : phase_grid(128)) mean += classical_one_photon(phi) / 128;
  EXPECT_NEAR(mean, 1.0, 1e-14);
}

TEST(Baselines, TwoPhoton) {
  EXPECT_NEAR(classical_two_photon(0.0), 2.0, 1e-15);
  EXPECT_NEAR(classical_two_photon(kPi / 2), 0.0, 1e-15);
  EXPECT_NEAR(classical_two_photon(kPi / 4), 0.5, 1e-15);
  for (double phi : phase_grid(64)) {
    EXPECT_NEAR(classical_two_photon(phi), 0.75 + std::cos(2 * phi) + 0.25 * std::cos(4 * phi), 1e-14);
  }
}

TEST(Baselines, NPhoton) {
  for (double phi : phase_grid(64)) {
    EXPECT_NEAR(classical_n_photon(phi, 1), classical_one_photon(phi), 1e-14);
    EXPECT_NEAR(classical_n_photon(phi, 2), classical_two_photon(phi), 1e-14);
    for (int n = 1; n <= 8; ++n) {
      EXPECT_GE(classical_n_photon(phi, n), 0.0);
      EXPECT_NEAR(classical_n_photon(phi + kPi, n), classical_n_photon(phi, n), 1e-12);
    }
  }
  EXPECT_NEAR(classical_n_photon(0.0, 4), 2.0, 1e-15);
  EXPECT_THROW(classical_n_photon(0.0, 0), DomainError);
}

TEST(Baselines, Noon) {
  EXPECT_NEAR(noon_exposure(kPi / 4, 2), 0.0, 1e-15);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(noon_exposure(0.0, n), 2.0);
  EXPECT_NEAR(noon_exposure(kPi / 20, 5), 1.0, 1e-15);
  EXPECT_THROW(noon_exposure(0.0, 0), DomainError);
}

TEST(Baselines, SimulatedOnePhotonMatchesUpToPhase) {
  // 1 - sin 2phi = 1 + cos(2phi + pi/2): same Fourier magnitudes.
  const ExposureProfile sim = exposure_profile(number_state(1, 0), 1, 128);
  const ExposureProfile ref = sample_profile(128, classical_one_photon);
  const auto cs = fourier_components(sim, 6), cr = fourier_components(ref, 6);
  for (int h = 0; h <= 6; ++h) EXPECT_NEAR(std::abs(cs[h]), std::abs(cr[h]), 1e-12);
  EXPECT_NEAR(std::arg(cs[2] / cr[2]), kPi / 2, 1e-12);
}

TEST(Baselines, NoonMatchesSimulation) {
  for (int n = 1; n <= 12; ++n) {
    const FockState s = make_state({{{n, 0}, 1.0}, {{0, n}, 1.0}});
    for (double phi : phase_grid(64)) EXPECT_NEAR(deposition_rate(s, n, phi), noon_exposure(phi, n), 1e-9);
  }
}

}  // namespace
}  // namespace qlitho
