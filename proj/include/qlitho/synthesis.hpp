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

#include <cstdint>
#include <span>
#include <vector>

#include "qlitho/dosing.hpp"
#include "qlitho/fock.hpp"

namespace qlitho {

// Photon number N and the partitions P (0 <= P <= N/2, strictly
// increasing) whose entangled states span the synthesis basis.
class PartitionBasis {
 public:
  PartitionBasis(int photons, std::vector<int> partitions);

  // N = 10, P = 1..5.
  static PartitionBasis trench_default();

  int photons() const { return photons_; }
  std::span<const int> partitions() const { return partitions_; }
  int size() const { return static_cast<int>(partitions_.size()); }

 private:
  int photons_;
  std::vector<int> partitions_;
};

// Complex weights alpha_P (unit total norm) and a positive exposure scale.
struct SynthesisGenome {
  std::vector<Complex> coefficients;
  double scale = 1.0;

  // Rescales the coefficients to unit norm. Throws DegenerateStateError on
  // all-zero input, DomainError on a non-positive scale.
  static SynthesisGenome normalized(std::vector<Complex> coefficients, double scale = 1.0);
};

// Sampled target dose on the uniform phase grid.
struct TargetPattern {
  std::vector<double> phis;
  std::vector<double> samples;

  int size() const { return static_cast<int>(samples.size()); }

  static TargetPattern from_samples(std::vector<double> samples);
};

// (e^{iP phi} |N-P, P> + e^{i(N-P) phi} |P, N-P>) normalized; the single
// term |P, P> when 2P = N. Modes are the outputs C, D.
FockState psi_np(int n, int p, double phi);

// Dose of a single basis state over the grid. The phase is applied once:
// through the substrate field under Symmetric, through the state phases
// under PaperLiteral.
ExposureProfile component_profile(int n, int p, int g = kDefaultGridSize,
                                  SubstrateConvention conv = SubstrateConvention::Symmetric);

// C(N,P) (1 + cos 2(N-2P) phi), the Symmetric-coordinate component dose;
// C(N,P) for the degenerate 2P = N.
double component_closed_form(int n, int p, double phi);

// sum_P alpha_P psi_np(N, P, state_phi), normalized.
FockState superposition_state(const SynthesisGenome& genome, const PartitionBasis& basis,
                              double state_phi);

// scale * <delta_N> of the superposition at every grid phase, built
// directly in Fock space.
ExposureProfile genome_profile(const SynthesisGenome& genome, const PartitionBasis& basis,
                               int g = kDefaultGridSize,
                               SubstrateConvention conv = SubstrateConvention::Symmetric);

// Vacuum amplitudes <0,0| e^N |psi_P> / sqrt(N!) for every (phi, P). The
// dose is linear-then-squared in these, which makes genome evaluation a
// small dense product. Used by the optimizer.
class DepositionTable {
 public:
  DepositionTable(const PartitionBasis& basis, int g,
                  SubstrateConvention conv = SubstrateConvention::Symmetric);

  int grid_size() const { return grid_size_; }
  int basis_size() const { return basis_size_; }

  // Unscaled doses for unit-norm coefficients.
  std::vector<double> doses(std::span<const Complex> coefficients) const;

 private:
  int grid_size_;
  int basis_size_;
  std::vector<Complex> amplitudes_;  // row-major [phi][P]
};

// 1D square well: 1 on [0, pi/2) and [3pi/2, 2pi), 0 on [pi/2, 3pi/2).
TargetPattern trench_target(int g = kDefaultGridSize);

TargetPattern target_from_profile(const ExposureProfile& profile);

// (1/G) sum (a_i - b_i)^2
double mean_squared_error(std::span<const double> a, std::span<const double> b);

struct ScaleFit {
  double scale;
  double mse;
};

// Minimizes mean((s * profile - target)^2) over s > 0 in closed form.
ScaleFit fit_scale(std::span<const double> profile, std::span<const double> target);

// Mean squared error against the target after the optimal exposure scale.
double fitness(const SynthesisGenome& genome, const PartitionBasis& basis,
               const TargetPattern& target,
               SubstrateConvention conv = SubstrateConvention::Symmetric);

struct GaConfig {
  int population = 64;
  int generations = 500;
  double mutation_sigma = 0.05;
  double crossover_rate = 0.7;
  int elite_count = 2;
  std::uint64_t seed = 20000503;

  // Throws ConfigError.
  void validate() const;
};

struct GaResult {
  SynthesisGenome best;   // scale set to its optimum
  double best_fitness;
  std::vector<double> trace;  // best fitness after each generation
};

// Generational GA over the real and imaginary parts of alpha_P.
// Deterministic given (config.seed, basis, target).
GaResult ga_optimize(const PartitionBasis& basis, const TargetPattern& target,
                     const GaConfig& config,
                     SubstrateConvention conv = SubstrateConvention::Symmetric);

struct ClassicalFit {
  double offset;     // a
  double amplitude;  // b, with a >= b >= 0
  double phase;      // theta_0
  double error;      // mean squared error
  ExposureProfile profile;
};

// Least-squares single-fringe fit a + b cos(k phi + theta_0), k = 2 under
// Symmetric and k = 1 under PaperLiteral.
ClassicalFit best_classical_fit(const TargetPattern& target,
                                SubstrateConvention conv = SubstrateConvention::Symmetric);

}  // namespace qlitho
