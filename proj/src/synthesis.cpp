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
#include "qlitho/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "qlitho/combinatorics.hpp"
#include "qlitho/error.hpp"

namespace qlitho {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_partition(int n, int p) {
  if (n < 1) throw DomainError("photon number must be at least 1");
  if (p < 0 || p > n) {
    throw DomainError("partition " + std::to_string(p) + " outside 0.." + std::to_string(n));
  }
}

void check_genome(const SynthesisGenome& genome, const PartitionBasis& basis) {
  if (static_cast<int>(genome.coefficients.size()) != basis.size()) {
    throw ShapeError("genome has " + std::to_string(genome.coefficients.size()) +
                     " coefficients for a basis of " + std::to_string(basis.size()));
  }
}

// Phase at which the basis states are built for a given grid phase.
double state_phase(double phi, SubstrateConvention conv) {
  return conv == SubstrateConvention::Symmetric ? 0.0 : phi;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per (seed, generation, individual).
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t generation, std::uint64_t index) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ generation);
  h = splitmix64(h ^ (index * 0xd1b54a32d192ed03ULL));
  return std::mt19937_64(h);
}

using Chromosome = std::vector<double>;  // re0, im0, re1, im1, ...

std::vector<Complex> to_coefficients(const Chromosome& c) {
  std::vector<Complex> out(c.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {c[2 * i], c[2 * i + 1]};
  return out;
}

// Returns false when the chromosome is numerically zero.
bool renormalize(Chromosome& c) {
  const double norm = std::sqrt(std::inner_product(c.begin(), c.end(), c.begin(), 0.0));
  if (!(norm > 1e-300)) return false;
  for (double& x : c) x /= norm;
  return true;
}

struct Candidate {
  double a;
  double b;
  double mse;
};

// min over a >= b >= 0 of mean((a + b c_i - p_i)^2) for a fixed fringe c.
Candidate constrained_fringe_fit(std::span<const double> fringe, std::span<const double> target) {
  const double g = static_cast<double>(target.size());
  double sc = 0, scc = 0, sp = 0, scp = 0, spp = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    sc += fringe[i];
    scc += fringe[i] * fringe[i];
    sp += target[i];
    scp += fringe[i] * target[i];
    spp += target[i] * target[i];
  }
  auto mse = [&](double a, double b) {
    // Expanded sum of squares; clamp tiny negative rounding.
    const double s = g * a * a + b * b * scc + spp + 2 * a * b * sc - 2 * a * sp - 2 * b * scp;
    return std::max(s / g, 0.0);
  };
  Candidate best{0.0, 0.0, mse(0.0, 0.0)};
  auto consider = [&](double a, double b) {
    if (a < b - 1e-15 || b < 0.0) return;
    const double e = mse(a, b);
    if (e < best.mse) best = {a, b, e};
  };
  const double det = g * scc - sc * sc;
  if (std::abs(det) > 1e-12 * g * g) {
    consider((scc * sp - sc * scp) / det, (g * scp - sc * sp) / det);
  }
  consider(std::max(sp / g, 0.0), 0.0);
  // a = b face: fit b (1 + c_i).
  const double s11 = g + 2 * sc + scc;
  if (s11 > 0.0) {
    const double b = std::max((sp + scp) / s11, 0.0);
    consider(b, b);
  }
  return best;
}

}  // namespace

PartitionBasis::PartitionBasis(int photons, std::vector<int> partitions)
    : photons_(photons), partitions_(std::move(partitions)) {
  if (photons_ < 1) throw DomainError("photon number must be at least 1");
  if (partitions_.empty()) throw DomainError("partition basis is empty");
  for (std::size_t i = 0; i < partitions_.size(); ++i) {
    const int p = partitions_[i];
    if (p < 0 || 2 * p > photons_) {
      throw DomainError("partition " + std::to_string(p) + " outside 0..N/2 for N = " +
                        std::to_string(photons_));
    }
    if (i > 0 && p <= partitions_[i - 1]) {
      throw DomainError("partitions must be strictly increasing");
    }
  }
}

PartitionBasis PartitionBasis::trench_default() { return PartitionBasis(10, {1, 2, 3, 4, 5}); }

SynthesisGenome SynthesisGenome::normalized(std::vector<Complex> coefficients, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("genome scale must be positive");
  double norm2 = 0.0;
  for (const auto& z : coefficients) norm2 += std::norm(z);
  if (!(norm2 > 0.0)) throw DegenerateStateError("genome coefficients are all zero");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : coefficients) z *= inv;
  return {std::move(coefficients), scale};
}

TargetPattern TargetPattern::from_samples(std::vector<double> samples) {
  TargetPattern t;
  t.phis = phase_grid(static_cast<int>(samples.size()));
  for (double v : samples) {
    if (!std::isfinite(v) || v < 0.0) throw DomainError("target samples must be finite and nonnegative");
  }
  t.samples = std::move(samples);
  return t;
}

FockState psi_np(int n, int p, double phi) {
  check_partition(n, p);
  if (2 * p == n) return number_state(p, p);
  return make_state({{{n - p, p}, std::polar(1.0, p * phi)}, {{p, n - p}, std::polar(1.0, (n - p) * phi)}});
}

ExposureProfile component_profile(int n, int p, int g, SubstrateConvention conv) {
  check_partition(n, p);
  if (conv == SubstrateConvention::Symmetric) {
    const FockState s = psi_np(n, p, 0.0);
    return sample_profile(g, [&](double phi) { return deposition_rate(s, n, phi, conv); });
  }
  return sample_profile(g, [&](double phi) { return deposition_rate(psi_np(n, p, phi), n, phi, conv); });
}

double component_closed_form(int n, int p, double phi) {
  check_partition(n, p);
  // The degenerate state |P, P> is a single term: no interference.
  if (2 * p == n) return binomial(n, p);
  return binomial(n, p) * (1.0 + std::cos(2.0 * (n - 2 * p) * phi));
}

FockState superposition_state(const SynthesisGenome& genome, const PartitionBasis& basis,
                              double state_phi) {
  check_genome(genome, basis);
  FockVector sum(basis.photons());
  for (int k = 0; k < basis.size(); ++k) {
    sum += genome.coefficients[k] * FockVector(psi_np(basis.photons(), basis.partitions()[k], state_phi));
  }
  return FockState::normalize(std::move(sum));
}

ExposureProfile genome_profile(const SynthesisGenome& genome, const PartitionBasis& basis, int g,
                               SubstrateConvention conv) {
  check_genome(genome, basis);
  if (!(genome.scale > 0.0)) throw DomainError("genome scale must be positive");
  const int n = basis.photons();
  if (conv == SubstrateConvention::Symmetric) {
    const FockState s = superposition_state(genome, basis, 0.0);
    return sample_profile(g, [&](double phi) { return genome.scale * deposition_rate(s, n, phi, conv); });
  }
  return sample_profile(g, [&](double phi) {
    return genome.scale * deposition_rate(superposition_state(genome, basis, phi), n, phi, conv);
  });
}

DepositionTable::DepositionTable(const PartitionBasis& basis, int g, SubstrateConvention conv)
    : grid_size_(g), basis_size_(basis.size()) {
  const auto phis = phase_grid(g);
  const int n = basis.photons();
  const double norm = sqrt_factorial(n);
  amplitudes_.resize(static_cast<std::size_t>(g) * basis_size_);
  for (int i = 0; i < g; ++i) {
    const FieldCoefficients field = substrate_field(phis[i], conv);
    for (int k = 0; k < basis_size_; ++k) {
      const FockState s = psi_np(n, basis.partitions()[k], state_phase(phis[i], conv));
      // Every basis state holds exactly N photons, so e^N lands on vacuum.
      amplitudes_[static_cast<std::size_t>(i) * basis_size_ + k] =
          apply_field_power(s, field, n).amplitude({0, 0}) / norm;
    }
  }
}

std::vector<double> DepositionTable::doses(std::span<const Complex> coefficients) const {
  if (static_cast<int>(coefficients.size()) != basis_size_) {
    throw ShapeError("coefficient count does not match the deposition table");
  }
  std::vector<double> out(grid_size_);
  for (int i = 0; i < grid_size_; ++i) {
    const Complex* row = &amplitudes_[static_cast<std::size_t>(i) * basis_size_];
    Complex s{};
    for (int k = 0; k < basis_size_; ++k) s += coefficients[k] * row[k];
    out[i] = std::norm(s);
  }
  return out;
}

TargetPattern trench_target(int g) {
  const auto phis = phase_grid(g);
  std::vector<double> samples(g);
  for (int i = 0; i < g; ++i) {
    // Index arithmetic keeps the boundaries exact: 4i < G is phi < pi/2.
    const bool in_well = 4 * i >= g && 4 * i < 3 * g;
    samples[i] = in_well ? 0.0 : 1.0;
  }
  return TargetPattern::from_samples(std::move(samples));
}

TargetPattern target_from_profile(const ExposureProfile& profile) {
  return TargetPattern::from_samples(profile.doses);
}

double mean_squared_error(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("grid size mismatch");
  if (a.empty()) throw ShapeError("empty grid");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s / static_cast<double>(a.size());
}

ScaleFit fit_scale(std::span<const double> profile, std::span<const double> target) {
  if (profile.size() != target.size()) throw ShapeError("grid size mismatch");
  double sdd = 0.0, sdp = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    sdd += profile[i] * profile[i];
    sdp += profile[i] * target[i];
  }
  if (!(sdd > 0.0) || !(sdp > 0.0)) {
    // Infimum approached as the scale goes to zero.
    const std::vector<double> zero(target.size(), 0.0);
    return {std::numeric_limits<double>::min(), mean_squared_error(zero, target)};
  }
  const double s = sdp / sdd;
  std::vector<double> scaled(profile.begin(), profile.end());
  for (double& d : scaled) d *= s;
  return {s, mean_squared_error(scaled, target)};
}

double fitness(const SynthesisGenome& genome, const PartitionBasis& basis, const TargetPattern& target,
               SubstrateConvention conv) {
  SynthesisGenome unit = genome;
  unit.scale = 1.0;
  const ExposureProfile p = genome_profile(unit, basis, target.size(), conv);
  return fit_scale(p.doses, target.samples).mse;
}

void GaConfig::validate() const {
  if (population < 4) throw ConfigError("population must be at least 4");
  if (generations < 1) throw ConfigError("generations must be at least 1");
  if (!(mutation_sigma > 0.0) || !std::isfinite(mutation_sigma)) {
    throw ConfigError("mutation_sigma must be positive");
  }
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
    throw ConfigError("crossover_rate must lie in [0, 1]");
  }
  if (elite_count < 1) throw ConfigError("elite_count must be at least 1");
  if (elite_count >= population) throw ConfigError("elite_count must be below population");
}

GaResult ga_optimize(const PartitionBasis& basis, const TargetPattern& target, const GaConfig& config,
                     SubstrateConvention conv) {
  config.validate();
  const DepositionTable table(basis, target.size(), conv);
  const std::size_t genes = 2 * static_cast<std::size_t>(basis.size());
  const auto pop_size = static_cast<std::size_t>(config.population);

  auto evaluate = [&](const Chromosome& c) {
    return fit_scale(table.doses(to_coefficients(c)), target.samples).mse;
  };

  std::vector<Chromosome> population(pop_size, Chromosome(genes));
  std::vector<double> scores(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) {
    auto rng = stream(config.seed, 0, i);
    std::normal_distribution<double> unit(0.0, 1.0);
    do {
      for (double& x : population[i]) x = unit(rng);
    } while (!renormalize(population[i]));
    scores[i] = evaluate(population[i]);
  }

  auto ranking = [&] {
    std::vector<std::size_t> order(pop_size);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return scores[l] < scores[r]; });
    return order;
  };

  GaResult result;
  result.trace.reserve(config.generations);
  std::vector<Chromosome> next(pop_size);
  std::vector<double> next_scores(pop_size);

  for (int gen = 1; gen <= config.generations; ++gen) {
    const auto order = ranking();
    const auto elites = static_cast<std::size_t>(config.elite_count);
    for (std::size_t e = 0; e < elites; ++e) {
      next[e] = population[order[e]];
      next_scores[e] = scores[order[e]];
    }
    for (std::size_t i = elites; i < pop_size; ++i) {
      auto rng = stream(config.seed, static_cast<std::uint64_t>(gen), i);
      std::uniform_int_distribution<std::size_t> pick(0, pop_size - 1);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      std::normal_distribution<double> noise(0.0, config.mutation_sigma);
      auto tournament = [&] {
        const std::size_t x = pick(rng), y = pick(rng);
        if (scores[x] != scores[y]) return scores[x] < scores[y] ? x : y;
        return std::min(x, y);
      };
      const Chromosome& p1 = population[tournament()];
      const Chromosome& p2 = population[tournament()];
      Chromosome child = p1;
      if (unit(rng) < config.crossover_rate) {
        const double w = unit(rng);
        for (std::size_t k = 0; k < genes; ++k) child[k] = w * p1[k] + (1.0 - w) * p2[k];
      }
      for (double& x : child) x += noise(rng);
      if (!renormalize(child)) child = p1;
      next_scores[i] = evaluate(child);
      next[i] = std::move(child);
    }
    population.swap(next);
    scores.swap(next_scores);
    result.trace.push_back(*std::min_element(scores.begin(), scores.end()));
  }

  const std::size_t best = ranking().front();
  const auto coefficients = to_coefficients(population[best]);
  const ScaleFit fit = fit_scale(table.doses(coefficients), target.samples);
  result.best = SynthesisGenome::normalized(coefficients, fit.scale);
  result.best_fitness = fit.mse;
  return result;
}

ClassicalFit best_classical_fit(const TargetPattern& target, SubstrateConvention conv) {
  const double k = conv == SubstrateConvention::Symmetric ? 2.0 : 1.0;
  const int g = target.size();
  std::vector<double> fringe(g);
  auto at = [&](double theta) {
    for (int i = 0; i < g; ++i) fringe[i] = std::cos(k * target.phis[i] + theta);
    return constrained_fringe_fit(fringe, target.samples);
  };

  constexpr int kCoarse = 720;
  const double step = kTwoPi / kCoarse;
  double best_theta = 0.0;
  Candidate best = at(0.0);
  for (int j = 1; j < kCoarse; ++j) {
    const double theta = j * step;
    const Candidate c = at(theta);
    if (c.mse < best.mse) {
      best = c;
      best_theta = theta;
    }
  }

  // Golden-section refinement around the best coarse phase.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_theta - step, hi = best_theta + step;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  Candidate f1 = at(x1), f2 = at(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    if (f1.mse < f2.mse) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = at(x2);
    }
  }
  for (const auto& [theta, c] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
    if (c.mse < best.mse) {
      best = c;
      best_theta = theta;
    }
  }

  best_theta = std::fmod(best_theta + kTwoPi, kTwoPi);
  const double a = best.a, b = best.b;
  ExposureProfile profile =
      sample_profile(g, [&](double phi) { return std::max(a + b * std::cos(k * phi + best_theta), 0.0); });
  const double err = mean_squared_error(profile.doses, target.samples);
  return {a, b, best_theta, err, std::move(profile)};
}

}  // namespace qlitho
