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
#include "qlitho/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qlitho/combinatorics.hpp"
#include "qlitho/error.hpp"

namespace qlitho {
namespace {

void check_cutoff(int cutoff) {
  if (cutoff < 0) throw CutoffError("cutoff must be nonnegative, got " + std::to_string(cutoff));
}

// Sort by occupation, sum duplicates, drop negligible amplitudes.
std::vector<FockTerm> canonicalize(std::vector<FockTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const FockTerm& l, const FockTerm& r) { return l.occupation < r.occupation; });
  std::vector<FockTerm> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().occupation == t.occupation) {
      out.back().amplitude += t.amplitude;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const FockTerm& t) { return std::abs(t.amplitude) < kPruneThreshold; });
  return out;
}

}  // namespace

FockVector::FockVector(int cutoff) : cutoff_(cutoff) { check_cutoff(cutoff); }

FockVector::FockVector(int cutoff, std::vector<FockTerm> terms) : cutoff_(cutoff) {
  check_cutoff(cutoff);
  for (const auto& t : terms) {
    const auto& o = t.occupation;
    if (o.a < 0 || o.b < 0) throw CutoffError("negative occupation");
    if (o.total() > cutoff) {
      throw CutoffError("occupation (" + std::to_string(o.a) + "," + std::to_string(o.b) +
                        ") exceeds cutoff " + std::to_string(cutoff));
    }
    if (!std::isfinite(t.amplitude.real()) || !std::isfinite(t.amplitude.imag())) {
      throw DomainError("non-finite amplitude");
    }
  }
  terms_ = canonicalize(std::move(terms));
}

Complex FockVector::amplitude(Occupation occ) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), occ,
                             [](const FockTerm& t, const Occupation& o) { return t.occupation < o; });
  if (it != terms_.end() && it->occupation == occ) return it->amplitude;
  return {};
}

std::optional<int> FockVector::max_photons() const {
  if (terms_.empty()) return std::nullopt;
  int best = 0;
  for (const auto& t : terms_) best = std::max(best, t.occupation.total());
  return best;
}

std::optional<int> FockVector::photon_number() const {
  if (terms_.empty()) return std::nullopt;
  const int n = terms_.front().occupation.total();
  for (const auto& t : terms_) {
    if (t.occupation.total() != n) return std::nullopt;
  }
  return n;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  if (other.cutoff_ != cutoff_) throw ShapeError("adding Fock vectors with different cutoffs");
  std::vector<FockTerm> merged = terms_;
  merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
  terms_ = canonicalize(std::move(merged));
  return *this;
}

FockVector& FockVector::operator*=(Complex factor) {
  for (auto& t : terms_) t.amplitude *= factor;
  std::erase_if(terms_, [](const FockTerm& t) { return std::abs(t.amplitude) < kPruneThreshold; });
  return *this;
}

FockVector operator+(FockVector lhs, const FockVector& rhs) { return lhs += rhs; }

FockVector operator*(Complex factor, FockVector v) { return v *= factor; }

FockState FockState::normalize(FockVector v) {
  const double norm2 = squared_norm(v);
  if (v.is_zero() || !(norm2 > 0.0)) throw DegenerateStateError("cannot normalize the zero vector");
  v *= 1.0 / std::sqrt(norm2);
  return FockState(std::move(v));
}

FockState make_state(std::span<const FockTerm> terms, std::optional<int> cutoff) {
  int c = 0;
  for (const auto& t : terms) c = std::max(c, t.occupation.total());
  return FockState::normalize(FockVector(cutoff.value_or(c), {terms.begin(), terms.end()}));
}

FockState make_state(std::initializer_list<FockTerm> terms, std::optional<int> cutoff) {
  return make_state(std::span<const FockTerm>(terms.begin(), terms.size()), cutoff);
}

FockState number_state(int n, int m, std::optional<int> cutoff) {
  return make_state({FockTerm{{n, m}, 1.0}}, cutoff);
}

double squared_norm(const FockVector& v) {
  double s = 0.0;
  for (const auto& t : v.terms()) s += std::norm(t.amplitude);
  return s;
}

Complex inner_product(const FockVector& lhs, const FockVector& rhs) {
  Complex s{};
  for (const auto& t : lhs.terms()) s += std::conj(t.amplitude) * rhs.amplitude(t.occupation);
  return s;
}

FockVector apply_annihilation(const FockVector& v, Mode mode) {
  std::vector<FockTerm> out;
  out.reserve(v.terms().size());
  for (const auto& [occ, amp] : v.terms()) {
    const int n = mode == Mode::A ? occ.a : occ.b;
    if (n == 0) continue;
    Occupation lowered = occ;
    (mode == Mode::A ? lowered.a : lowered.b) -= 1;
    out.push_back({lowered, amp * std::sqrt(static_cast<double>(n))});
  }
  return FockVector(v.cutoff(), std::move(out));
}

FockVector apply_creation(const FockVector& v, Mode mode) {
  std::vector<FockTerm> out;
  out.reserve(v.terms().size());
  for (const auto& [occ, amp] : v.terms()) {
    Occupation raised = occ;
    int& n = mode == Mode::A ? raised.a : raised.b;
    n += 1;
    out.push_back({raised, amp * std::sqrt(static_cast<double>(n))});
  }
  return FockVector(v.cutoff(), std::move(out));
}

FockVector apply_field(const FockVector& v, const FieldCoefficients& f) {
  return apply_field_power(v, f, 1);
}

FockVector apply_field_power(const FockVector& v, const FieldCoefficients& f, int power) {
  if (power < 0) throw DomainError("field power must be nonnegative");
  if (power > v.cutoff()) {
    throw CutoffError("field power " + std::to_string(power) + " exceeds cutoff " +
                      std::to_string(v.cutoff()));
  }
  // (alpha a + beta b)^N = sum_k C(N,k) alpha^k beta^(N-k) a^k b^(N-k)
  // and a^k |n> = sqrt(n!/(n-k)!) |n-k>.
  std::vector<Complex> alpha_pow(power + 1), beta_pow(power + 1);
  alpha_pow[0] = beta_pow[0] = 1.0;
  for (int k = 1; k <= power; ++k) {
    alpha_pow[k] = alpha_pow[k - 1] * f.alpha;
    beta_pow[k] = beta_pow[k - 1] * f.beta;
  }
  std::vector<FockTerm> out;
  for (const auto& [occ, amp] : v.terms()) {
    const int k_lo = std::max(0, power - occ.b);
    const int k_hi = std::min(power, occ.a);
    for (int k = k_lo; k <= k_hi; ++k) {
      const int l = power - k;
      const double ladder = sqrt_factorial(occ.a) / sqrt_factorial(occ.a - k) *
                            sqrt_factorial(occ.b) / sqrt_factorial(occ.b - l);
      out.push_back({{occ.a - k, occ.b - l},
                     amp * binomial(power, k) * ladder * alpha_pow[k] * beta_pow[l]});
    }
  }
  return FockVector(v.cutoff(), std::move(out));
}

}  // namespace qlitho
