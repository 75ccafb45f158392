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

#include <compare>
#include <complex>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qlitho {

using Complex = std::complex<double>;

// Amplitudes below this magnitude are dropped after every operation.
inline constexpr double kPruneThreshold = 1e-15;

// The two bosonic modes. Input-port states use A/B; states at the
// interferometer outputs reuse the same slots for C/D.
enum class Mode { A, B };

// Photon numbers (n, m) in modes A and B.
struct Occupation {
  int a = 0;
  int b = 0;

  constexpr int total() const { return a + b; }
  friend constexpr auto operator<=>(const Occupation&, const Occupation&) = default;
};

// Coefficients of the field operator alpha * a + beta * b.
struct FieldCoefficients {
  Complex alpha;
  Complex beta;
};

struct FockTerm {
  Occupation occupation;
  Complex amplitude;
};

// A vector in the two-mode Fock space truncated at total photon number
// `cutoff`. Sparse: only nonzero amplitudes are stored, sorted by
// occupation. Not necessarily normalized; see FockState.
class FockVector {
 public:
  explicit FockVector(int cutoff);

  // Duplicate occupations are summed. Throws CutoffError if any occupation
  // is negative or exceeds the cutoff.
  FockVector(int cutoff, std::vector<FockTerm> terms);

  int cutoff() const { return cutoff_; }
  std::span<const FockTerm> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Complex amplitude(Occupation occ) const;

  // Largest total photon number carrying amplitude; nullopt for the zero vector.
  std::optional<int> max_photons() const;
  // Total photon number when the support lies in a single sector.
  std::optional<int> photon_number() const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator*=(Complex factor);

 private:
  int cutoff_;
  std::vector<FockTerm> terms_;
};

FockVector operator+(FockVector lhs, const FockVector& rhs);
FockVector operator*(Complex factor, FockVector v);

// Unit-norm FockVector. Constructors normalize their input.
class FockState {
 public:
  // Throws DegenerateStateError on the zero vector.
  static FockState normalize(FockVector v);

  const FockVector& vector() const { return vector_; }
  operator const FockVector&() const { return vector_; }  // NOLINT

  int cutoff() const { return vector_.cutoff(); }
  std::span<const FockTerm> terms() const { return vector_.terms(); }
  Complex amplitude(Occupation occ) const { return vector_.amplitude(occ); }
  std::optional<int> photon_number() const { return vector_.photon_number(); }

 private:
  explicit FockState(FockVector v) : vector_(std::move(v)) {}
  FockVector vector_;
};

// Normalized superposition of the given terms. The cutoff defaults to the
// largest total occupation among the terms.
FockState make_state(std::span<const FockTerm> terms, std::optional<int> cutoff = std::nullopt);
FockState make_state(std::initializer_list<FockTerm> terms, std::optional<int> cutoff = std::nullopt);

// |n>_A |m>_B
FockState number_state(int n, int m, std::optional<int> cutoff = std::nullopt);

double squared_norm(const FockVector& v);

// <lhs|rhs>
Complex inner_product(const FockVector& lhs, const FockVector& rhs);

FockVector apply_annihilation(const FockVector& v, Mode mode);

// Throws CutoffError when the result would leave the truncated space.
FockVector apply_creation(const FockVector& v, Mode mode);

// (alpha a + beta b) applied once.
FockVector apply_field(const FockVector& v, const FieldCoefficients& f);

// (alpha a + beta b)^power, expanded binomially over the commuting mode
// operators. Throws CutoffError if power exceeds the cutoff.
FockVector apply_field_power(const FockVector& v, const FieldCoefficients& f, int power);

}  // namespace qlitho
