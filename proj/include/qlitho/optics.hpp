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

#include <array>

#include "qlitho/fock.hpp"

namespace qlitho {

// Input/output tolerance on T^dagger T = 1 for user-supplied matrices.
inline constexpr double kUnitarityTolerance = 1e-9;

// 2x2 transfer matrix acting on annihilation operators:
// (c, d)^T = T (a, b)^T.
class ModeUnitary {
 public:
  using Matrix = std::array<std::array<Complex, 2>, 2>;

  // Throws UnitarityError if the matrix is not unitary within tolerance.
  explicit ModeUnitary(const Matrix& entries);

  static ModeUnitary identity();

  const Complex& operator()(int row, int col) const { return entries_[row][col]; }
  const Matrix& entries() const { return entries_; }

  ModeUnitary adjoint() const;

  // Largest entry of |T^dagger T - 1|.
  static double unitarity_defect(const Matrix& m);

 private:
  struct Unchecked {};
  ModeUnitary(const Matrix& entries, Unchecked) : entries_(entries) {}
  friend ModeUnitary compose(const ModeUnitary&, const ModeUnitary&);

  Matrix entries_;
};

// Symmetric lossless beamsplitter, (1/sqrt2) [[-1, i], [i, -1]]:
// pi phase on reflection, pi/2 on transmission.
ModeUnitary beamsplitter();

// Mirror pair: -1 on both paths.
ModeUnitary mirror();

// diag(e^{i phi}, 1): phase shifter in the upper (first) branch.
ModeUnitary phase_shifter(double phi);

// outer * inner: apply inner first.
ModeUnitary compose(const ModeUnitary& outer, const ModeUnitary& inner);

// Schroedinger-picture evolution matching the Heisenberg map
// (c, d)^T = T (a, b)^T. Each input creation operator is rewritten as
// a^dag -> T11 c^dag + T21 d^dag, b^dag -> T12 c^dag + T22 d^dag and the
// monomials re-expanded over output number states. Photon number and norm
// are conserved.
FockState evolve(const FockState& state, const ModeUnitary& t);
FockVector evolve(const FockVector& v, const ModeUnitary& t);

// Field coefficients (alpha, beta) * T: the output-mode field
// alpha c + beta d rewritten over the input modes.
FieldCoefficients pull_back(const FieldCoefficients& f, const ModeUnitary& t);

}  // namespace qlitho
