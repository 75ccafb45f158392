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
#include "qlitho/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qlitho/combinatorics.hpp"
#include "qlitho/error.hpp"

namespace qlitho {

using namespace std::complex_literals;

namespace {

Complex ipow(Complex z, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

ModeUnitary::ModeUnitary(const Matrix& entries) : entries_(entries) {
  for (const auto& row : entries) {
    for (const auto& z : row) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw UnitarityError("non-finite matrix entry");
      }
    }
  }
  if (unitarity_defect(entries) > kUnitarityTolerance) {
    throw UnitarityError("mode transfer matrix is not unitary");
  }
}

ModeUnitary ModeUnitary::identity() { return ModeUnitary({{{1.0, 0.0}, {0.0, 1.0}}}, Unchecked{}); }

ModeUnitary ModeUnitary::adjoint() const {
  Matrix m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m[i][j] = std::conj(entries_[j][i]);
  }
  return ModeUnitary(m, Unchecked{});
}

double ModeUnitary::unitarity_defect(const Matrix& m) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex s = std::conj(m[0][i]) * m[0][j] + std::conj(m[1][i]) * m[1][j];
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

ModeUnitary beamsplitter() {
  const double r = 1.0 / std::numbers::sqrt2;
  return ModeUnitary({{{-r, 1i * r}, {1i * r, -r}}});
}

ModeUnitary mirror() { return ModeUnitary({{{-1.0, 0.0}, {0.0, -1.0}}}); }

ModeUnitary phase_shifter(double phi) { return ModeUnitary({{{std::polar(1.0, phi), 0.0}, {0.0, 1.0}}}); }

ModeUnitary compose(const ModeUnitary& outer, const ModeUnitary& inner) {
  ModeUnitary::Matrix m{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m[i][j] = outer(i, 0) * inner(0, j) + outer(i, 1) * inner(1, j);
  }
  return ModeUnitary(m, ModeUnitary::Unchecked{});
}

FockVector evolve(const FockVector& v, const ModeUnitary& t) {
  // a^dag -> x_a c^dag + y_a d^dag, b^dag -> x_b c^dag + y_b d^dag
  const Complex xa = t(0, 0), ya = t(1, 0);
  const Complex xb = t(0, 1), yb = t(1, 1);
  std::vector<FockTerm> out;
  for (const auto& [occ, amp] : v.terms()) {
    const int n = occ.a, m = occ.b;
    // |n, m> = (a^dag)^n (b^dag)^m |0> / sqrt(n! m!)
    const Complex pre = amp / (sqrt_factorial(n) * sqrt_factorial(m));
    for (int j = 0; j <= n; ++j) {
      const Complex from_a = binomial(n, j) * ipow(xa, j) * ipow(ya, n - j);
      for (int k = 0; k <= m; ++k) {
        const Complex from_b = binomial(m, k) * ipow(xb, k) * ipow(yb, m - k);
        const int c = j + k;
        const int d = n + m - c;
        out.push_back({{c, d}, pre * from_a * from_b * sqrt_factorial(c) * sqrt_factorial(d)});
      }
    }
  }
  return FockVector(v.cutoff(), std::move(out));
}

FockState evolve(const FockState& state, const ModeUnitary& t) {
  return FockState::normalize(evolve(state.vector(), t));
}

FieldCoefficients pull_back(const FieldCoefficients& f, const ModeUnitary& t) {
  return {f.alpha * t(0, 0) + f.beta * t(1, 0), f.alpha * t(0, 1) + f.beta * t(1, 1)};
}

}  // namespace qlitho
