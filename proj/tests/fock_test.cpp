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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qlitho/combinatorics.hpp"
#include "qlitho/error.hpp"

namespace qlitho {
namespace {

constexpr double kTol = 1e-12;

void expect_complex_near(Complex got, Complex want, double tol = kTol) {
  EXPECT_NEAR(got.real(), want.real(), tol);
  EXPECT_NEAR(got.imag(), want.imag(), tol);
}

TEST(Combinatorics, ExactAndLogGammaRegimes) {
  EXPECT_EQ(factorial(0), 1.0);
  EXPECT_EQ(factorial(20), 2432902008176640000.0);
  EXPECT_NEAR(factorial(25) / 1.5511210043330986e25, 1.0, 1e-13);
  EXPECT_NEAR(sqrt_factorial(30) * sqrt_factorial(30) / factorial(30), 1.0, 1e-13);
  EXPECT_EQ(binomial(10, 5), 252.0);
  EXPECT_EQ(binomial(62, 31), 465428353255261088.0);
  EXPECT_EQ(binomial(5, 7), 0.0);
  EXPECT_THROW(factorial(-1), DomainError);
}

TEST(MakeState, SingleTerm) {
  const FockState s = make_state({{{1, 1}, 1.0}});
  ASSERT_EQ(s.terms().size(), 1u);
  expect_complex_near(s.amplitude({1, 1}), 1.0);
}

TEST(MakeState, EqualWeightPair) {
  const FockState s = make_state({{{2, 0}, 1.0}, {{0, 2}, 1.0}});
  expect_complex_near(s.amplitude({2, 0}), 1.0 / std::numbers::sqrt2);
  expect_complex_near(s.amplitude({0, 2}), 1.0 / std::numbers::sqrt2);
}

TEST(MakeState, NoonWithPhase) {
  const FockState s = make_state({{{0, 10}, 1.0}, {{10, 0}, std::polar(1.0, 10 * 0.3)}});
  EXPECT_NEAR(std::norm(s.amplitude({0, 10})), 0.5, kTol);
  EXPECT_NEAR(std::norm(s.amplitude({10, 0})), 0.5, kTol);
  EXPECT_NEAR(std::arg(s.amplitude({10, 0}) / s.amplitude({0, 10})), std::remainder(3.0, 2 * std::numbers::pi),
              kTol);
  EXPECT_EQ(s.photon_number(), 10);
}

TEST(MakeState, DuplicatesAreSummed) {
  const FockState s = make_state({{{1, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 2.0}});
  expect_complex_near(s.amplitude({1, 0}), 1.0 / std::numbers::sqrt2);
}

TEST(MakeState, Errors) {
  EXPECT_THROW(make_state({{{1, 0}, 0.0}}), DegenerateStateError);
  EXPECT_THROW(make_state({{{1, 0}, 1.0}, {{1, 0}, -1.0}}), DegenerateStateError);
  EXPECT_THROW(make_state({{{3, 2}, 1.0}}, 4), CutoffError);
  EXPECT_THROW(make_state({{{-1, 0}, 1.0}}), CutoffError);
  EXPECT_THROW(FockVector(-1), CutoffError);
}

TEST(Annihilation, LadderFactors) {
  expect_complex_near(apply_annihilation(number_state(1, 0), Mode::A).amplitude({0, 0}), 1.0);
  expect_complex_near(apply_annihilation(number_state(2, 0), Mode::A).amplitude({1, 0}), std::sqrt(2.0));
  const FockVector zero = apply_annihilation(number_state(1, 0), Mode::B);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(squared_norm(zero), 0.0);
}

TEST(FieldPower, PureModeA) {
  const FockVector out = apply_field_power(number_state(2, 0), {1.0, 0.0}, 2);
  ASSERT_EQ(out.terms().size(), 1u);
  expect_complex_near(out.amplitude({0, 0}), std::sqrt(2.0));
}

TEST(FieldPower, CrossTermOnOneOne) {
  const Complex alpha{0.3, -0.7}, beta{-1.1, 0.4};
  const FockVector out = apply_field_power(number_state(1, 1), {alpha, beta}, 2);
  ASSERT_EQ(out.terms().size(), 1u);
  expect_complex_near(out.amplitude({0, 0}), 2.0 * alpha * beta);
}

TEST(FieldPower, CubeOnTwoOneMatchesWordExpansion) {
  const Complex want = oracle::word_expansion_vacuum({2, 1}, 1.0, 1.0, 3);
  expect_complex_near(want, 3.0 * std::sqrt(2.0));  // frozen from the oracle
  expect_complex_near(apply_field_power(number_state(2, 1), {1.0, 1.0}, 3).amplitude({0, 0}), want);
}

TEST(FieldPower, PowerBeyondCutoffIsAnError) {
  EXPECT_THROW(apply_field_power(number_state(1, 1), {1.0, 1.0}, 3), CutoffError);
  EXPECT_NO_THROW(apply_field_power(number_state(1, 0, 5), {1.0, 1.0}, 3));
}

TEST(FieldPower, ZeroPowerIsIdentity) {
  const FockState s = make_state({{{2, 1}, 1.0}, {{0, 1}, Complex{0, 1}}});
  const FockVector out = apply_field_power(s, {0.4, 2.0}, 0);
  for (const auto& t : s.terms()) expect_complex_near(out.amplitude(t.occupation), t.amplitude);
}

TEST(SquaredNorm, Values) {
  EXPECT_NEAR(squared_norm(make_state({{{3, 1}, 2.0}, {{0, 0}, Complex{0, 1}}})), 1.0, kTol);
  EXPECT_EQ(squared_norm(FockVector(3)), 0.0);
  const double r = 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(squared_norm(apply_field_power(number_state(1, 1), {r, r}, 2)), 1.0, kTol);
}

TEST(FockProperties, ConstructorsAreNormalized) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const FockState s = oracle::random_state(rng, 12, 12, 1 + trial % 6);
    EXPECT_NEAR(squared_norm(s), 1.0, kTol);
    for (const auto& t : s.terms()) EXPECT_LE(t.occupation.total(), s.cutoff());
  }
}

TEST(FockProperties, CanonicalCommutator) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const FockState s = oracle::random_state(rng, 10, 8, 5);
    for (Mode mode : {Mode::A, Mode::B}) {
      const FockVector ad = apply_annihilation(apply_creation(s, mode), mode);
      const FockVector da = apply_creation(apply_annihilation(s, mode), mode);
      const FockVector diff = ad + (-1.0 * da);
      for (const auto& t : s.terms()) expect_complex_near(diff.amplitude(t.occupation), t.amplitude);
      EXPECT_NEAR(squared_norm(diff), 1.0, kTol);
    }
  }
}

TEST(FockProperties, CreationRespectsCutoff) {
  EXPECT_THROW(apply_creation(number_state(2, 1), Mode::A), CutoffError);
}

TEST(FockProperties, FieldPowerEqualsRepeatedSingleApplication) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const FockState s = oracle::random_state(rng, 8, 8, 5);
    const FieldCoefficients f{oracle::random_complex(rng), oracle::random_complex(rng)};
    for (int power = 0; power <= 6; ++power) {
      FockVector repeated = s;
      for (int k = 0; k < power; ++k) repeated = apply_field(repeated, f);
      const FockVector direct = apply_field_power(s, f, power);
      const oracle::Dense dense = oracle::Dense::from(s, 8).field_power(f.alpha, f.beta, power);
      for (int n = 0; n <= 8; ++n) {
        for (int m = 0; m + n <= 8; ++m) {
          const Complex d = direct.amplitude({n, m});
          const double scale = std::max(1.0, std::abs(d));
          EXPECT_NEAR(std::abs(d - repeated.amplitude({n, m})) / scale, 0.0, 1e-10);
          EXPECT_NEAR(std::abs(d - dense.at(n, m)) / scale, 0.0, 1e-10);
        }
      }
    }
  }
}

TEST(FockProperties, HighPhotonNumbersStayFinite) {
  const FockState s = make_state({{{30, 0}, 1.0}, {{0, 30}, 1.0}}, 30);
  const double dose = squared_norm(apply_field_power(s, {1.0, 1.0}, 30)) / factorial(30);
  EXPECT_NEAR(dose, 2.0, 1e-9);
}

}  // namespace
}  // namespace qlitho
