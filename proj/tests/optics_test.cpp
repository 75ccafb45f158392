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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qlitho/error.hpp"

namespace qlitho {
namespace {

using namespace std::complex_literals;
constexpr double kTol = 1e-12;
const double kR = 1.0 / std::numbers::sqrt2;

void expect_complex_near(Complex got, Complex want, double tol = kTol) {
  EXPECT_NEAR(got.real(), want.real(), tol);
  EXPECT_NEAR(got.imag(), want.imag(), tol);
}

void expect_matrix_near(const ModeUnitary& got, const ModeUnitary& want, double tol = kTol) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) expect_complex_near(got(i, j), want(i, j), tol);
  }
}

TEST(Matrices, Beamsplitter) {
  const ModeUnitary b = beamsplitter();
  expect_complex_near(b(0, 0), -kR);
  expect_complex_near(b(0, 1), 1i * kR);
  expect_complex_near(b(1, 0), 1i * kR);
  expect_complex_near(b(1, 1), -kR);
  expect_matrix_near(compose(b, b.adjoint()), ModeUnitary::identity());
}

TEST(Matrices, MirrorAndPhaseShifter) {
  const ModeUnitary r = mirror();
  expect_complex_near(r(0, 0), -1.0);
  expect_complex_near(r(1, 1), -1.0);
  expect_complex_near(r(0, 1), 0.0);
  expect_matrix_near(phase_shifter(0.0), ModeUnitary::identity());
  expect_complex_near(phase_shifter(std::numbers::pi)(0, 0), -1.0);
  expect_complex_near(phase_shifter(std::numbers::pi)(1, 1), 1.0);
}

TEST(Matrices, OutputOperatorsOfTheFullChain) {
  for (double phi : {0.0, 0.4, 1.3, 2.9}) {
    const ModeUnitary t = compose(phase_shifter(phi), compose(mirror(), beamsplitter()));
    // c = (a - i b) e^{i phi} / sqrt2, d = (-i a + b) / sqrt2
    expect_complex_near(t(0, 0), std::polar(kR, phi));
    expect_complex_near(t(0, 1), -1i * std::polar(kR, phi));
    expect_complex_near(t(1, 0), -1i * kR);
    expect_complex_near(t(1, 1), kR);
  }
}

TEST(Matrices, ComposeIdentityAndInverse) {
  expect_matrix_near(compose(ModeUnitary::identity(), beamsplitter()), beamsplitter());
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const ModeUnitary a = oracle::random_unitary(rng);
    expect_matrix_near(compose(a, a.adjoint()), ModeUnitary::identity());
  }
}

TEST(Matrices, RejectsNonUnitary) {
  EXPECT_THROW(ModeUnitary({{{1.0, 0.0}, {0.0, 2.0}}}), UnitarityError);
  EXPECT_THROW(ModeUnitary({{{1.0, 1e-6}, {0.0, 1.0}}}), UnitarityError);
  EXPECT_NO_THROW(ModeUnitary({{{1.0, 1e-12}, {0.0, 1.0}}}));
}

TEST(Evolve, HongOuMandel) {
  const FockState out = evolve(number_state(1, 1), beamsplitter());
  EXPECT_LT(std::abs(out.amplitude({1, 1})), 1e-12);
  EXPECT_NEAR(std::norm(out.amplitude({2, 0})), 0.5, kTol);
  EXPECT_NEAR(std::norm(out.amplitude({0, 2})), 0.5, kTol);
}

TEST(Evolve, Identity) {
  std::mt19937_64 rng(22);
  const FockState s = oracle::random_state(rng, 6, 6, 5);
  const FockState out = evolve(s, ModeUnitary::identity());
  for (const auto& t : s.terms()) expect_complex_near(out.amplitude(t.occupation), t.amplitude);
}

TEST(Evolve, SinglePhotonFollowsHeisenbergMap) {
  // a^dag |0> -> (T11 c^dag + T21 d^dag) |0>
  const ModeUnitary b = beamsplitter();
  const FockState out = evolve(number_state(1, 0), b);
  expect_complex_near(out.amplitude({1, 0}), b(0, 0));
  expect_complex_near(out.amplitude({0, 1}), b(1, 0));
  expect_complex_near(out.amplitude({1, 0}), -kR);
  expect_complex_near(out.amplitude({0, 1}), 1i * kR);
}

TEST(Evolve, MatchesPermanentOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const ModeUnitary t = oracle::random_unitary(rng);
    for (int photons = 1; photons <= 5; ++photons) {
      for (int a = 0; a <= photons; ++a) {
        const FockVector out = evolve(number_state(a, photons - a).vector(), t);
        for (int c = 0; c <= photons; ++c) {
          const Complex want = oracle::permanent_amplitude(t, {a, photons - a}, {c, photons - c});
          expect_complex_near(out.amplitude({c, photons - c}), want, 1e-12);
        }
      }
    }
  }
}

TEST(EvolveProperties, NormAndPhotonNumberConserved) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const FockState s = oracle::random_state(rng, 8, 8, 5);
    const FockVector out = evolve(s.vector(), oracle::random_unitary(rng));
    EXPECT_NEAR(squared_norm(out), 1.0, kTol);
    std::vector<int> in_sectors, out_sectors;
    for (const auto& t : s.terms()) in_sectors.push_back(t.occupation.total());
    for (const auto& t : out.terms()) {
      EXPECT_NE(std::find(in_sectors.begin(), in_sectors.end(), t.occupation.total()), in_sectors.end());
    }
  }
}

TEST(EvolveProperties, Homomorphism) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const FockState s = oracle::random_state(rng, 8, 8, 4);
    const ModeUnitary t1 = oracle::random_unitary(rng), t2 = oracle::random_unitary(rng);
    const FockVector twice = evolve(evolve(s.vector(), t1), t2);
    const FockVector once = evolve(s.vector(), compose(t2, t1));
    for (int n = 0; n <= 8; ++n) {
      for (int m = 0; n + m <= 8; ++m) expect_complex_near(twice.amplitude({n, m}), once.amplitude({n, m}), 1e-10);
    }
  }
}

TEST(EvolveProperties, HeisenbergSchroedingerSingleField) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const FockState s = oracle::random_state(rng, 8, 8, 4);
    const ModeUnitary t = oracle::random_unitary(rng);
    const FieldCoefficients f{oracle::random_complex(rng), oracle::random_complex(rng)};
    const double schroedinger = squared_norm(apply_field(evolve(s.vector(), t), f));
    const double heisenberg = squared_norm(apply_field(s, pull_back(f, t)));
    EXPECT_NEAR(schroedinger, heisenberg, 1e-10 * std::max(1.0, heisenberg));
  }
}

}  // namespace
}  // namespace qlitho
