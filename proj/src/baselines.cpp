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

#include <cmath>

#include "qlitho/error.hpp"

namespace qlitho {

double classical_one_photon(double phi) { return 1.0 + std::cos(2.0 * phi); }

double classical_two_photon(double phi) {
  const double d = classical_one_photon(phi);
  return d * d / 2.0;
}

double classical_n_photon(double phi, int n) {
  if (n < 1) throw DomainError("N must be at least 1");
  return std::pow(classical_one_photon(phi), n) / std::ldexp(1.0, n - 1);
}

double noon_exposure(double phi, int n) {
  if (n < 1) throw DomainError("N must be at least 1");
  return 1.0 + std::cos(2.0 * n * phi);
}

}  // namespace qlitho
