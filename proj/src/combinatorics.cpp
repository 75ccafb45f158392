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
#include "qlitho/combinatorics.hpp"

#include <array>
#include <cmath>
#include <cstdint>

#include "qlitho/error.hpp"

namespace qlitho {
namespace {

constexpr int kExactFactorialMax = 20;
constexpr int kExactBinomialMax = 62;

constexpr std::array<std::uint64_t, kExactFactorialMax + 1> make_factorials() {
  std::array<std::uint64_t, kExactFactorialMax + 1> out{};
  out[0] = 1;
  for (int i = 1; i <= kExactFactorialMax; ++i) {
    out[i] = out[i - 1] * static_cast<std::uint64_t>(i);
  }
  return out;
}

constexpr auto kFactorials = make_factorials();

}  // namespace

double factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  if (n <= kExactFactorialMax) return static_cast<double>(kFactorials[n]);
  return std::exp(std::lgamma(n + 1.0));
}

double sqrt_factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  if (n <= kExactFactorialMax) return std::sqrt(static_cast<double>(kFactorials[n]));
  return std::exp(0.5 * std::lgamma(n + 1.0));
}

double binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0.0;
  k = k < n - k ? k : n - k;
  if (n <= kExactBinomialMax) {
    // Each partial quotient is itself a binomial coefficient, so the
    // division is exact; the 128-bit product keeps n <= 62 overflow free.
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
      r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<double>(r);
  }
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

}  // namespace qlitho
