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

namespace qlitho {

// n! as a double. Exact for n <= 20, log-gamma above.
double factorial(int n);

// sqrt(n!) without forming n! for large n.
double sqrt_factorial(int n);

// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
double binomial(int n, int k);

}  // namespace qlitho
