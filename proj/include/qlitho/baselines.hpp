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

// Closed-form exposure patterns used as references.

// 1 + cos 2phi
double classical_one_photon(double phi);

// (1 + cos 2phi)^2 / 2 = 3/4 + cos 2phi + cos 4phi / 4
double classical_two_photon(double phi);

// (1 + cos 2phi)^N / 2^(N-1). The normalization matches the one- and
// two-photon forms and keeps the peak at 2; for N > 2 it is a convention.
double classical_n_photon(double phi, int n);

// 1 + cos 2N phi, the entangled N-photon fringe.
double noon_exposure(double phi, int n);

}  // namespace qlitho
