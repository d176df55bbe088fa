// Copyright 2026 The dacqo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

namespace dacqo::bench {

struct FidelityPoint {
  double n = 0.0;
  double fidelity = 0.0;
};

// f(N) = L + (K - L) exp(-decay_rate N), L fixed at 1.
struct ExtrapolationFit {
  double L = 1.0;
  double K = 1.0;
  double decay_rate = 0.0;
  double residual = 0.0;  // sum of squared errors

  double operator()(double n) const;
};

// Least squares with K eliminated in closed form and the rate found by a bracketed
// 1-D search. Throws FitError for fewer than 3 points, equal N or fidelities outside (0, 1].
ExtrapolationFit fit_extrapolation(const std::vector<FidelityPoint>& points);

}  // namespace dacqo::bench
