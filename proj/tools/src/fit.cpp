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

#include "dacqo/bench/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "dacqo/error.hpp"

namespace dacqo::bench {

double ExtrapolationFit::operator()(double n) const { return L + (K - L) * std::exp(-decay_rate * n); }

namespace {

struct Profile {
  double scale = 0.0;  // K - L
  double residual = 0.0;
};

// Best K - L for a fixed rate, and the resulting residual.
Profile profile(const std::vector<FidelityPoint>& pts, double L, double rate) {
  double ge = 0.0, ee = 0.0;
  for (const auto& p : pts) {
    const double e = std::exp(-rate * p.n);
    ge += (p.fidelity - L) * e;
    ee += e * e;
  }
  Profile out;
  out.scale = ee > 0.0 ? ge / ee : 0.0;
  for (const auto& p : pts) {
    const double r = p.fidelity - L - out.scale * std::exp(-rate * p.n);
    out.residual += r * r;
  }
  return out;
}

}  // namespace

ExtrapolationFit fit_extrapolation(const std::vector<FidelityPoint>& points) {
  if (points.size() < 3) throw FitError("extrapolation fit needs at least 3 points");
  double n_min = std::numeric_limits<double>::infinity(), n_max = -n_min;
  for (const auto& p : points) {
    if (!std::isfinite(p.n) || !(p.fidelity > 0.0 && p.fidelity <= 1.0)) {
      throw FitError("fidelities must lie in (0, 1] and sizes must be finite");
    }
    n_min = std::min(n_min, p.n);
    n_max = std::max(n_max, p.n);
  }
  if (n_max - n_min <= 0.0) throw FitError("extrapolation fit is degenerate: all sizes are equal");

  ExtrapolationFit fit;
  const double span = n_max - n_min;
  // Rates beyond +-40/span make every point but one indistinguishable from L.
  const double lo = -40.0 / span, hi = 40.0 / span;
  constexpr int kGrid = 800;
  int best = 0;
  double best_res = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kGrid; ++i) {
    const double r = lo + (hi - lo) * i / kGrid;
    const double res = profile(points, fit.L, r).residual;
    if (res < best_res) {
      best_res = res;
      best = i;
    }
  }
  const double step = (hi - lo) / kGrid;
  const double a = lo + step * std::max(best - 1, 0);
  const double b = lo + step * std::min(best + 1, kGrid);
  const auto [rate, res] = boost::math::tools::brent_find_minima(
      [&](double r) { return profile(points, fit.L, r).residual; }, a, b, std::numeric_limits<double>::digits);
  const Profile pr = profile(points, fit.L, rate);
  fit.decay_rate = rate;
  fit.K = fit.L + pr.scale;
  fit.residual = std::max(res, 0.0);
  if (!std::isfinite(fit.K) || !std::isfinite(fit.residual)) throw FitError("extrapolation fit did not converge");
  return fit;
}

}  // namespace dacqo::bench
