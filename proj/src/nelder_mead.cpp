// Copyright 2026 The lingate Authors
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

#include "lingate/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lingate {

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  NelderMeadResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  if (n == 0 || options.max_evaluations <= 0) {
    result.value = eval(start);
    result.x = std::move(start);
    return result;
  }

  // Gao & Han dimension-dependent coefficients.
  const double dim = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / dim;
  const double contract = 0.75 - 0.5 / dim;
  const double shrink = 1.0 - 1.0 / dim;

  std::vector<std::vector<double>> simplex(n + 1, start);
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double step = start[i] != 0.0 ? options.initial_step * std::max(1.0, std::abs(start[i]))
                                        : options.initial_step;
    simplex[i + 1][i] += step;
  }
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), second(n);
  auto along = [&](double t, std::vector<double>& out) {
    const auto& worst = simplex[order[n]];
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + t * (centroid[j] - worst[j]);
  };

  while (result.evaluations < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    const double best = values[order[0]];
    const double worst = values[order[n]];

    double spread = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        spread = std::max(spread, std::abs(simplex[order[i]][j] - simplex[order[0]][j]));
      }
    }
    if (std::isfinite(worst) && worst - best <= options.f_tol && spread <= options.x_tol) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[order[i]][j] / dim;
    }

    along(reflect, trial);
    const double reflected = eval(trial);
    if (reflected < best) {
      along(expand, second);
      const double expanded = eval(second);
      if (expanded < reflected) {
        simplex[order[n]] = second;
        values[order[n]] = expanded;
      } else {
        simplex[order[n]] = trial;
        values[order[n]] = reflected;
      }
      continue;
    }
    if (reflected < values[order[n - 1]]) {
      simplex[order[n]] = trial;
      values[order[n]] = reflected;
      continue;
    }
    const bool outside = reflected < worst;
    along(outside ? contract : -contract, second);
    const double contracted = eval(second);
    if (contracted < (outside ? reflected : worst)) {
      simplex[order[n]] = second;
      values[order[n]] = contracted;
      continue;
    }
    const auto& anchor = simplex[order[0]];
    for (std::size_t i = 1; i <= n; ++i) {
      auto& vertex = simplex[order[i]];
      for (std::size_t j = 0; j < n; ++j) vertex[j] = anchor[j] + shrink * (vertex[j] - anchor[j]);
      values[order[i]] = eval(vertex);
    }
  }

  const auto best = std::min_element(values.begin(), values.end()) - values.begin();
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

}  // namespace lingate
