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

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace lingate {

struct NelderMeadOptions {
  int max_evaluations = 20000;
  double initial_step = 0.25;
  /// Stop when the simplex spread in value and in every coordinate falls
  /// below these.
  double f_tol = 1e-13;
  double x_tol = 1e-10;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes `f` with the adaptive-coefficient Nelder-Mead simplex method.
/// Non-finite objective values are treated as +infinity.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, const NelderMeadOptions& options);

}  // namespace lingate
