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

#include <cmath>
#include <limits>

#include "doctest.h"

using namespace lingate;

TEST_CASE("minimizes a quadratic bowl") {
  auto f = [](std::span<const double> x) { return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0); };
  const auto r = nelder_mead(f, {0.0, 0.0}, {});
  CHECK(std::abs(r.x[0] - 1.0) < 1e-6);
  CHECK(std::abs(r.x[1] + 2.0) < 1e-6);
  CHECK(r.value < 1e-11);
}

TEST_CASE("minimizes the Rosenbrock valley") {
  auto f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions options;
  options.initial_step = 0.5;
  const auto r = nelder_mead(f, {-1.2, 1.0}, options);
  CHECK(std::abs(r.x[0] - 1.0) < 1e-5);
  CHECK(std::abs(r.x[1] - 1.0) < 1e-5);
}

TEST_CASE("handles higher dimensions") {
  auto f = [](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i + 1.0) * x[i] * x[i];
    return s;
  };
  const auto r = nelder_mead(f, std::vector<double>(12, 1.0), {});
  CHECK(r.value < 1e-8);
}

TEST_CASE("respects the evaluation budget") {
  int calls = 0;
  auto f = [&](std::span<const double> x) {
    ++calls;
    return x[0] * x[0] + x[1] * x[1];
  };
  NelderMeadOptions options;
  options.max_evaluations = 25;
  const auto r = nelder_mead(f, {3.0, 3.0}, options);
  CHECK(calls == r.evaluations);
  CHECK(r.evaluations <= 25);
  options.max_evaluations = 0;
  const auto z = nelder_mead(f, {3.0, 4.0}, options);
  CHECK(z.x == std::vector<double>{3.0, 4.0});
  CHECK(z.value == 25.0);
}

TEST_CASE("non-finite values act as walls") {
  auto f = [](std::span<const double> x) {
    if (x[0] < 0.5) return std::numeric_limits<double>::quiet_NaN();
    return (x[0] - 1.0) * (x[0] - 1.0);
  };
  const auto r = nelder_mead(f, {2.0}, {});
  CHECK(std::abs(r.x[0] - 1.0) < 1e-5);
}
