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

#include "lingate/family.hpp"

#include <random>

#include "doctest.h"
#include "lingate/gates.hpp"
#include "test_support.hpp"

using namespace lingate;
using lingate::testing::load_matrix;
using lingate::testing::max_abs;

namespace {

FamilyParams random_params(std::mt19937_64& rng, Branch branch, bool with_scales) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> s(-1.0, 1.0);
  FamilyParams p;
  p.v14 = {u(rng), u(rng)};
  p.v23 = {u(rng), u(rng)};
  p.v34 = {u(rng), u(rng)};
  p.l1 = {u(rng), u(rng)};
  p.phase = std::polar(1.0, angle(rng));
  p.branch = branch;
  if (with_scales) {
    for (double& x : p.log_scales) x = s(rng);
  }
  return p;
}

}  // namespace

TEST_CASE("random family members satisfy the CS conditions") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const FamilyParams p = random_params(rng, trial % 2 ? Branch::minus : Branch::plus, true);
    const CMatrix v = build_v(p);
    const auto report = verify_cs(v, std::arg(p.phase), 1e-8);
    CHECK(report.passed);
    CHECK(report.max_constraint_residual <= 1e-8);
  }
}

TEST_CASE("reference amplitude at zero scales") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const FamilyParams p = random_params(rng, trial % 2 ? Branch::minus : Branch::plus, false);
    CHECK(std::abs(cs_reference_amplitude(family_matrix(p)) - (1.0 + p.v34)) < 1e-10);
  }
}

TEST_CASE("standardized entries are fixed to one") {
  std::mt19937_64 rng(33);
  const FamilyParams p = random_params(rng, Branch::plus, false);
  const CMatrix v = family_matrix(p);
  for (auto [r, c] : {std::pair{0, 2}, {1, 3}, {2, 2}, {3, 3}, {3, 2}}) CHECK(std::abs(v(r, c) - 1.0) < 1e-15);
  CHECK(v(0, 3) == p.v14);
  CHECK(v(1, 2) == p.v23);
  CHECK(v(2, 3) == p.v34);
}

TEST_CASE("degenerate parameters are rejected") {
  FamilyParams p;
  p.v14 = 0.3;
  p.v23 = 0.7;
  for (Complex bad : {Complex(0.0), Complex(1.0)}) {
    p.v34 = bad;
    CHECK_THROWS_AS(family_matrix(p), DegenerateParameters);
  }
  p.v34 = 0.5;
  p.v14 = 2.0;
  p.v23 = 0.5;  // v23 * v14 = 1
  CHECK_THROWS_AS(family_matrix(p), DegenerateParameters);
}

TEST_CASE("branches give different matrices with the same constraints") {
  std::mt19937_64 rng(34);
  FamilyParams p = random_params(rng, Branch::plus, false);
  const CMatrix a = build_v(p);
  p.branch = Branch::minus;
  const CMatrix b = build_v(p);
  CHECK(max_abs(a - b) > 1e-6);
}

TEST_CASE("scalings preserve the CS conditions and scale the reference amplitude") {
  std::mt19937_64 rng(35);
  const CMatrix v = load_matrix("v180.json");
  const std::array<double, 6> s{0.3, -0.7, 0.2, 0.5, -0.4, 0.9};
  const CMatrix w = apply_scalings(v, s);
  CHECK(verify_cs(w, kPi, 1e-10).passed);
  // alpha_0000 involves rows and columns 3, 4 once each.
  const double factor = std::exp(s[0] + s[1] + s[2] + s[3]);
  CHECK(std::abs(cs_reference_amplitude(w) - factor * cs_reference_amplitude(v)) < 1e-12);
}

TEST_CASE("standardizing the closed-form 180 degree matrix") {
  const CMatrix v = load_matrix("v180.json");
  const auto coords = standardize(v);
  CHECK(coords.mismatch < 1e-12);
  CHECK(coords.params.branch == Branch::plus);
  CHECK(std::abs(coords.params.v14 - (std::sqrt(6.0) - 2.0)) < 1e-12);
  CHECK(std::abs(coords.params.l1 + 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(coords.params.phase + 1.0) < 1e-12);
  const CMatrix back =
      coords.row_factors.asDiagonal() * family_matrix(coords.params) * coords.col_factors.asDiagonal();
  CHECK(max_abs(back - v) < 1e-12);
}

TEST_CASE("standardize inverts family_matrix") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 10; ++trial) {
    const FamilyParams p = random_params(rng, trial % 2 ? Branch::minus : Branch::plus, true);
    const CMatrix v = family_matrix(p);
    const auto coords = standardize(v);
    CHECK(coords.mismatch < 1e-8);
    const CMatrix back =
        coords.row_factors.asDiagonal() * family_matrix(coords.params) * coords.col_factors.asDiagonal();
    CHECK(max_abs(back - v) < 1e-8 * (1.0 + max_abs(v)));
    CHECK(std::abs(coords.params.phase - p.phase) < 1e-8);
  }
}

TEST_CASE("standardize needs the pivot entries") {
  CHECK_THROWS_AS(standardize(CMatrix::Identity(4, 4)), DegenerateParameters);
  CHECK_THROWS_AS(standardize(CMatrix::Identity(3, 3)), DimensionMismatch);
}
