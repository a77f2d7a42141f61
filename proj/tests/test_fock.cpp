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

#include "lingate/fock.hpp"

#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace lingate;
using lingate::testing::permanent_oracle;
using lingate::testing::random_state;
using lingate::testing::random_unitary;

namespace {

CMatrix balanced_splitter() {
  CMatrix u(2, 2);
  u << 1.0, 1.0, 1.0, -1.0;
  return u / std::sqrt(2.0);
}

}  // namespace

TEST_CASE("fock state basics") {
  const FockState s{1, 0, 2};
  CHECK(s.modes() == 3);
  CHECK(s.photons() == 3);
  CHECK(s[2] == 2);
  CHECK(s.str() == "|1,0,2>");
  CHECK(FockState::vacuum(4).photons() == 0);
  CHECK_THROWS_AS(FockState({1, -1}), InvalidState);
}

TEST_CASE("mode transform rejects non-square matrices") {
  CHECK_THROWS_AS(ModeTransform(CMatrix::Zero(2, 3)), DimensionMismatch);
  CHECK(ModeTransform::identity(3).is_unitary(1e-15));
}

TEST_CASE("identity transform maps every state to itself") {
  const auto id = ModeTransform::identity(3);
  for (const auto& in : sector_states(3, 3)) {
    for (const auto& out : sector_states(3, 3)) {
      CHECK(std::abs(amplitude(id, in, out) - (in == out ? 1.0 : 0.0)) < 1e-15);
    }
  }
}

TEST_CASE("two-photon interference on a balanced splitter") {
  const ModeTransform bs(balanced_splitter());
  CHECK(std::abs(amplitude(bs, {1, 1}, {1, 1})) < 1e-15);
  CHECK(std::abs(std::abs(amplitude(bs, {1, 1}, {2, 0})) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(std::abs(amplitude(bs, {1, 1}, {0, 2})) - 1.0 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("amplitude follows the column convention") {
  // Column r holds the image of c†_r: a photon in mode 0 goes to mode 1 here.
  CMatrix u = CMatrix::Zero(2, 2);
  u(1, 0) = 1.0;
  u(0, 1) = 1.0;
  const ModeTransform swap(u);
  CHECK(std::abs(amplitude(swap, {1, 0}, {0, 1}) - 1.0) < 1e-15);
  CMatrix t = CMatrix::Zero(2, 2);
  t(1, 0) = 1.0;  // only c†_0 -> c†_1
  t(1, 1) = 1.0;
  CHECK(std::abs(amplitude(ModeTransform(t), {1, 0}, {0, 1}) - 1.0) < 1e-15);
  CHECK(std::abs(amplitude(ModeTransform(t), {0, 1}, {1, 0})) < 1e-15);
}

TEST_CASE("photon number is conserved") {
  std::mt19937_64 rng(1);
  const ModeTransform u(random_unitary(3, rng));
  CHECK(amplitude(u, {1, 1, 0}, {1, 0, 0}) == Complex(0.0));
  CHECK_THROWS_AS(amplitude(u, {1, 1}, {1, 1}), DimensionMismatch);
}

TEST_CASE("ryser permanent matches the permutation sum") {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 6; ++n) {
    const CMatrix a = lingate::testing::random_gaussian(n, n, rng);
    CHECK(std::abs(permanent(a) - lingate::testing::naive_permanent(a)) < 1e-10);
  }
  CHECK(permanent(CMatrix(0, 0)) == Complex(1.0));
}

TEST_CASE("expansion amplitudes agree with the permanent oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + trial % 4;
    const int n = trial % 5;
    const ModeTransform u(random_unitary(m, rng));
    const FockState in = random_state(m, n, rng);
    for (const auto& out : sector_states(m, n)) {
      const Complex expected = permanent_oracle(u.matrix(), in, out);
      CHECK(std::abs(amplitude(u, in, out) - expected) < 1e-12);
      CHECK(std::abs(amplitude_permanent(u, in, out) - expected) < 1e-12);
    }
  }
}

TEST_CASE("permanent route enforces the photon cutoff") {
  const auto id = ModeTransform::identity(2);
  CHECK_THROWS_AS(amplitude_permanent(id, {3, 2}, {3, 2}, 4), CutoffExceeded);
  CHECK(std::abs(amplitude_permanent(id, {3, 2}, {3, 2}, 5) - 1.0) < 1e-15);
}

TEST_CASE("sector enumeration") {
  CHECK(sector_states(4, 2).size() == 10);
  CHECK(sector_states(3, 0).size() == 1);
  const auto states = sector_states(2, 2);
  REQUIRE(states.size() == 3);
  CHECK(states[0] == FockState{2, 0});
  CHECK(states[2] == FockState{0, 2});
}

TEST_CASE("output distributions of unitaries are normalized") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const ModeTransform u(random_unitary(3, rng));
    for (const auto& in : sector_states(3, 3)) {
      double total = 0.0;
      for (const auto& [out, p] : output_distribution(u, in)) total += p;
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
  }
  CHECK_THROWS_AS(output_distribution(ModeTransform(2.0 * CMatrix::Identity(2, 2)), {1, 0}), NotUnitary);
}

TEST_CASE("sector matrices are unitary and compose") {
  std::mt19937_64 rng(5);
  const ModeTransform u(random_unitary(3, rng));
  const ModeTransform w(random_unitary(3, rng));
  const CMatrix su = sector_matrix(u, 2);
  const CMatrix sw = sector_matrix(w, 2);
  CHECK(lingate::testing::max_abs(su.adjoint() * su - CMatrix::Identity(su.rows(), su.cols())) < 1e-12);
  CHECK(lingate::testing::max_abs(sector_matrix(u * w, 2) - su * sw) < 1e-12);
}

TEST_CASE("polynomial expansion carries factorial weights") {
  // (c†_0)^2 has monomial coefficient 1, i.e. amplitude sqrt(2) on |2,0>.
  CVector col(2);
  col << 1.0, 0.0;
  const std::vector<CVector> cols{col};
  const std::vector<int> mult{2};
  const auto poly = expand_product(cols, mult);
  CHECK(std::abs(poly.coefficient({2, 0}) - 1.0) < 1e-15);
  CHECK(factorial(5) == 120.0);
}
