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

#include "lingate/bounds.hpp"

#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace lingate;

namespace {

ProductState random_product(int factors, int modes, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ProductState ps;
  for (int k = 0; k < factors; ++k) {
    LinearForm f;
    f.constant = {n(rng), n(rng)};
    f.coeffs = lingate::testing::random_gaussian(modes, 1, rng).col(0);
    ps.factors.push_back(std::move(f));
  }
  return ps;
}

Complex get(const FockAmplitudes& amps, const FockState& s) {
  auto it = amps.find(s);
  return it == amps.end() ? Complex(0.0) : it->second;
}

// <gamma| applied to one mode of an expanded state, term by term:
// <gamma|k> = exp(-|gamma|^2/2) conj(gamma)^k / sqrt(k!).
FockAmplitudes contract_coherent(const FockAmplitudes& amps, int mode, Complex gamma) {
  FockAmplitudes out;
  for (const auto& [state, a] : amps) {
    const int k = state[mode];
    std::vector<int> rest;
    for (int j = 0; j < state.modes(); ++j) {
      if (j != mode) rest.push_back(state[j]);
    }
    out[FockState(rest)] +=
        a * std::exp(-0.5 * std::norm(gamma)) * std::pow(std::conj(gamma), k) / std::sqrt(factorial(k));
  }
  return out;
}

}  // namespace

TEST_CASE("expansion of simple product states") {
  auto one = ProductState::from_rows({{1.0, 0.0, 0.0}});
  auto amps = expand_state(one, 1);
  CHECK(amps.size() == 1);
  CHECK(std::abs(get(amps, {1, 0, 0}) - 1.0) < 1e-15);

  auto twice = ProductState::from_rows({{1.0, 0.0}, {1.0, 0.0}});
  CHECK(std::abs(get(expand_state(twice, 2), {2, 0}) - std::sqrt(2.0)) < 1e-15);

  auto bell_like = ProductState::from_rows({{1.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 1.0}});
  bell_like.prefactor = 0.5;
  amps = expand_state(bell_like, 2);
  CHECK(amps.size() == 4);
  for (FockState s : {FockState{1, 1, 0, 0}, FockState{1, 0, 0, 1}, FockState{0, 1, 1, 0}, FockState{0, 0, 1, 1}}) {
    CHECK(std::abs(get(amps, s) - 0.5) < 1e-15);
  }
  CHECK(std::abs(state_norm(amps) - 1.0) < 1e-15);
}

TEST_CASE("expansion argument checks") {
  auto twice = ProductState::from_rows({{1.0, 0.0}, {1.0, 0.0}});
  CHECK_THROWS_AS(expand_state(twice, 1), std::invalid_argument);
  CHECK_THROWS_AS(expand_state(ProductState{}, 3), InvalidState);
  auto ragged = ProductState::from_rows({{1.0, 0.0}, {1.0, 0.0, 0.0}});
  CHECK_THROWS_AS(expand_state(ragged, 2), DimensionMismatch);
}

TEST_CASE("coherent projection examples") {
  std::mt19937_64 rng(51);
  const ProductState ps = random_product(2, 3, rng);
  const ProductState vac = coherent_project(ps, 1, 0.0);
  REQUIRE(vac.modes() == 2);
  for (int k = 0; k < 2; ++k) {
    CHECK(vac.factors[k].constant == ps.factors[k].constant);
    CHECK(vac.factors[k].coeffs(0) == ps.factors[k].coeffs(0));
    CHECK(vac.factors[k].coeffs(1) == ps.factors[k].coeffs(2));
  }

  const Complex gamma(0.6, -1.1);
  const ProductState single = coherent_project(ProductState::from_rows({{0.0, 1.0}}), 1, gamma);
  CHECK(std::abs(single.factors[0].constant - std::conj(gamma)) < 1e-15);
  CHECK(std::abs(single.prefactor - std::exp(-0.5 * std::norm(gamma))) < 1e-15);
  CHECK_THROWS_AS(coherent_project(ps, 3, gamma), std::out_of_range);
}

TEST_CASE("projecting then expanding equals expanding then contracting") {
  std::mt19937_64 rng(52);
  std::normal_distribution<double> n(0.0, 0.8);
  for (int factors = 1; factors <= 3; ++factors) {
    for (int trial = 0; trial < 4; ++trial) {
      const ProductState ps = random_product(factors, 3, rng);
      const Complex gamma(n(rng), n(rng));
      const int mode = trial % 3;
      const auto lhs = expand_state(coherent_project(ps, mode, gamma), factors);
      const auto rhs = contract_coherent(expand_state(ps, factors), mode, gamma);
      for (const auto& [s, a] : rhs) CHECK(std::abs(get(lhs, s) - a) < 1e-10);
      for (const auto& [s, a] : lhs) CHECK(std::abs(get(rhs, s) - a) < 1e-10);
    }
  }
}

TEST_CASE("Bell overlap examples") {
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(bell_overlap(ProductState::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}})) - r) < 1e-12);
  CHECK(std::abs(bell_overlap(ProductState::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}})) - r) < 1e-12);
  CHECK(bell_overlap(ProductState::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}})) < 1e-15);
  CHECK(bell_overlap(ProductState::from_rows({{1, 0, 0, 0}, {1, 0, 0, 0}})) < 1e-15);
  CHECK_THROWS_AS(bell_overlap(ProductState::from_rows({{0, 0, 0, 0}, {0, 1, 0, 0}})), InvalidState);
  CHECK_THROWS_AS(bell_overlap(ProductState::from_rows({{1, 0, 0}, {0, 1, 0}})), DimensionMismatch);
}

TEST_CASE("Bell overlap ignores factor scaling") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    ProductState ps = random_product(2, 4, rng);
    const double before = bell_overlap(ps);
    ps.factors[0].constant *= Complex(-2.0, 0.5);
    ps.factors[0].coeffs *= Complex(-2.0, 0.5);
    ps.factors[1].constant *= Complex(0.0, 3.0);
    ps.factors[1].coeffs *= Complex(0.0, 3.0);
    CHECK(std::abs(bell_overlap(ps) - before) < 1e-12);
  }
}

TEST_CASE("maximized Bell overlap reaches but does not exceed the factorable bound") {
  SearchConfig c;
  c.restarts = 30;
  c.seed = 42;
  const auto r = maximize_bell_overlap(c);
  CHECK(r.overlap >= 0.70710);
  CHECK(r.overlap < 0.99);
  CHECK(std::abs(bell_overlap(r.best) - r.overlap) < 1e-15);
  CHECK(r.history.size() == 30);
}

TEST_CASE("coherent mixture reproduces the partial trace") {
  std::mt19937_64 rng(54);
  for (int factors = 1; factors <= 3; ++factors) {
    const ProductState ps = random_product(factors, 3, rng);
    for (int mode = 0; mode < 3; ++mode) {
      const auto exact = partial_trace(ps, mode, 4);
      const auto mixture = coherent_mixture(ps, mode, 4);
      CHECK(exact.basis == mixture.basis);
      CHECK(std::abs(exact.rho.trace() - 1.0) < 1e-12);
      CHECK(trace_distance(exact.rho, mixture.rho) <= 1e-6);
    }
  }
}

TEST_CASE("partial trace of a product of independent modes is pure") {
  // c†_0 c†_1 traced over mode 1 leaves |1> on mode 0.
  const auto d = partial_trace(ProductState::from_rows({{1, 0}, {0, 1}}), 1, 2);
  const auto idx = std::find(d.basis.begin(), d.basis.end(), FockState{1}) - d.basis.begin();
  CHECK(std::abs(d.rho(idx, idx) - 1.0) < 1e-15);
  CHECK(std::abs(d.rho.trace() - 1.0) < 1e-15);
}

TEST_CASE("Gauss-Legendre rule") {
  const auto [x, w] = gauss_legendre(5, 0.0, 2.0);
  // Exact for polynomials up to degree 9.
  double s = 0.0, s9 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += w[i];
    s9 += w[i] * std::pow(x[i], 9);
  }
  CHECK(std::abs(s - 2.0) < 1e-13);
  CHECK(std::abs(s9 - 102.4) < 1e-10);
  CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("trace distance") {
  CMatrix a = CMatrix::Zero(2, 2), b = CMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  b(1, 1) = 1.0;
  CHECK(std::abs(trace_distance(a, b) - 1.0) < 1e-15);
  CHECK(trace_distance(a, a) == 0.0);
  CHECK(truncated_basis(2, 2).size() == 6);
}
