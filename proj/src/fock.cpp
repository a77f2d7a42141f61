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

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace lingate {

FockState::FockState(std::vector<int> occupations) : occupations_(std::move(occupations)) {
  for (int k : occupations_) {
    if (k < 0) throw InvalidState("negative mode occupation in Fock state");
  }
}

FockState::FockState(std::initializer_list<int> occupations)
    : FockState(std::vector<int>(occupations)) {}

FockState FockState::vacuum(int modes) { return FockState(std::vector<int>(modes, 0)); }

int FockState::photons() const { return std::accumulate(occupations_.begin(), occupations_.end(), 0); }

std::string FockState::str() const {
  std::ostringstream out;
  out << '|';
  for (std::size_t i = 0; i < occupations_.size(); ++i) {
    if (i) out << ',';
    out << occupations_[i];
  }
  out << '>';
  return out.str();
}

ModeTransform::ModeTransform(CMatrix u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols()) throw DimensionMismatch("mode transform must be square");
}

ModeTransform ModeTransform::identity(int modes) { return ModeTransform(CMatrix::Identity(modes, modes)); }

double ModeTransform::unitarity_residual() const {
  const CMatrix defect = u_.adjoint() * u_ - CMatrix::Identity(modes(), modes());
  return defect.size() == 0 ? 0.0 : defect.cwiseAbs().maxCoeff();
}

ModeTransform ModeTransform::operator*(const ModeTransform& rhs) const {
  if (modes() != rhs.modes()) throw DimensionMismatch("composing transforms of different mode counts");
  return ModeTransform(u_ * rhs.u_);
}

MonomialPolynomial::MonomialPolynomial(int modes) : modes_(modes) {
  terms_.emplace(Exponents(modes, 0), Complex(1.0));
}

Complex MonomialPolynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void MonomialPolynomial::multiply_linear(Complex constant, const CVector& coeffs, const Exponents* cap) {
  if (coeffs.size() != modes_) throw DimensionMismatch("linear factor has wrong number of modes");
  std::map<Exponents, Complex> next;
  for (const auto& [exponents, c] : terms_) {
    if (constant != 0.0) next[exponents] += c * constant;
    for (int r = 0; r < modes_; ++r) {
      if (coeffs[r] == 0.0) continue;
      if (cap && exponents[r] + 1 > (*cap)[r]) continue;
      Exponents raised = exponents;
      ++raised[r];
      next[raised] += c * coeffs[r];
    }
  }
  terms_ = std::move(next);
}

void MonomialPolynomial::prune() {
  std::erase_if(terms_, [](const auto& term) { return term.second == 0.0; });
}

namespace {

MonomialPolynomial expand_capped(std::span<const CVector> columns, std::span<const int> multiplicities,
                                 const MonomialPolynomial::Exponents* cap) {
  if (columns.size() != multiplicities.size()) {
    throw DimensionMismatch("one multiplicity per column required");
  }
  const int m = columns.empty() ? (cap ? static_cast<int>(cap->size()) : 0)
                                : static_cast<int>(columns.front().size());
  for (const auto& column : columns) {
    if (column.size() != m) throw DimensionMismatch("columns differ in length");
  }
  MonomialPolynomial poly(m);
  for (std::size_t s = 0; s < columns.size(); ++s) {
    if (multiplicities[s] < 0) throw InvalidState("negative multiplicity");
    for (int k = 0; k < multiplicities[s]; ++k) poly.multiply_linear(0.0, columns[s], cap);
  }
  poly.prune();
  return poly;
}

std::vector<CVector> columns_of(const CMatrix& u) {
  std::vector<CVector> columns;
  columns.reserve(u.cols());
  for (Eigen::Index r = 0; r < u.cols(); ++r) columns.emplace_back(u.col(r));
  return columns;
}

double factorial_weight(const FockState& state) {
  double w = 1.0;
  for (int k : state.occupations()) w *= factorial(k);
  return w;
}

}  // namespace

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

MonomialPolynomial expand_product(std::span<const CVector> columns, std::span<const int> multiplicities) {
  return expand_capped(columns, multiplicities, nullptr);
}

MonomialPolynomial expand_product(const CMatrix& u, const FockState& input) {
  if (u.cols() != input.modes()) throw DimensionMismatch("input state does not match transform size");
  const auto columns = columns_of(u);
  return expand_capped(columns, input.occupations(), nullptr);
}

Complex amplitude(const ModeTransform& u, const FockState& input, const FockState& output) {
  if (input.modes() != u.modes() || output.modes() != u.modes()) {
    throw DimensionMismatch("Fock state size does not match transform");
  }
  if (input.photons() != output.photons()) return 0.0;
  const auto columns = columns_of(u.matrix());
  const auto poly = expand_capped(columns, input.occupations(), &output.occupations());
  const Complex beta = poly.coefficient(output.occupations());
  return beta * std::sqrt(factorial_weight(output) / factorial_weight(input));
}

Complex permanent(const CMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("permanent of a non-square matrix");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 1.0;
  if (n > 62) throw CutoffExceeded("permanent size too large");

  // per(A) = sum over nonempty column subsets S of (-1)^(n-|S|) prod_i sum_{j in S} a_ij
  std::vector<Complex> row_sums(n, 0.0);
  Complex total = 0.0;
  std::uint64_t previous = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t flipped = gray ^ previous;
    const int j = std::countr_zero(flipped);
    const double sign_in = (gray & flipped) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) row_sums[i] += sign_in * a(i, j);
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= row_sums[i];
    total += ((n - std::popcount(gray)) % 2 == 0) ? prod : -prod;
    previous = gray;
  }
  return total;
}

Complex amplitude_permanent(const ModeTransform& u, const FockState& input, const FockState& output,
                            int photon_cutoff) {
  if (input.modes() != u.modes() || output.modes() != u.modes()) {
    throw DimensionMismatch("Fock state size does not match transform");
  }
  if (input.photons() != output.photons()) return 0.0;
  const int n = input.photons();
  if (n > photon_cutoff) throw CutoffExceeded("photon number exceeds permanent cutoff");

  std::vector<int> rows, cols;
  for (int t = 0; t < output.modes(); ++t) rows.insert(rows.end(), output[t], t);
  for (int s = 0; s < input.modes(); ++s) cols.insert(cols.end(), input[s], s);
  CMatrix sub(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sub(i, j) = u(rows[i], cols[j]);
  }
  return permanent(sub) / std::sqrt(factorial_weight(input) * factorial_weight(output));
}

std::vector<FockState> sector_states(int modes, int photons) {
  std::vector<FockState> states;
  if (modes < 0 || photons < 0) return states;
  if (modes == 0) {
    if (photons == 0) states.emplace_back(std::vector<int>{});
    return states;
  }
  std::vector<int> occ(modes, 0);
  auto fill = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == modes - 1) {
      occ[mode] = remaining;
      states.emplace_back(occ);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      occ[mode] = k;
      self(self, mode + 1, remaining - k);
    }
  };
  fill(fill, 0, photons);
  return states;
}

std::map<FockState, double> output_distribution(const ModeTransform& u, const FockState& input,
                                                double unitarity_tol) {
  if (input.modes() != u.modes()) throw DimensionMismatch("input state does not match transform size");
  if (!u.is_unitary(unitarity_tol)) throw NotUnitary("output distribution requires a unitary transform");
  const auto poly = expand_product(u.matrix(), input);
  const double input_weight = factorial_weight(input);
  std::map<FockState, double> distribution;
  for (const auto& state : sector_states(u.modes(), input.photons())) {
    const Complex beta = poly.coefficient(state.occupations());
    distribution[state] = std::norm(beta) * factorial_weight(state) / input_weight;
  }
  return distribution;
}

CMatrix sector_matrix(const ModeTransform& u, int photons) {
  const auto states = sector_states(u.modes(), photons);
  const auto dim = static_cast<Eigen::Index>(states.size());
  CMatrix induced(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto poly = expand_product(u.matrix(), states[j]);
    const double in_weight = factorial_weight(states[j]);
    for (Eigen::Index i = 0; i < dim; ++i) {
      induced(i, j) = poly.coefficient(states[i].occupations()) *
                      std::sqrt(factorial_weight(states[i]) / in_weight);
    }
  }
  return induced;
}

}  // namespace lingate
