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

#include <compare>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lingate/common.hpp"

namespace lingate {

/// Occupation-number basis state over m bosonic modes.
class FockState {
 public:
  FockState() = default;
  explicit FockState(std::vector<int> occupations);
  FockState(std::initializer_list<int> occupations);

  static FockState vacuum(int modes);

  int modes() const { return static_cast<int>(occupations_.size()); }
  int photons() const;
  int operator[](std::size_t mode) const { return occupations_[mode]; }
  const std::vector<int>& occupations() const { return occupations_; }

  std::string str() const;

  auto operator<=>(const FockState&) const = default;

 private:
  std::vector<int> occupations_;
};

/// Square matrix acting on creation operators:
/// c†_r -> sum_s u(s, r) c†_s, so column r is the image of mode r.
class ModeTransform {
 public:
  explicit ModeTransform(CMatrix u);

  static ModeTransform identity(int modes);

  int modes() const { return static_cast<int>(u_.rows()); }
  const CMatrix& matrix() const { return u_; }
  Complex operator()(int s, int r) const { return u_(s, r); }

  /// max_ij |(U†U - I)_ij|
  double unitarity_residual() const;
  bool is_unitary(double tol) const { return unitarity_residual() <= tol; }

  ModeTransform operator*(const ModeTransform& rhs) const;

 private:
  CMatrix u_;
};

/// Sparse polynomial in commuting creation operators, keyed by exponent vector.
class MonomialPolynomial {
 public:
  using Exponents = std::vector<int>;

  /// The constant polynomial 1 over `modes` variables.
  explicit MonomialPolynomial(int modes);

  int modes() const { return modes_; }
  const std::map<Exponents, Complex>& terms() const { return terms_; }
  Complex coefficient(const Exponents& exponents) const;

  /// Multiplies in place by (constant + sum_r coeffs[r] c†_r). Monomials whose
  /// exponents would exceed `cap` (when given) are dropped; they cannot
  /// contribute to any coefficient at or below the cap.
  void multiply_linear(Complex constant, const CVector& coeffs, const Exponents* cap = nullptr);

  /// Removes exactly-zero coefficients.
  void prune();

 private:
  int modes_;
  std::map<Exponents, Complex> terms_;
};

/// P = prod_s p_s^{d_s}, with p_s = sum_r columns[s][r] c†_r.
MonomialPolynomial expand_product(std::span<const CVector> columns, std::span<const int> multiplicities);

/// Same as above using the columns of `u` and the occupations of `input`.
MonomialPolynomial expand_product(const CMatrix& u, const FockState& input);

/// <output| U |input> on normalized Fock states, from the coefficient of the
/// output monomial in prod_s p_s^{d_s}, weighted by sqrt(prod m_t! / prod d_s!).
Complex amplitude(const ModeTransform& u, const FockState& input, const FockState& output);

/// Ryser permanent with Gray-code subset enumeration. Empty matrix -> 1.
Complex permanent(const CMatrix& a);

/// Independent route: per(U[out, in]) / sqrt(prod d_s! prod m_t!) with rows
/// and columns repeated by occupation.
Complex amplitude_permanent(const ModeTransform& u, const FockState& input, const FockState& output,
                            int photon_cutoff = 10);

/// All Fock states of `modes` modes holding exactly `photons` photons, in
/// lexicographically descending order of occupations.
std::vector<FockState> sector_states(int modes, int photons);

/// Output probabilities over the whole fixed-photon-number sector.
std::map<FockState, double> output_distribution(const ModeTransform& u, const FockState& input,
                                                double unitarity_tol = 1e-10);

/// Matrix of the induced map on the n-photon sector, indexed by sector_states.
CMatrix sector_matrix(const ModeTransform& u, int photons);

double factorial(int n);

}  // namespace lingate
