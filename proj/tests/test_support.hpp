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

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lingate/common.hpp"
#include "lingate/fock.hpp"
#include "lingate/io.hpp"

namespace lingate::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(LINGATE_DATA_DIR) / name;
}

inline CMatrix load_matrix(const std::string& name) { return matrix_from_json(read_json_file(data_path(name))); }

inline CMatrix random_gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix a(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a(r, c) = Complex(n(rng), n(rng));
  }
  return a;
}

/// Haar-distributed unitary: QR of a Gaussian matrix with the phases of R's
/// diagonal moved into Q.
inline CMatrix random_unitary(int m, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_gaussian(m, m, rng));
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR();
  for (int k = 0; k < m; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

/// Random matrix with largest singular value `top` < 1.
inline CMatrix random_contraction(int m, std::mt19937_64& rng, double top = 0.9) {
  const CMatrix a = random_gaussian(m, m, rng);
  Eigen::JacobiSVD<CMatrix> svd(a);
  return a * (top / svd.singularValues()(0));
}

/// Permanent straight from the definition: a sum over all permutations.
inline Complex naive_permanent(const CMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex sum = 0.0;
  do {
    Complex term = 1.0;
    for (int i = 0; i < n; ++i) term *= a(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? Complex(1.0) : sum;
}

/// Amplitude from the permanent of the repeated-row/column submatrix, with
/// the row index taken as the output mode.
inline Complex permanent_oracle(const CMatrix& u, const FockState& in, const FockState& out) {
  if (in.photons() != out.photons()) return 0.0;
  std::vector<int> rows, cols;
  double norm = 1.0;
  for (int k = 0; k < in.modes(); ++k) {
    for (int i = 0; i < in[k]; ++i) cols.push_back(k);
    for (int i = 0; i < out[k]; ++i) rows.push_back(k);
    norm *= factorial(in[k]) * factorial(out[k]);
  }
  const int n = static_cast<int>(rows.size());
  CMatrix sub(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sub(i, j) = u(rows[i], cols[j]);
  }
  return naive_permanent(sub) / std::sqrt(norm);
}

/// Random Fock state on `modes` modes with exactly `photons` photons.
inline FockState random_state(int modes, int photons, std::mt19937_64& rng) {
  std::vector<int> occ(modes, 0);
  std::uniform_int_distribution<int> pick(0, modes - 1);
  for (int i = 0; i < photons; ++i) ++occ[pick(rng)];
  return FockState(std::move(occ));
}

inline double max_abs(const CMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace lingate::testing
