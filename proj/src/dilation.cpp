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

#include "lingate/dilation.hpp"

#include <algorithm>
#include <cmath>

#include "lingate/gates.hpp"

namespace lingate {

double max_singular_value(const CMatrix& v) {
  if (v.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(v);
  return svd.singularValues()(0);
}

CMatrix defect_sqrt(const CMatrix& v) {
  const auto k = v.cols();
  const CMatrix defect = CMatrix::Identity(k, k) - v.adjoint() * v;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(defect);
  Eigen::VectorXd mu = eig.eigenvalues();
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    if (mu(i) < -1e-12) throw MaxSingularValueExceeded("matrix is not a contraction");
    mu(i) = std::sqrt(std::max(mu(i), 0.0));
  }
  return eig.eigenvectors() * mu.asDiagonal() * eig.eigenvectors().adjoint();
}

namespace {

// Appends `count` orthonormal columns spanning the complement of span(x).
CMatrix complete_columns(const CMatrix& x, Eigen::Index count) {
  const auto n = x.rows();
  CMatrix basis(n, x.cols() + count);
  basis.leftCols(x.cols()) = x;
  Eigen::Index filled = x.cols();
  for (Eigen::Index step = 0; step < count; ++step) {
    const auto q = basis.leftCols(filled);
    double best = -1.0;
    CVector chosen;
    for (Eigen::Index j = 0; j < n; ++j) {
      CVector e = CVector::Unit(n, j);
      CVector residual = e - q * (q.adjoint() * e);
      const double norm = residual.norm();
      if (norm > best) {
        best = norm;
        chosen = std::move(residual);
      }
    }
    chosen /= chosen.norm();
    chosen -= q * (q.adjoint() * chosen);
    chosen /= chosen.norm();
    basis.col(filled++) = chosen;
  }
  return basis;
}

}  // namespace

DilationResult dilate(const CMatrix& v, double unit_tol) {
  if (v.rows() != v.cols()) throw DimensionMismatch("dilation expects a square matrix");
  const auto k = v.rows();
  Eigen::JacobiSVD<CMatrix> svd(v, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd sigma = svd.singularValues();
  const double lambda = k ? sigma(0) : 0.0;
  if (lambda > 1.0 + unit_tol) {
    throw MaxSingularValueExceeded("largest singular value exceeds one; rescale before dilating");
  }

  std::vector<Eigen::Index> defective;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (sigma(i) >= 1.0 - unit_tol) {
      sigma(i) = 1.0;
    } else {
      defective.push_back(i);
    }
  }
  const CMatrix block = svd.matrixU() * sigma.cast<Complex>().asDiagonal() * svd.matrixV().adjoint();
  const auto extra = static_cast<Eigen::Index>(defective.size());

  CMatrix lower;
  if (extra == k) {
    lower = defect_sqrt(block);
  } else {
    lower.resize(extra, k);
    for (Eigen::Index row = 0; row < extra; ++row) {
      const Eigen::Index i = defective[row];
      lower.row(row) = std::sqrt(1.0 - sigma(i) * sigma(i)) * svd.matrixV().col(i).adjoint();
    }
  }

  CMatrix x(k + extra, k);
  x.topRows(k) = block;
  x.bottomRows(extra) = lower;

  DilationResult result{ModeTransform(complete_columns(x, extra))};
  result.extra_modes = static_cast<int>(extra);
  result.lambda = lambda;
  result.block_deviation = k ? (block - v).cwiseAbs().maxCoeff() : 0.0;
  return result;
}

CMatrix embed_block(const CMatrix& v) {
  const auto k = v.rows();
  CMatrix out = CMatrix::Zero(k + 2, k + 2);
  out(0, 0) = 1.0;
  out(1, 1) = 1.0;
  out.bottomRightCorner(k, v.cols()) = v;
  return out;
}

EmbeddedGate embed_rescaled(const CMatrix& v, double tol) {
  if (v.rows() != 4 || v.cols() != 4) throw DimensionMismatch("embedding expects a 4x4 CS matrix");
  const CsAmplitudes alpha = cs_amplitudes(v);
  if (alpha.a0000 == 0.0) throw ConstraintResidualTooLarge("alpha_0000 vanishes; not a CS solution");
  const double theta = std::arg(alpha.a1111 / alpha.a0000);
  const VerificationReport report = verify_cs(v, theta, tol);
  if (!report.passed) throw ConstraintResidualTooLarge("matrix does not satisfy the CS amplitude conditions");

  EmbeddedGate gate;
  gate.lambda = report.max_singular_value;
  gate.scale = std::max(1.0, gate.lambda);
  gate.theta = theta;
  gate.v_e = embed_block(v) / gate.scale;
  gate.success_probability = std::norm(alpha.a0000) / std::pow(gate.scale, 8);
  return gate;
}

}  // namespace lingate
