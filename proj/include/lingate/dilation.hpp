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

#include "lingate/fock.hpp"

namespace lingate {

/// Operator 2-norm: square root of the largest eigenvalue of V†V.
double max_singular_value(const CMatrix& v);

/// Hermitian PSD square root of I - V†V via eigendecomposition. Eigenvalues
/// in [-1e-12, 0) are clamped to zero; anything more negative means V is not
/// a contraction and throws MaxSingularValueExceeded.
CMatrix defect_sqrt(const CMatrix& v);

struct DilationResult {
  ModeTransform unitary;
  int extra_modes = 0;
  /// Largest singular value of the input.
  double lambda = 0.0;
  /// max |block - V| after snapping near-unit singular values to one.
  double block_deviation = 0.0;
};

/// Extends a contraction V (k x k) to a unitary whose upper-left k x k block
/// is V. The first k columns are X = [V; (I - V†V)^{1/2}]; the remaining
/// columns span the orthogonal complement, found by column-pivoted
/// Gram-Schmidt on I - X X† (largest residual first, lowest index on ties).
///
/// Singular values within `unit_tol` of one are treated as exactly one; each
/// one saves an extra mode, so k - s extra modes are used in total. Singular
/// values above 1 + unit_tol throw MaxSingularValueExceeded.
DilationResult dilate(const CMatrix& v, double unit_tol = 1e-10);

/// diag(I_2, V): the two leading modes are the right modes of the qubit pair.
CMatrix embed_block(const CMatrix& v);

struct EmbeddedGate {
  CMatrix v_e;
  double lambda = 0.0;  // largest singular value of V
  double scale = 1.0;   // largest singular value of diag(I, V) = max(1, lambda)
  double theta = 0.0;   // conditional phase realized by V
  double success_probability = 0.0;
};

/// Qubit-pair embedding V_e = diag(I, V) / scale of a CS-satisfying 4x4 V.
/// Every logical amplitude is alpha(V) / scale^4, so the gate succeeds with
/// |alpha_0000|^2 / scale^8. Throws ConstraintResidualTooLarge when V does
/// not realize a conditional phase within `tol`.
EmbeddedGate embed_rescaled(const CMatrix& v, double tol = 1e-8);

}  // namespace lingate
