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

#include <array>

#include "lingate/common.hpp"

namespace lingate {

/// Sign of the square root shared by the first two columns of the family.
/// `plus` is the sign pattern printed for the first solution of the
/// quadratic system; `minus` swaps the roles of columns 1 and 2.
enum class Branch { plus, minus };

/// Free variables of the closed-form CS solution family.
///
/// The standardized matrix fixes v13 = v24 = v33 = v44 = v43 = 1; the
/// remaining free entries are v14, v23, v34 plus the split l1 of the product
/// l1*l2, which the conditional phase pins down. `log_scales` then undo the
/// standardization: {row 3, row 4, column 3, column 4, balanced pair 1,
/// balanced pair 2}. A balanced pair scales column j by e^s and row j by e^-s.
struct FamilyParams {
  Complex v14{0.0};
  Complex v23{0.0};
  Complex v34{0.0};
  Complex l1{1.0};
  Complex phase{-1.0};
  Branch branch = Branch::plus;
  std::array<double, 6> log_scales{};
};

/// l1*l2 from a1111 = phase * a0000. Throws DegenerateParameters when v34,
/// v34 - 1, v23*v14 - 1 or the shared denominator is within 1e-12 of zero.
Complex l1_times_l2(const FamilyParams& params);

/// Family member without the post-check. Scalings are applied.
CMatrix family_matrix(const FamilyParams& params);

/// Family member, checked against the CS conditions for theta = arg(phase)
/// at residual 1e-8; throws ConstraintResidualTooLarge otherwise.
CMatrix build_v(const FamilyParams& params);

/// D_row * V * D_col with the six symmetry scalings of the CS conditions.
CMatrix apply_scalings(const CMatrix& v, const std::array<double, 6>& log_scales);

/// Family coordinates of an explicit CS matrix:
/// v ~= diag(row_factors) * family_matrix(params) * diag(col_factors).
struct FamilyCoordinates {
  FamilyParams params;
  CVector row_factors;
  CVector col_factors;
  double mismatch = 0.0;
};

/// Inverse of family_matrix up to complex row/column scalings. Requires
/// nonzero v13, v24, v33, v43, v44 (the family cannot reach matrices where
/// any of these vanish). Picks the branch with the smaller mismatch.
FamilyCoordinates standardize(const CMatrix& v);

}  // namespace lingate
