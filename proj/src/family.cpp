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

#include <cmath>
#include <limits>

#include "lingate/gates.hpp"

namespace lingate {

namespace {

constexpr double kDegenerate = 1e-12;

void require_nonzero(Complex value, const char* what) {
  if (std::abs(value) <= kDegenerate) {
    throw DegenerateParameters(std::string("degenerate family parameters: ") + what + " vanishes");
  }
}

void validate(const FamilyParams& p) {
  if (std::abs(std::abs(p.phase) - 1.0) > 1e-12) throw std::invalid_argument("phase must have unit modulus");
  for (double s : p.log_scales) {
    if (!std::isfinite(s)) throw std::invalid_argument("log scales must be finite");
  }
}

// Shared denominator -1 - (2 + v23) v14 + v34 + v23 (2 + v14) v34.
Complex shared_denominator(Complex v14, Complex v23, Complex v34) {
  return -1.0 - (2.0 + v23) * v14 + v34 + v23 * (2.0 + v14) * v34;
}

// Coefficients of p1 - c1 (over l1) and p2 - c2 (over l2).
struct Slopes {
  std::array<Complex, 4> dp1;
  std::array<Complex, 4> dp2;
};

Slopes slopes(Complex v14, Complex v23, Complex v34, Branch branch) {
  const Complex d = shared_denominator(v14, v23, v34);
  const Complex vm = v34 - 1.0;
  const Complex vp = v34 + 1.0;

  const Complex t1 = v23 * vm * vm + 2.0 * vp;
  const Complex t2 = 2.0 * vm * vm * vp + 2.0 * v23 * v23 * vm * vm * v34 * vp +
                     v23 * (1.0 - 18.0 * v34 * v34 + std::pow(v34, 4));
  const Complex t3 = 1.0 + v34 * (-2.0 + v34 + 2.0 * v23 * vp);
  const Complex root = std::sqrt(v14 * v14 * t1 * t1 + 2.0 * v14 * t2 + t3 * t3);
  const double sign = branch == Branch::plus ? 1.0 : -1.0;

  const Complex v14s = v14 * v14;
  const Complex v34s = v34 * v34;
  const Complex v23s = v23 * v23;
  const Complex a1 = 1.0 + v14 + v23 * v14 - 2.0 * v14s - v23 * v14s - 2.0 * v34 + 2.0 * v23 * v34 -
                     4.0 * v14 * v34 + 4.0 * v23 * v14 * v34 - 2.0 * v14s * v34 + 2.0 * v23 * v14s * v34 + v34s +
                     2.0 * v23 * v34s - v14 * v34s - v23 * v14 * v34s - v23 * v14s * v34s;
  const Complex a2 = -1.0 + v23 - 2.0 * v14 + v23 * v14 + v23s * v14 + 2.0 * v34 + 4.0 * v23 * v34 +
                     2.0 * v23s * v34 - 2.0 * v14 * v34 - 4.0 * v23 * v14 * v34 - 2.0 * v23s * v14 * v34 - v34s -
                     v23 * v34s + 2.0 * v23s * v34s - v23 * v14 * v34s + v23s * v14 * v34s;
  const Complex a3 = vm * (1.0 + (2.0 + v23) * v14 + v34 + v23 * (2.0 + v14) * v34);

  const Complex outer = 2.0 * vp * d;
  const Complex s = sign * root;
  Slopes out;
  out.dp1 = {(a1 + (1.0 + v14) * s) / outer, (a2 + (1.0 + v23) * s) / outer, (a3 - s) / (2.0 * d), -1.0};
  out.dp2 = {(a1 - (1.0 + v14) * s) / outer, (a2 - (1.0 + v23) * s) / outer, (a3 + s) / (2.0 * d), -1.0};
  return out;
}

void require_regular(Complex v14, Complex v23, Complex v34) {
  require_nonzero(v34, "v34");
  require_nonzero(v34 - 1.0, "v34 - 1");
  require_nonzero(v34 + 1.0, "v34 + 1");
  require_nonzero(v23 * v14 - 1.0, "v23*v14 - 1");
  require_nonzero(shared_denominator(v14, v23, v34), "shared denominator");
}

// Column s of the result holds the coefficients of p_s.
CMatrix standard_matrix(const FamilyParams& p) {
  require_regular(p.v14, p.v23, p.v34);
  require_nonzero(p.l1, "l1");
  const Complex l2 = l1_times_l2(p) / p.l1;
  const Slopes sl = slopes(p.v14, p.v23, p.v34, p.branch);
  CMatrix v(4, 4);
  for (int r = 0; r < 4; ++r) {
    v(r, 0) = sl.dp1[r] * p.l1 + (r == 0 ? 1.0 : 0.0);
    v(r, 1) = sl.dp2[r] * l2 + (r == 1 ? 1.0 : 0.0);
  }
  v.col(2) << 1.0, p.v23, 1.0, 1.0;
  v.col(3) << p.v14, 1.0, p.v34, 1.0;
  return v;
}

}  // namespace

Complex l1_times_l2(const FamilyParams& p) {
  require_regular(p.v14, p.v23, p.v34);
  const Complex vp = 1.0 + p.v34;
  const Complex w = p.v23 * p.v14 - 1.0;
  return -((p.phase - 1.0) * vp * vp * shared_denominator(p.v14, p.v23, p.v34)) /
         (4.0 * w * w * (p.v34 - 1.0) * p.v34);
}

CMatrix apply_scalings(const CMatrix& v, const std::array<double, 6>& s) {
  if (v.rows() != 4 || v.cols() != 4) throw DimensionMismatch("scalings act on 4x4 CS matrices");
  const Eigen::Vector4d row(std::exp(-s[4]), std::exp(-s[5]), std::exp(s[0]), std::exp(s[1]));
  const Eigen::Vector4d col(std::exp(s[4]), std::exp(s[5]), std::exp(s[2]), std::exp(s[3]));
  return row.cast<Complex>().asDiagonal() * v * col.cast<Complex>().asDiagonal();
}

CMatrix family_matrix(const FamilyParams& params) {
  validate(params);
  return apply_scalings(standard_matrix(params), params.log_scales);
}

CMatrix build_v(const FamilyParams& params) {
  CMatrix v = family_matrix(params);
  if (!v.allFinite()) throw DegenerateParameters("family matrix is not finite");
  const VerificationReport report = verify_cs(v, std::arg(params.phase), 1e-8);
  if (!report.passed) {
    throw ConstraintResidualTooLarge("family matrix violates the CS conditions (residual " +
                                     std::to_string(report.max_constraint_residual) + ")");
  }
  return v;
}

FamilyCoordinates standardize(const CMatrix& v) {
  if (v.rows() != 4 || v.cols() != 4) throw DimensionMismatch("standardize expects a 4x4 matrix");
  for (auto [r, s] : {std::pair{0, 2}, {1, 3}, {2, 2}, {3, 2}, {3, 3}}) {
    if (std::abs(v(r, s)) <= kDegenerate) throw DegenerateParameters("standardization entry vanishes");
  }
  const CsAmplitudes alpha = cs_amplitudes(v);
  if (alpha.a0000 == 0.0) throw DegenerateParameters("alpha_0000 vanishes");

  // W = diag(r) V diag(c) with w13 = w24 = w33 = w43 = w44 = 1 and
  // balanced pairs r1*c1 = r2*c2 = 1.
  std::array<Complex, 4> r{}, c{};
  c[2] = 1.0;
  r[2] = 1.0 / v(2, 2);
  r[3] = 1.0 / v(3, 2);
  c[3] = 1.0 / (r[3] * v(3, 3));
  r[0] = 1.0 / v(0, 2);
  r[1] = 1.0 / (c[3] * v(1, 3));
  c[0] = 1.0 / r[0];
  c[1] = 1.0 / r[1];
  CMatrix w(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) w(i, j) = r[i] * v(i, j) * c[j];
  }

  FamilyCoordinates best;
  best.mismatch = std::numeric_limits<double>::infinity();
  for (Branch branch : {Branch::plus, Branch::minus}) {
    FamilyParams p;
    p.v14 = w(0, 3);
    p.v23 = w(1, 2);
    p.v34 = w(2, 3);
    p.phase = std::polar(1.0, std::arg(alpha.a1111 / alpha.a0000));
    p.branch = branch;
    const Slopes sl = slopes(p.v14, p.v23, p.v34, branch);
    int pivot = 0;
    for (int k = 1; k < 3; ++k) {
      if (std::abs(sl.dp1[k]) > std::abs(sl.dp1[pivot])) pivot = k;
    }
    p.l1 = (w(pivot, 0) - (pivot == 0 ? 1.0 : 0.0)) / sl.dp1[pivot];
    double mismatch = std::numeric_limits<double>::infinity();
    try {
      mismatch = (standard_matrix(p) - w).cwiseAbs().maxCoeff();
    } catch (const DegenerateParameters&) {
    }
    if (mismatch < best.mismatch) {
      best.params = p;
      best.mismatch = mismatch;
    }
  }
  best.row_factors.resize(4);
  best.col_factors.resize(4);
  for (int i = 0; i < 4; ++i) {
    best.row_factors(i) = 1.0 / r[i];
    best.col_factors(i) = 1.0 / c[i];
  }
  return best;
}

}  // namespace lingate
