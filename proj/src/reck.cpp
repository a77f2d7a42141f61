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

#include "lingate/reck.hpp"

#include <cmath>

namespace lingate {

namespace {

void check_modes(int m, int mode) {
  if (mode < 0 || mode >= m) throw DimensionMismatch("network element addresses a mode outside the network");
}

// rows p, q of `u` <- T * rows p, q
void mix_rows(CMatrix& u, const BeamSplitter& bs) {
  const Complex phase = std::polar(1.0, bs.phi);
  const double c = std::cos(bs.theta);
  const double s = std::sin(bs.theta);
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    const Complex a = u(bs.p, k);
    const Complex b = u(bs.q, k);
    u(bs.p, k) = phase * c * a - s * b;
    u(bs.q, k) = phase * s * a + c * b;
  }
}

}  // namespace

int InterferometerNetwork::beamsplitter_count() const {
  int count = 0;
  for (const auto& e : elements) count += std::holds_alternative<BeamSplitter>(e) ? 1 : 0;
  return count;
}

CMatrix element_matrix(int m, const NetworkElement& element) {
  CMatrix u = CMatrix::Identity(m, m);
  if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
    check_modes(m, bs->p);
    check_modes(m, bs->q);
    if (bs->p == bs->q) throw DimensionMismatch("beamsplitter needs two distinct modes");
    mix_rows(u, *bs);
  } else {
    const auto& ps = std::get<PhaseShifter>(element);
    check_modes(m, ps.mode);
    u(ps.mode, ps.mode) = std::polar(1.0, ps.phi);
  }
  return u;
}

std::vector<std::pair<int, int>> triangular_pairs(int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int row = m - 1; row >= 1; --row) {
    for (int j = 0; j < row; ++j) pairs.emplace_back(j, j + 1);
  }
  return pairs;
}

InterferometerNetwork decompose(const ModeTransform& u, double unitarity_tol) {
  if (!u.is_unitary(unitarity_tol)) throw NotUnitary("decomposition requires a unitary transform");
  const int m = u.modes();
  CMatrix w = u.matrix();
  InterferometerNetwork network;
  network.m = m;

  // Right-multiplying by T† clears w(row, p) using columns p and q; once a
  // row is cleared it stays cleared because later mixers touch columns that
  // are already zero in that row.
  for (int row = m - 1; row >= 1; --row) {
    for (int p = 0; p < row; ++p) {
      const int q = p + 1;
      const Complex a = w(row, p);
      const Complex b = w(row, q);
      if (a == 0.0) continue;
      BeamSplitter bs{p, q, std::atan2(std::abs(a), std::abs(b)), b == 0.0 ? 0.0 : std::arg(a) - std::arg(b)};
      const Complex back = std::polar(1.0, -bs.phi);
      const double c = std::cos(bs.theta);
      const double s = std::sin(bs.theta);
      for (int k = 0; k < m; ++k) {
        const Complex wp = w(k, p);
        const Complex wq = w(k, q);
        w(k, p) = wp * back * c - wq * s;
        w(k, q) = wp * back * s + wq * c;
      }
      network.elements.emplace_back(bs);
    }
  }
  network.output_phases.resize(m);
  for (int k = 0; k < m; ++k) network.output_phases[k] = std::arg(w(k, k));
  return network;
}

ModeTransform recompose(const InterferometerNetwork& network) {
  const int m = network.m;
  if (static_cast<int>(network.output_phases.size()) != m) {
    throw DimensionMismatch("one output phase per mode required");
  }
  CMatrix u = CMatrix::Identity(m, m);
  for (const auto& element : network.elements) {
    if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
      check_modes(m, bs->p);
      check_modes(m, bs->q);
      if (bs->p == bs->q) throw DimensionMismatch("beamsplitter needs two distinct modes");
      mix_rows(u, *bs);
    } else {
      const auto& ps = std::get<PhaseShifter>(element);
      check_modes(m, ps.mode);
      u.row(ps.mode) *= std::polar(1.0, ps.phi);
    }
  }
  for (int k = 0; k < m; ++k) u.row(k) *= std::polar(1.0, network.output_phases[k]);
  return ModeTransform(std::move(u));
}

InterferometerNetwork network_from_angles(int m, std::span<const double> angles) {
  if (m < 1) throw DimensionMismatch("need at least one mode");
  const auto pairs = triangular_pairs(m);
  const std::size_t k = pairs.size();
  if (angles.size() != static_cast<std::size_t>(m) * m) {
    throw DimensionMismatch("unitary chart needs m*m angles");
  }
  InterferometerNetwork network;
  network.m = m;
  for (std::size_t i = 0; i < k; ++i) {
    network.elements.emplace_back(BeamSplitter{pairs[i].first, pairs[i].second, angles[i], angles[k + i]});
  }
  network.output_phases.assign(angles.begin() + 2 * k, angles.end());
  return network;
}

ModeTransform parametrize_unitary(int m, std::span<const double> angles) {
  return recompose(network_from_angles(m, angles));
}

}  // namespace lingate
