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

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "lingate/fock.hpp"

namespace lingate {

/// Two-mode mixer on modes (p, q):
///   [[e^{i phi} cos theta, -sin theta],
///    [e^{i phi} sin theta,  cos theta]]
struct BeamSplitter {
  int p = 0;
  int q = 1;
  double theta = 0.0;
  double phi = 0.0;
};

struct PhaseShifter {
  int mode = 0;
  double phi = 0.0;
};

using NetworkElement = std::variant<BeamSplitter, PhaseShifter>;

/// Elements act in list order (the first element meets the photons first),
/// followed by a phase e^{i output_phases[k]} on every mode k.
struct InterferometerNetwork {
  int m = 0;
  std::vector<NetworkElement> elements;
  std::vector<double> output_phases;

  int beamsplitter_count() const;
};

/// The m x m matrix of a single element.
CMatrix element_matrix(int m, const NetworkElement& element);

/// Mode pairs in triangular nulling order: rows from the bottom up, each row
/// cleared left to right with nearest-neighbour mixers.
std::vector<std::pair<int, int>> triangular_pairs(int m);

/// Triangular decomposition into at most m(m-1)/2 beamsplitters. Mixers
/// whose target entry is already exactly zero are omitted. Throws NotUnitary
/// when max|U†U - I| > unitarity_tol.
InterferometerNetwork decompose(const ModeTransform& u, double unitarity_tol = 1e-10);

ModeTransform recompose(const InterferometerNetwork& network);

/// Angle chart of U(m): m(m-1)/2 mixing angles, then m(m-1)/2 internal
/// phases, then m output phases, laid out on triangular_pairs(m).
InterferometerNetwork network_from_angles(int m, std::span<const double> angles);
ModeTransform parametrize_unitary(int m, std::span<const double> angles);

}  // namespace lingate
