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

#include <map>
#include <utility>
#include <vector>

#include "lingate/fock.hpp"

namespace lingate {

/// One requirement of the post-selected map: input -> output must carry
/// `relative` times the reference amplitude (the first target entry).
struct TargetEntry {
  FockState input;
  FockState output;
  Complex relative{1.0};
};

/// A non-deterministic gate: which modes carry the logical state, what the
/// helper modes start in, and which detection pattern is accepted.
///
/// Helper and detection patterns range over the ancilla modes, i.e. every
/// mode not listed in `system_modes`, in ascending order.
struct GateSpec {
  std::vector<int> system_modes;
  FockState helpers;
  FockState detection;
  std::vector<TargetEntry> target;
  double theta = kPi;

  int total_modes() const { return static_cast<int>(system_modes.size()) + helpers.modes(); }
  std::vector<int> ancilla_modes() const;
  /// Places a system pattern and an ancilla pattern into one full-width state.
  FockState combine(const FockState& system, const FockState& ancilla) const;
};

/// CS_theta on modes 0,1 with one helper photon in each of modes 2,3.
GateSpec cs_gate(double theta);

/// NS_theta on mode 0: |2> picks up e^{i theta}. One helper photon in mode 1;
/// the ancilla modes 1..modes-1 accept the pattern (1,0,...,0).
GateSpec ns_gate(double theta = kPi, int modes = 3);

/// CS_theta between two bosonic qubits. Mode order: right mode of qubit A,
/// right mode of qubit B, left mode of A, left mode of B, helpers.
/// Logical |xy> is (1-x, 1-y, x, y).
GateSpec qubit_pair_gate(double theta);

/// Post-selected amplitudes, unnormalized, for every target input and every
/// system output with the photon number the detection pattern leaves behind.
struct ConditionalMap {
  std::map<std::pair<FockState, FockState>, Complex> amplitudes;

  Complex at(const FockState& input, const FockState& output) const;
};

ConditionalMap conditional_map(const CMatrix& v, const GateSpec& spec);

struct VerificationReport {
  bool passed = false;
  double max_constraint_residual = 0.0;
  double success_probability = 0.0;
  double theta_measured = 0.0;
  double max_singular_value = 0.0;
};

/// Compares the conditional map to the target. Residuals are measured on
/// amplitudes divided by |reference|; a vanishing reference is a failure
/// with infinite residual.
VerificationReport verify(const CMatrix& v, const GateSpec& spec, double tol);

VerificationReport verify_cs(const CMatrix& v, double theta, double tol = 1e-9);
VerificationReport verify_ns(const CMatrix& v, double tol = 1e-9, double theta = kPi);
VerificationReport verify_qubit_pair(const CMatrix& v6, double theta, double tol = 1e-9);

/// The eight named amplitudes alpha_abcd of the two-mode CS scheme
/// (input ab on modes 0,1 -> output cd, helpers detected as 1,1).
struct CsAmplitudes {
  Complex a0000, a0101, a0110, a1010, a1001, a1111, a1120, a1102;
};

CsAmplitudes cs_amplitudes(const CMatrix& v);

/// The helper-only amplitude alpha_0000 = per of the helper block.
Complex cs_reference_amplitude(const CMatrix& v);

}  // namespace lingate
