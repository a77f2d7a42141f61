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

#include "lingate/gates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "lingate/dilation.hpp"

namespace lingate {

std::vector<int> GateSpec::ancilla_modes() const {
  std::vector<int> ancillas;
  for (int mode = 0; mode < total_modes(); ++mode) {
    if (std::find(system_modes.begin(), system_modes.end(), mode) == system_modes.end()) {
      ancillas.push_back(mode);
    }
  }
  return ancillas;
}

FockState GateSpec::combine(const FockState& system, const FockState& ancilla) const {
  if (system.modes() != static_cast<int>(system_modes.size()) || ancilla.modes() != helpers.modes()) {
    throw DimensionMismatch("pattern length does not match gate layout");
  }
  std::vector<int> occ(total_modes(), 0);
  for (std::size_t i = 0; i < system_modes.size(); ++i) occ[system_modes[i]] = system[i];
  const auto ancillas = ancilla_modes();
  for (std::size_t i = 0; i < ancillas.size(); ++i) occ[ancillas[i]] = ancilla[i];
  return FockState(std::move(occ));
}

GateSpec cs_gate(double theta) {
  GateSpec spec;
  spec.system_modes = {0, 1};
  spec.helpers = {1, 1};
  spec.detection = {1, 1};
  spec.theta = theta;
  spec.target = {
      {{0, 0}, {0, 0}, 1.0},
      {{0, 1}, {0, 1}, 1.0},
      {{1, 0}, {1, 0}, 1.0},
      {{1, 1}, {1, 1}, std::polar(1.0, theta)},
  };
  return spec;
}

GateSpec ns_gate(double theta, int modes) {
  if (modes < 2) throw DimensionMismatch("NS gate needs at least one ancilla mode");
  std::vector<int> pattern(modes - 1, 0);
  pattern[0] = 1;
  GateSpec spec;
  spec.system_modes = {0};
  spec.helpers = FockState(pattern);
  spec.detection = FockState(pattern);
  spec.theta = theta;
  spec.target = {
      {{0}, {0}, 1.0},
      {{1}, {1}, 1.0},
      {{2}, {2}, std::polar(1.0, theta)},
  };
  return spec;
}

GateSpec qubit_pair_gate(double theta) {
  GateSpec spec;
  spec.system_modes = {0, 1, 2, 3};
  spec.helpers = {1, 1};
  spec.detection = {1, 1};
  spec.theta = theta;
  auto logical = [](int x, int y) { return FockState{1 - x, 1 - y, x, y}; };
  spec.target = {
      {logical(0, 0), logical(0, 0), 1.0},
      {logical(0, 1), logical(0, 1), 1.0},
      {logical(1, 0), logical(1, 0), 1.0},
      {logical(1, 1), logical(1, 1), std::polar(1.0, theta)},
  };
  return spec;
}

Complex ConditionalMap::at(const FockState& input, const FockState& output) const {
  auto it = amplitudes.find({input, output});
  if (it == amplitudes.end()) throw std::out_of_range("no such entry in conditional map: " + input.str() +
                                                      " -> " + output.str());
  return it->second;
}

ConditionalMap conditional_map(const CMatrix& v, const GateSpec& spec) {
  if (spec.helpers.modes() != spec.detection.modes()) {
    throw DimensionMismatch("helper and detection patterns differ in length");
  }
  if (v.rows() != spec.total_modes() || v.cols() != spec.total_modes()) {
    throw DimensionMismatch("gate matrix size does not match gate layout");
  }
  const ModeTransform transform(v);
  const int system_count = static_cast<int>(spec.system_modes.size());

  std::set<FockState> inputs;
  for (const auto& entry : spec.target) inputs.insert(entry.input);

  ConditionalMap map;
  for (const auto& input : inputs) {
    const int remaining = input.photons() + spec.helpers.photons() - spec.detection.photons();
    const FockState full_in = spec.combine(input, spec.helpers);
    for (const auto& output : sector_states(system_count, remaining)) {
      const FockState full_out = spec.combine(output, spec.detection);
      map.amplitudes[{input, output}] = amplitude(transform, full_in, full_out);
    }
  }
  return map;
}

VerificationReport verify(const CMatrix& v, const GateSpec& spec, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("verification tolerance must be positive");
  const ConditionalMap map = conditional_map(v, spec);

  VerificationReport report;
  report.max_singular_value = max_singular_value(v);
  if (spec.target.empty()) throw std::invalid_argument("gate has no target entries");
  const Complex reference = map.at(spec.target.front().input, spec.target.front().output);
  report.success_probability = std::norm(reference);
  const double scale = std::abs(reference);
  if (scale == 0.0) {
    report.max_constraint_residual = std::numeric_limits<double>::infinity();
    return report;
  }

  std::map<std::pair<FockState, FockState>, Complex> expected;
  for (const auto& entry : spec.target) expected[{entry.input, entry.output}] = entry.relative * reference;

  double residual = 0.0;
  for (const auto& [key, alpha] : map.amplitudes) {
    auto it = expected.find(key);
    const Complex want = it == expected.end() ? Complex(0.0) : it->second;
    residual = std::max(residual, std::abs(alpha - want) / scale);
  }
  const auto& phase_entry = spec.target.back();
  report.theta_measured = std::arg(map.at(phase_entry.input, phase_entry.output) / reference);
  report.max_constraint_residual = residual;
  report.passed = residual <= tol;
  return report;
}

VerificationReport verify_cs(const CMatrix& v, double theta, double tol) { return verify(v, cs_gate(theta), tol); }

VerificationReport verify_ns(const CMatrix& v, double tol, double theta) {
  return verify(v, ns_gate(theta, static_cast<int>(v.rows())), tol);
}

VerificationReport verify_qubit_pair(const CMatrix& v6, double theta, double tol) {
  return verify(v6, qubit_pair_gate(theta), tol);
}

CsAmplitudes cs_amplitudes(const CMatrix& v) {
  const ConditionalMap map = conditional_map(v, cs_gate(kPi));
  return {
      map.at({0, 0}, {0, 0}), map.at({0, 1}, {0, 1}), map.at({0, 1}, {1, 0}), map.at({1, 0}, {1, 0}),
      map.at({1, 0}, {0, 1}), map.at({1, 1}, {1, 1}), map.at({1, 1}, {2, 0}), map.at({1, 1}, {0, 2}),
  };
}

Complex cs_reference_amplitude(const CMatrix& v) {
  if (v.rows() < 4 || v.cols() < 4) throw DimensionMismatch("CS gate matrix must be at least 4x4");
  return v(2, 2) * v(3, 3) + v(2, 3) * v(3, 2);
}

}  // namespace lingate
