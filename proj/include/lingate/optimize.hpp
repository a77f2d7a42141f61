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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lingate/family.hpp"
#include "lingate/gates.hpp"

namespace lingate {

enum class BranchPolicy { both, plus, minus };

struct SearchConfig {
  double theta = kPi;
  int restarts = 200;
  std::uint64_t seed = 42;
  /// Standard deviation of the Gaussian kick in perturb-and-repeat.
  double perturbation_scale = 0.02;
  /// A perturbation counts as progress only if it gains more than this.
  double convergence_tol = 1e-10;
  /// Objective evaluations per simplex run; 0 turns local search into a no-op.
  int max_iterations = 3000;
  /// Objective evaluations per simplex run after a perturbation.
  int polish_iterations = 1000;
  /// Consecutive unproductive perturbations that end a local search.
  int polish_attempts = 3;
  bool real_only = false;
  BranchPolicy branch = BranchPolicy::both;
  /// Random starts: real and imaginary parts uniform in [-start_range,
  /// start_range], log-scales uniform in [-scale_range, scale_range].
  double start_range = 2.0;
  double scale_range = 1.0;
  /// Penalty weights for the NS search, applied in sequence.
  std::vector<double> penalty_schedule{10.0, 1e2, 1e3, 1e4, 1e6, 1e8};
  /// Tolerance used to verify returned matrices.
  double verify_tol = 1e-7;
  /// Worker threads for independent restarts; 0 picks the hardware count.
  int threads = 0;

  /// Throws std::invalid_argument on restarts < 1, non-positive
  /// perturbation_scale or convergence_tol, negative max_iterations or polish_iterations.
  void validate() const;
};

struct SearchResult {
  CMatrix best_v;
  std::optional<FamilyParams> best_params;
  std::vector<double> best_angles;
  double objective = 0.0;
  int best_restart = -1;
  std::vector<std::pair<int, double>> history;
  VerificationReport verification;
  /// |v11 - v22| of the best matrix (CS only); it vanishes on the known optima.
  double v11_v22_gap = 0.0;
  long evaluations = 0;
};

/// Success probability of the rescaled qubit-pair gate built from a
/// CS-satisfying V: |alpha_0000|^2 / max(1, lambda)^8. Zero when alpha_0000
/// vanishes or V is not finite.
double objective_cs(const CMatrix& v);

/// Perturb-and-repeat maximization of objective_cs over the family, starting
/// from `start`. The phase and branch of `start` are kept fixed. The search
/// first follows a smoothed objective in which max(1, lambda)^8 is replaced by
/// (1 + sum_i sigma_i^{2p})^{4/p} for p = 2, 8, 32, 128, then works on the
/// exact objective. The best objective never decreases; the loop stops after
/// `polish_attempts` consecutive kicks that gain less than convergence_tol.
SearchResult local_search(const FamilyParams& start, const SearchConfig& config);

/// Best of config.restarts independent local searches from random family
/// points. Branches alternate (plus on even restarts) under BranchPolicy::both.
SearchResult search_cs(const SearchConfig& config);

/// Penalty-method search for NS_theta over the full unitary group on `modes`
/// modes (angle chart from the reck module, so lambda = 1 by construction).
/// Maximizes |amp(0->0)|^2 - mu * (|amp(1->1) - amp(0->0)|^2 +
/// |amp(2->2) - e^{i theta} amp(0->0)|^2) through the penalty schedule.
/// Verified results are preferred; among them the highest success
/// probability wins.
SearchResult search_ns(int modes, const SearchConfig& config);

/// Per-restart RNG seed derived from (seed, restart index).
std::uint64_t restart_seed(std::uint64_t seed, int restart);

}  // namespace lingate
