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
#include <vector>

#include "lingate/fock.hpp"
#include "lingate/optimize.hpp"

namespace lingate {

/// beta_0 + sum_j beta_j c†_j
struct LinearForm {
  Complex constant{0.0};
  CVector coeffs;
};

/// prefactor * prod_k (beta_k0 + sum_j beta_kj c†_j) |0>
struct ProductState {
  std::vector<LinearForm> factors;
  Complex prefactor{1.0};

  int modes() const { return factors.empty() ? 0 : static_cast<int>(factors.front().coeffs.size()); }
  /// Convenience for factors without constants: one coefficient row per factor.
  static ProductState from_rows(const std::vector<std::vector<Complex>>& rows);
};

using FockAmplitudes = std::map<FockState, Complex>;

/// Fock amplitudes of the (unnormalized) state. `cutoff` bounds the photon
/// number per mode and must be at least the number of factors, which makes
/// the expansion exact. Throws std::invalid_argument otherwise, and
/// DimensionMismatch when factors disagree on the mode count.
FockAmplitudes expand_state(const ProductState& ps, int cutoff);

/// Euclidean norm of an amplitude map.
double state_norm(const FockAmplitudes& amplitudes);

/// Applies the coherent bra <gamma| to `mode`: every factor's constant picks
/// up conj(gamma) times its coefficient on that mode, the mode is removed,
/// and the prefactor gains exp(-|gamma|^2 / 2).
ProductState coherent_project(const ProductState& ps, int mode, Complex gamma);

/// |<Bell|psi>| / ||psi|| with Bell = (c†_0 c†_1 + c†_2 c†_3)|0> / sqrt(2).
/// Needs a 4-mode state; throws InvalidState when psi vanishes.
double bell_overlap(const ProductState& ps);

struct BellSearchResult {
  ProductState best;
  double overlap = 0.0;
  int best_restart = -1;
  std::vector<std::pair<int, double>> history;
};

/// Maximizes bell_overlap over two-factor product states on 4 modes. Each
/// factor keeps one coefficient fixed to 1 (factor k on mode k), leaving 16
/// real parameters. Uses restarts, seed, threads, max_iterations and
/// start_range from `config`.
BellSearchResult maximize_bell_overlap(const SearchConfig& config);

struct DensityMatrix {
  std::vector<FockState> basis;
  CMatrix rho;
};

/// Basis of all states on `modes` modes with at most `cutoff` photons in total,
/// grouped by photon number.
std::vector<FockState> truncated_basis(int modes, int cutoff);

/// Reduced state of the normalized product state after tracing out `mode`,
/// on truncated_basis(modes - 1, cutoff).
DensityMatrix partial_trace(const ProductState& ps, int mode, int cutoff);

struct CoherentQuadrature {
  double radius = 5.0;
  int radial_nodes = 40;
  int angular_nodes = 40;
};

/// (1/pi) * integral of |phi_gamma><phi_gamma| d^2 gamma with
/// phi_gamma = <gamma|_mode psi / ||psi||, using Gauss-Legendre nodes in |gamma|
/// and equally spaced angles. Same basis as partial_trace.
DensityMatrix coherent_mixture(const ProductState& ps, int mode, int cutoff,
                               const CoherentQuadrature& quadrature = {});

/// Half the trace norm of a - b (Hermitian inputs).
double trace_distance(const CMatrix& a, const CMatrix& b);

/// Nodes and weights of the n-point Gauss-Legendre rule on [a, b].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b);

}  // namespace lingate
