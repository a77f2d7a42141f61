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

#include "lingate/bounds.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "lingate/nelder_mead.hpp"
#include "parallel.hpp"

namespace lingate {

ProductState ProductState::from_rows(const std::vector<std::vector<Complex>>& rows) {
  ProductState ps;
  for (const auto& row : rows) {
    LinearForm form;
    form.coeffs = Eigen::Map<const CVector>(row.data(), static_cast<Eigen::Index>(row.size()));
    ps.factors.push_back(std::move(form));
  }
  return ps;
}

FockAmplitudes expand_state(const ProductState& ps, int cutoff) {
  if (ps.factors.empty()) throw InvalidState("product state needs at least one factor");
  const int n = static_cast<int>(ps.factors.size());
  if (cutoff < n) throw std::invalid_argument("cutoff must be at least the number of factors");
  const int m = ps.modes();
  for (const auto& f : ps.factors) {
    if (f.coeffs.size() != m) throw DimensionMismatch("factors act on different numbers of modes");
  }

  MonomialPolynomial poly(m);
  const MonomialPolynomial::Exponents cap(m, cutoff);
  for (const auto& f : ps.factors) poly.multiply_linear(f.constant, f.coeffs, &cap);
  poly.prune();

  FockAmplitudes out;
  for (const auto& [exponents, coefficient] : poly.terms()) {
    double weight = 1.0;
    for (int e : exponents) weight *= factorial(e);
    out.emplace(FockState(exponents), ps.prefactor * coefficient * std::sqrt(weight));
  }
  return out;
}

double state_norm(const FockAmplitudes& amplitudes) {
  double sum = 0.0;
  for (const auto& [state, a] : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

ProductState coherent_project(const ProductState& ps, int mode, Complex gamma) {
  if (mode < 0 || mode >= ps.modes()) throw std::out_of_range("mode out of range");
  const int m = ps.modes();
  ProductState out;
  out.prefactor = ps.prefactor * std::exp(-0.5 * std::norm(gamma));
  for (const auto& f : ps.factors) {
    LinearForm g;
    g.constant = f.constant + std::conj(gamma) * f.coeffs(mode);
    g.coeffs.resize(m - 1);
    for (int j = 0, k = 0; j < m; ++j) {
      if (j != mode) g.coeffs(k++) = f.coeffs(j);
    }
    out.factors.push_back(std::move(g));
  }
  return out;
}

double bell_overlap(const ProductState& ps) {
  if (ps.modes() != 4) throw DimensionMismatch("Bell overlap needs a 4-mode state");
  const auto amps = expand_state(ps, static_cast<int>(ps.factors.size()));
  const double norm = state_norm(amps);
  if (!(norm > 0.0)) throw InvalidState("state vanishes");
  auto get = [&](const FockState& s) {
    auto it = amps.find(s);
    return it == amps.end() ? Complex(0.0) : it->second;
  };
  const Complex overlap = (get({1, 1, 0, 0}) + get({0, 0, 1, 1})) / std::sqrt(2.0);
  return std::min(1.0, std::abs(overlap) / norm);
}

namespace {

ProductState bell_candidate(std::span<const double> x) {
  ProductState ps;
  std::size_t k = 0;
  for (int f = 0; f < 2; ++f) {
    LinearForm form;
    form.constant = Complex(x[k], x[k + 1]);
    k += 2;
    form.coeffs.resize(4);
    for (int j = 0; j < 4; ++j) {
      if (j == f) {
        form.coeffs(j) = 1.0;
      } else {
        form.coeffs(j) = Complex(x[k], x[k + 1]);
        k += 2;
      }
    }
    ps.factors.push_back(std::move(form));
  }
  return ps;
}

double bell_value(std::span<const double> x) {
  try {
    return bell_overlap(bell_candidate(x));
  } catch (const InvalidState&) {
    return 0.0;
  }
}

}  // namespace

BellSearchResult maximize_bell_overlap(const SearchConfig& config) {
  config.validate();
  constexpr int kDim = 16;
  std::vector<std::vector<double>> points(config.restarts);
  std::vector<double> values(config.restarts, 0.0);

  detail::run_indexed(config.restarts, config.threads, [&](int r) {
    std::mt19937_64 rng(restart_seed(config.seed, r));
    std::uniform_real_distribution<double> entry(-config.start_range, config.start_range);
    std::vector<double> x(kDim);
    for (double& v : x) v = entry(rng);
    double step = 0.5;
    for (int stage = 0; stage < 2 && config.max_iterations > 0; ++stage) {
      NelderMeadOptions options;
      options.max_evaluations = config.max_iterations;
      options.initial_step = step;
      x = nelder_mead([](std::span<const double> y) { return -bell_value(y); }, std::move(x), options).x;
      step = 0.05;
    }
    values[r] = bell_value(x);
    points[r] = std::move(x);
  });

  BellSearchResult result;
  for (int r = 0; r < config.restarts; ++r) {
    result.history.emplace_back(r, values[r]);
    if (result.best_restart < 0 || values[r] > result.overlap) {
      result.best_restart = r;
      result.overlap = values[r];
    }
  }
  result.best = bell_candidate(points[result.best_restart]);
  return result;
}

std::vector<FockState> truncated_basis(int modes, int cutoff) {
  std::vector<FockState> basis;
  for (int n = 0; n <= cutoff; ++n) {
    auto sector = sector_states(modes, n);
    basis.insert(basis.end(), sector.begin(), sector.end());
  }
  return basis;
}

namespace {

struct BasisIndex {
  std::vector<FockState> basis;
  std::map<FockState, int> index;

  BasisIndex(int modes, int cutoff) : basis(truncated_basis(modes, cutoff)) {
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) index.emplace(basis[i], i);
  }

  int find(const FockState& s) const {
    auto it = index.find(s);
    return it == index.end() ? -1 : it->second;
  }
};

}  // namespace

DensityMatrix partial_trace(const ProductState& ps, int mode, int cutoff) {
  if (mode < 0 || mode >= ps.modes()) throw std::out_of_range("mode out of range");
  const BasisIndex idx(ps.modes() - 1, cutoff);
  const int n = static_cast<int>(ps.factors.size());
  const auto amps = expand_state(ps, n);
  const double norm = state_norm(amps);
  if (!(norm > 0.0)) throw InvalidState("state vanishes");

  // Group the kept-mode components by the occupation of the traced mode.
  std::map<int, std::vector<std::pair<int, Complex>>> blocks;
  for (const auto& [state, a] : amps) {
    std::vector<int> rest;
    for (int j = 0; j < state.modes(); ++j) {
      if (j != mode) rest.push_back(state[j]);
    }
    const int i = idx.find(FockState(std::move(rest)));
    if (i >= 0) blocks[state[mode]].emplace_back(i, a / norm);
  }

  DensityMatrix out{idx.basis, CMatrix::Zero(idx.basis.size(), idx.basis.size())};
  for (const auto& [k, entries] : blocks) {
    for (const auto& [i, a] : entries) {
      for (const auto& [j, b] : entries) out.rho(i, j) += a * std::conj(b);
    }
  }
  return out;
}

DensityMatrix coherent_mixture(const ProductState& ps, int mode, int cutoff, const CoherentQuadrature& quadrature) {
  if (mode < 0 || mode >= ps.modes()) throw std::out_of_range("mode out of range");
  if (quadrature.radial_nodes < 1 || quadrature.angular_nodes < 1 || !(quadrature.radius > 0.0)) {
    throw std::invalid_argument("invalid quadrature");
  }
  const BasisIndex idx(ps.modes() - 1, cutoff);
  const int n = static_cast<int>(ps.factors.size());
  const double norm2 = std::pow(state_norm(expand_state(ps, n)), 2);
  if (!(norm2 > 0.0)) throw InvalidState("state vanishes");

  const auto [radii, weights] = gauss_legendre(quadrature.radial_nodes, 0.0, quadrature.radius);
  const double dphi = 2.0 * kPi / quadrature.angular_nodes;
  const auto dim = static_cast<Eigen::Index>(idx.basis.size());
  DensityMatrix out{idx.basis, CMatrix::Zero(dim, dim)};
  CVector phi(dim);
  for (std::size_t a = 0; a < radii.size(); ++a) {
    const double w = weights[a] * radii[a] * dphi / (kPi * norm2);
    for (int b = 0; b < quadrature.angular_nodes; ++b) {
      const Complex gamma = std::polar(radii[a], b * dphi);
      phi.setZero();
      for (const auto& [state, amp] : expand_state(coherent_project(ps, mode, gamma), n)) {
        const int i = idx.find(state);
        if (i >= 0) phi(i) = amp;
      }
      out.rho.noalias() += w * phi * phi.adjoint();
    }
  }
  return out;
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DimensionMismatch("trace distance needs square matrices of equal size");
  }
  const CMatrix diff = a - b;
  const CMatrix hermitian = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian, Eigen::EigenvaluesOnly);
  return 0.5 * eig.eigenvalues().cwiseAbs().sum();
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("need at least one node");
  // Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the
  // Legendre recurrence, weights come from the first eigenvector components.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
  std::vector<double> nodes(n), weights(n);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    nodes[i] = a + half * (eig.eigenvalues()(i) + 1.0);
    weights[i] = half * 2.0 * std::pow(eig.eigenvectors()(0, i), 2);
  }
  return {nodes, weights};
}

}  // namespace lingate
