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

#include "lingate/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "lingate/nelder_mead.hpp"
#include "lingate/reck.hpp"
#include "parallel.hpp"

namespace lingate {

void SearchConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (!(perturbation_scale > 0.0)) throw std::invalid_argument("perturbation_scale must be positive");
  if (!(convergence_tol > 0.0)) throw std::invalid_argument("convergence_tol must be positive");
  if (max_iterations < 0) throw std::invalid_argument("max_iterations must be non-negative");
  if (polish_iterations < 0) throw std::invalid_argument("polish_iterations must be non-negative");
  if (polish_attempts < 0) throw std::invalid_argument("polish_attempts must be non-negative");
  if (!(verify_tol > 0.0)) throw std::invalid_argument("verify_tol must be positive");
}

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(restart) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

constexpr std::array<double, 4> kSmoothing{2.0, 8.0, 32.0, 128.0};

// Eigenvalues of V†V, ascending.
Eigen::Vector4d gram_eigenvalues(const Eigen::Matrix4cd& v) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(v.adjoint() * v, Eigen::EigenvaluesOnly);
  return eig.eigenvalues();
}

// |alpha_0000|^2 / D with D = max(1, lambda)^8 for p = 0, else the smooth
// upper bound (1 + sum_i sigma_i^{2p})^{4/p}, evaluated in log space.
double cs_value(const Eigen::Matrix4cd& v, double p) {
  if (!v.allFinite()) return 0.0;
  const Complex alpha = v(2, 2) * v(3, 3) + v(2, 3) * v(3, 2);
  const Eigen::Vector4d mu = gram_eigenvalues(v);
  double log_denominator = 0.0;
  if (p == 0.0) {
    log_denominator = 4.0 * std::log(std::max(1.0, mu(3)));
  } else {
    std::array<double, 5> terms{0.0};
    for (int i = 0; i < 4; ++i) terms[i + 1] = p * std::log(std::max(mu(i), 1e-300));
    const double top = *std::max_element(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - top);
    log_denominator = 4.0 * (top + std::log(sum)) / p;
  }
  const double value = std::norm(alpha) * std::exp(-log_denominator);
  return std::isfinite(value) ? value : 0.0;
}

// Flat parameter vector <-> FamilyParams with fixed phase and branch.
class FamilyCodec {
 public:
  FamilyCodec(Complex phase, Branch branch, bool real_only)
      : phase_(phase), branch_(branch), real_only_(real_only) {}

  std::size_t size() const { return real_only_ ? 10 : 14; }

  std::vector<double> encode(const FamilyParams& p) const {
    std::vector<double> x;
    x.reserve(size());
    for (Complex z : {p.v14, p.v23, p.v34, p.l1}) {
      x.push_back(z.real());
      if (!real_only_) x.push_back(z.imag());
    }
    x.insert(x.end(), p.log_scales.begin(), p.log_scales.end());
    return x;
  }

  FamilyParams decode(std::span<const double> x) const {
    FamilyParams p;
    p.phase = phase_;
    p.branch = branch_;
    std::size_t k = 0;
    auto next = [&] {
      if (real_only_) return Complex(x[k++], 0.0);
      const Complex z(x[k], x[k + 1]);
      k += 2;
      return z;
    };
    p.v14 = next();
    p.v23 = next();
    p.v34 = next();
    p.l1 = next();
    for (double& s : p.log_scales) s = x[k++];
    return p;
  }

  double value(std::span<const double> x, double p) const {
    try {
      return cs_value(family_matrix(decode(x)), p);
    } catch (const DegenerateParameters&) {
      return 0.0;
    } catch (const std::invalid_argument&) {
      return 0.0;
    }
  }

 private:
  Complex phase_;
  Branch branch_;
  bool real_only_;
};

// e^{i theta} with round-off removed, so theta = pi gives exactly -1.
Complex unit_phase(double theta) {
  auto clean = [](double x) { return std::abs(x) < 1e-15 ? 0.0 : x; };
  return {clean(std::cos(theta)), clean(std::sin(theta))};
}

// Verified beats unverified, then higher objective, then lower index.
SearchResult merge(std::vector<SearchResult> runs) {
  SearchResult best;
  long evaluations = 0;
  std::vector<std::pair<int, double>> history;
  int chosen = -1;
  for (int r = 0; r < static_cast<int>(runs.size()); ++r) {
    const auto& run = runs[r];
    evaluations += run.evaluations;
    history.emplace_back(r, run.objective);
    if (chosen < 0) {
      chosen = r;
      continue;
    }
    const auto& incumbent = runs[chosen];
    const bool better = run.verification.passed != incumbent.verification.passed
                            ? run.verification.passed
                            : run.objective > incumbent.objective;
    if (better) chosen = r;
  }
  best = std::move(runs[chosen]);
  best.best_restart = chosen;
  best.history = std::move(history);
  best.evaluations = evaluations;
  return best;
}

}  // namespace

double objective_cs(const CMatrix& v) {
  if (v.rows() != 4 || v.cols() != 4) throw DimensionMismatch("CS objective expects a 4x4 matrix");
  return cs_value(v, 0.0);
}

SearchResult local_search(const FamilyParams& start, const SearchConfig& config) {
  config.validate();
  (void)family_matrix(start);
  const FamilyCodec codec(start.phase, start.branch, config.real_only);

  long evaluations = 0;
  auto minimize = [&](std::vector<double> from, double p, double step, int budget) {
    NelderMeadOptions options;
    options.max_evaluations = budget;
    options.initial_step = step;
    auto result = nelder_mead([&](std::span<const double> x) { return -codec.value(x, p); }, std::move(from),
                              options);
    evaluations += result.evaluations;
    return result;
  };

  std::vector<double> best_x = codec.encode(start);
  double best = codec.value(best_x, 0.0);

  if (config.max_iterations > 0) {
    std::vector<double> x = best_x;
    double step = 0.5;
    for (double p : kSmoothing) {
      x = minimize(std::move(x), p, step, config.max_iterations).x;
      step = 0.05;
    }
    auto exact = minimize(std::move(x), 0.0, step, config.max_iterations);
    if (-exact.value > best) {
      best = -exact.value;
      best_x = std::move(exact.x);
    }

    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> kick(0.0, 1.0);
    double scale = config.perturbation_scale;
    for (int failures = 0; failures < config.polish_attempts && config.polish_iterations > 0;) {
      std::vector<double> y = best_x;
      for (double& v : y) v += scale * kick(rng);
      auto trial = minimize(std::move(y), 0.0, scale, config.polish_iterations);
      if (-trial.value > best + config.convergence_tol) {
        best = -trial.value;
        best_x = std::move(trial.x);
        failures = 0;
      } else {
        ++failures;
        scale *= 0.5;
      }
    }
  }

  SearchResult result;
  result.best_params = codec.decode(best_x);
  result.best_v = family_matrix(*result.best_params);
  result.objective = objective_cs(result.best_v);
  result.best_restart = 0;
  result.history = {{0, result.objective}};
  result.verification = verify_cs(result.best_v, std::arg(start.phase), config.verify_tol);
  result.v11_v22_gap = std::abs(result.best_v(0, 0) - result.best_v(1, 1));
  result.evaluations = evaluations;
  return result;
}

SearchResult search_cs(const SearchConfig& config) {
  config.validate();
  const Complex phase = unit_phase(config.theta);
  std::vector<SearchResult> runs(config.restarts);

  detail::run_indexed(config.restarts, config.threads, [&](int r) {
    std::mt19937_64 rng(restart_seed(config.seed, r));
    std::uniform_real_distribution<double> entry(-config.start_range, config.start_range);
    std::uniform_real_distribution<double> log_scale(-config.scale_range, config.scale_range);
    auto draw = [&] { return config.real_only ? Complex(entry(rng), 0.0) : Complex(entry(rng), entry(rng)); };

    FamilyParams start;
    start.phase = phase;
    switch (config.branch) {
      case BranchPolicy::both: start.branch = r % 2 == 0 ? Branch::plus : Branch::minus; break;
      case BranchPolicy::plus: start.branch = Branch::plus; break;
      case BranchPolicy::minus: start.branch = Branch::minus; break;
    }
    start.v14 = draw();
    start.v23 = draw();
    start.v34 = draw();
    start.l1 = draw();
    for (double& s : start.log_scales) s = log_scale(rng);

    SearchConfig local = config;
    local.seed = rng();
    try {
      runs[r] = local_search(start, local);
    } catch (const DegenerateParameters&) {
      runs[r] = SearchResult{};
    }
  });
  return merge(std::move(runs));
}

SearchResult search_ns(int modes, const SearchConfig& config) {
  config.validate();
  if (modes < 3) throw std::invalid_argument("NS search needs at least 3 modes");
  const int dim = modes * modes;
  const Complex phase = unit_phase(config.theta);
  std::array<FockState, 3> basis;
  for (int k = 0; k < 3; ++k) {
    std::vector<int> occ(modes, 0);
    occ[0] = k;
    occ[1] = 1;
    basis[k] = FockState(std::move(occ));
  }

  std::vector<SearchResult> runs(config.restarts);
  detail::run_indexed(config.restarts, config.threads, [&](int r) {
    std::mt19937_64 rng(restart_seed(config.seed, r));
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::vector<double> x(dim);
    for (double& a : x) a = angle(rng);

    long evaluations = 0;
    double step = 0.5;
    for (double mu : config.penalty_schedule) {
      if (config.max_iterations == 0) break;
      auto penalized = [&](std::span<const double> y) {
        const ModeTransform u = parametrize_unitary(modes, y);
        const Complex a0 = amplitude_permanent(u, basis[0], basis[0]);
        const Complex a1 = amplitude_permanent(u, basis[1], basis[1]);
        const Complex a2 = amplitude_permanent(u, basis[2], basis[2]);
        return -(std::norm(a0) - mu * (std::norm(a1 - a0) + std::norm(a2 - phase * a0)));
      };
      NelderMeadOptions options;
      options.max_evaluations = config.max_iterations;
      options.initial_step = step;
      auto stage = nelder_mead(penalized, std::move(x), options);
      evaluations += stage.evaluations;
      x = std::move(stage.x);
      step = 0.01;
    }

    SearchResult& run = runs[r];
    run.best_v = parametrize_unitary(modes, x).matrix();
    run.best_angles = x;
    run.verification = verify_ns(run.best_v, config.verify_tol, config.theta);
    run.objective = run.verification.success_probability;
    run.evaluations = evaluations;
  });
  return merge(std::move(runs));
}

}  // namespace lingate
