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

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lingate/bounds.hpp"
#include "lingate/dilation.hpp"
#include "lingate/gates.hpp"
#include "lingate/io.hpp"
#include "lingate/optimize.hpp"
#include "lingate/reck.hpp"

namespace {

using lingate::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

double radians(double degrees) { return degrees * lingate::kPi / 180.0; }

void emit(const Json& j, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    lingate::write_json_file(out_file, j);
  }
}

double file_tolerance(const Json& j, double fallback) {
  if (j.is_object() && j.contains("tolerance") && j.at("tolerance").is_number()) {
    return j.at("tolerance").get<double>();
  }
  return fallback;
}

struct VerifyArgs {
  std::string matrix_file;
  std::string gate = "cs";
  double theta_deg = 180.0;
  std::optional<double> tol;
};

int cmd_verify(const VerifyArgs& args) {
  const Json input = lingate::read_json_file(args.matrix_file);
  const lingate::CMatrix v = lingate::matrix_from_json(input);
  const double tol = args.tol.value_or(file_tolerance(input, 1e-9));
  const double theta = radians(args.theta_deg);

  Json out{{"gate", args.gate}, {"theta_deg", args.theta_deg}, {"tolerance", tol}};
  lingate::VerificationReport report;
  if (args.gate == "cs") {
    report = lingate::verify_cs(v, theta, tol);
  } else if (args.gate == "ns") {
    report = lingate::verify_ns(v, tol, theta);
  } else {
    lingate::CMatrix v6 = v;
    if (v.rows() == 4 && v.cols() == 4) {
      // A two-mode CS matrix: embed it into the qubit-pair layout first.
      const auto embedded = lingate::embed_rescaled(v, tol);
      out["embedding_scale"] = embedded.scale;
      v6 = embedded.v_e;
    }
    report = lingate::verify_qubit_pair(v6, theta, tol);
  }
  out["report"] = lingate::to_json(report);
  std::cout << out.dump(2) << '\n';
  return report.passed ? kPass : kFail;
}

struct SearchArgs {
  std::string gate = "cs";
  lingate::SearchConfig config;
  double theta_deg = 180.0;
  std::string branch = "both";
  int modes = 3;
  std::string out_file;
};

int cmd_search(SearchArgs args) {
  auto& config = args.config;
  config.theta = radians(args.theta_deg);
  config.branch = args.branch == "plus"    ? lingate::BranchPolicy::plus
                  : args.branch == "minus" ? lingate::BranchPolicy::minus
                                           : lingate::BranchPolicy::both;
  config.validate();

  const auto start = std::chrono::steady_clock::now();
  const lingate::SearchResult result =
      args.gate == "cs" ? lingate::search_cs(config) : lingate::search_ns(args.modes, config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  Json out{{"gate", args.gate}, {"theta_deg", args.theta_deg}, {"tolerance", config.verify_tol}};
  if (args.gate == "ns") out["modes"] = args.modes;
  const Json fields = lingate::to_json(result);
  for (const auto& [key, value] : fields.items()) out[key] = value;

  lingate::RunManifest manifest;
  manifest.command = "search";
  manifest.config = lingate::to_json(config);
  manifest.config["gate"] = args.gate;
  if (args.gate == "ns") manifest.config["modes"] = args.modes;
  manifest.seed = config.seed;
  manifest.wall_time_seconds = elapsed.count();
  manifest.results_digest = lingate::fnv1a_hex(out.dump());
  out["manifest"] = lingate::to_json(manifest);

  emit(out, args.out_file);
  std::cerr << "best objective " << result.objective << " (restart " << result.best_restart << "), verified "
            << (result.verification.passed ? "yes" : "no") << '\n';
  return result.verification.passed ? kPass : kFail;
}

struct DilateArgs {
  std::string matrix_file;
  std::string out_file;
  std::optional<double> unit_tol;
  bool rescale = false;
};

int cmd_dilate(const DilateArgs& args) {
  const Json input = lingate::read_json_file(args.matrix_file);
  lingate::CMatrix v = lingate::matrix_from_json(input);
  if (v.rows() != v.cols()) throw lingate::DimensionMismatch("dilation needs a square matrix");
  const double unit_tol = args.unit_tol.value_or(file_tolerance(input, 1e-10));

  double scale = 1.0;
  if (args.rescale) {
    scale = std::max(1.0, lingate::max_singular_value(v));
    v /= scale;
  }
  const lingate::DilationResult result = lingate::dilate(v, unit_tol);
  Json out = lingate::to_json(result);
  out["unit_tol"] = unit_tol;
  out["scale"] = scale;
  emit(out, args.out_file);
  return kPass;
}

struct DecomposeArgs {
  std::string matrix_file;
  std::string out_file;
  double tol = 1e-10;
};

int cmd_decompose(const DecomposeArgs& args) {
  const lingate::ModeTransform u(lingate::matrix_from_json(lingate::read_json_file(args.matrix_file)));
  const lingate::InterferometerNetwork network = lingate::decompose(u, args.tol);
  const lingate::CMatrix back = lingate::recompose(network).matrix();
  Json out = lingate::to_json(network);
  out["recompose_error"] = (back - u.matrix()).cwiseAbs().maxCoeff();
  emit(out, args.out_file);
  return kPass;
}

struct SimulateArgs {
  std::string network_file;
  std::string input;
  double threshold = 1e-14;
};

int cmd_simulate(const SimulateArgs& args) {
  const lingate::InterferometerNetwork network =
      lingate::network_from_json(lingate::read_json_file(args.network_file));
  Json parsed;
  try {
    parsed = Json::parse(args.input);
  } catch (const nlohmann::json::exception&) {
    throw lingate::FormatError("--input must be a JSON array such as [1,1,0,0]");
  }
  const lingate::FockState input = lingate::fock_from_json(parsed);
  if (input.modes() != network.m) throw lingate::DimensionMismatch("input state and network disagree on modes");

  const lingate::ModeTransform u = lingate::recompose(network);
  Json outputs = Json::array();
  double total = 0.0;
  for (const auto& out_state : lingate::sector_states(network.m, input.photons())) {
    const lingate::Complex a = lingate::amplitude(u, input, out_state);
    total += std::norm(a);
    if (std::abs(a) <= args.threshold) continue;
    outputs.push_back(
        {{"state", lingate::to_json(out_state)}, {"amplitude", lingate::to_json(a)}, {"probability", std::norm(a)}});
  }
  std::cout << Json{{"input", lingate::to_json(input)}, {"total_probability", total}, {"outputs", outputs}}.dump(2)
            << '\n';
  return kPass;
}

struct BoundsArgs {
  lingate::SearchConfig config;
  std::string out_file;
};

int cmd_bounds(BoundsArgs args) {
  auto& config = args.config;
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const lingate::BellSearchResult result = lingate::maximize_bell_overlap(config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const auto reference = lingate::ProductState::from_rows({{1.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 1.0}});
  Json out{{"overlap", result.overlap},
           {"best_restart", result.best_restart},
           {"best", lingate::to_json(result.best)},
           {"reference_overlap", lingate::bell_overlap(reference)}};
  Json history = Json::array();
  for (const auto& [restart, value] : result.history) history.push_back(Json::array({restart, value}));
  out["history"] = std::move(history);

  lingate::RunManifest manifest;
  manifest.command = "bounds";
  manifest.config = {{"restarts", config.restarts},
                     {"seed", config.seed},
                     {"max_iterations", config.max_iterations},
                     {"start_range", config.start_range},
                     {"threads", config.threads}};
  manifest.seed = config.seed;
  manifest.wall_time_seconds = elapsed.count();
  manifest.results_digest = lingate::fnv1a_hex(out.dump());
  out["manifest"] = lingate::to_json(manifest);
  emit(out, args.out_file);
  return result.overlap >= 1.0 / std::sqrt(2.0) - 1e-6 ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Post-selected linear optics gates: verification, search, dilation and decomposition"};
  app.set_version_flag("--version", std::string(lingate::kVersion));
  app.require_subcommand(1);
  std::function<int()> run;

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a matrix against a gate specification");
  verify_cmd->add_option("--matrix", verify.matrix_file, "Matrix JSON file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--gate", verify.gate, "Gate to check")->check(CLI::IsMember({"cs", "ns", "cs-pair"}));
  verify_cmd->add_option("--theta", verify.theta_deg, "Conditional phase in degrees");
  verify_cmd->add_option("--tol", verify.tol, "Residual tolerance (default: file 'tolerance' or 1e-9)")
      ->check(CLI::PositiveNumber);
  verify_cmd->callback([&] { run = [&] { return cmd_verify(verify); }; });

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Randomized search for post-selected gates");
  search_cmd->add_option("--gate", search.gate, "Gate to search for")->check(CLI::IsMember({"cs", "ns"}));
  search_cmd->add_option("--theta", search.theta_deg, "Conditional phase in degrees");
  search_cmd->add_option("--restarts", search.config.restarts, "Independent random restarts");
  search_cmd->add_option("--seed", search.config.seed, "Master seed");
  search_cmd->add_flag("--real", search.config.real_only, "Restrict the CS family to real parameters");
  search_cmd->add_option("--branch", search.branch, "CS family branch")
      ->check(CLI::IsMember({"both", "plus", "minus"}));
  search_cmd->add_option("--modes", search.modes, "Modes for the NS search");
  search_cmd->add_option("--max-iterations", search.config.max_iterations, "Evaluations per simplex run");
  search_cmd->add_option("--verify-tol", search.config.verify_tol, "Tolerance for verifying the result");
  search_cmd->add_option("--threads", search.config.threads, "Worker threads (0 = all cores)");
  search_cmd->add_option("--out", search.out_file, "Output JSON file (default: stdout)");
  search_cmd->callback([&] { run = [&] { return cmd_search(search); }; });

  DilateArgs dilate;
  auto* dilate_cmd = app.add_subcommand("dilate", "Extend a contraction to a unitary");
  dilate_cmd->add_option("--matrix", dilate.matrix_file, "Matrix JSON file")->required()->check(CLI::ExistingFile);
  dilate_cmd->add_option("--unit-tol", dilate.unit_tol,
                         "Singular values this close to one count as one (default: file 'tolerance' or 1e-10)");
  dilate_cmd->add_flag("--rescale", dilate.rescale, "Divide by the largest singular value when it exceeds one");
  dilate_cmd->add_option("--out", dilate.out_file, "Output JSON file (default: stdout)");
  dilate_cmd->callback([&] { run = [&] { return cmd_dilate(dilate); }; });

  DecomposeArgs decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "Triangular beamsplitter decomposition of a unitary");
  decompose_cmd->add_option("--matrix", decompose.matrix_file, "Matrix JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  decompose_cmd->add_option("--tol", decompose.tol, "Unitarity tolerance");
  decompose_cmd->add_option("--out", decompose.out_file, "Output JSON file (default: stdout)");
  decompose_cmd->callback([&] { run = [&] { return cmd_decompose(decompose); }; });

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Output amplitudes of a network for a Fock input");
  simulate_cmd->add_option("--network", simulate.network_file, "Network JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  simulate_cmd->add_option("--input", simulate.input, "Input occupations, e.g. [1,1,0,0]")->required();
  simulate_cmd->add_option("--threshold", simulate.threshold, "Omit outputs with smaller amplitude");
  simulate_cmd->callback([&] { run = [&] { return cmd_simulate(simulate); }; });

  BoundsArgs bounds;
  bounds.config.restarts = 100;
  auto* bounds_cmd = app.add_subcommand("bounds", "Maximize the Bell-state overlap of product states");
  bounds_cmd->add_option("--restarts", bounds.config.restarts, "Independent random restarts");
  bounds_cmd->add_option("--seed", bounds.config.seed, "Master seed");
  bounds_cmd->add_option("--threads", bounds.config.threads, "Worker threads (0 = all cores)");
  bounds_cmd->add_option("--out", bounds.out_file, "Output JSON file (default: stdout)");
  bounds_cmd->callback([&] { run = [&] { return cmd_bounds(bounds); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    return run();
  } catch (const lingate::FormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const lingate::DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const lingate::InvalidState& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const lingate::Error& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kFail;
  }
}
