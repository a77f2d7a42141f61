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

#include "lingate/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace lingate {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

double require_number(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number()) throw FormatError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw FormatError("expected a complex number as [re, im], got " + j.dump());
}

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

CMatrix matrix_from_json(const Json& j) {
  if (j.is_object()) {
    if (j.contains("entries")) return matrix_from_json(j.at("entries"));
    for (const char* key : {"matrix", "best_v", "unitary"}) {
      if (j.contains(key)) return matrix_from_json(j.at(key));
    }
    throw FormatError("no matrix found in object");
  }
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    throw FormatError("matrix entries must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw FormatError("matrix rows have different lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[c]);
  }
  return m;
}

Json to_json(const FockState& s) { return Json(s.occupations()); }

FockState fock_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("a Fock state is an array of occupation numbers");
  std::vector<int> occ;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw FormatError("occupation numbers must be integers");
    occ.push_back(v.get<int>());
  }
  try {
    return FockState(std::move(occ));
  } catch (const InvalidState& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const InterferometerNetwork& network) {
  Json elements = Json::array();
  for (const auto& element : network.elements) {
    if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
      elements.push_back(
          {{"type", "bs"}, {"modes", Json::array({bs->p, bs->q})}, {"theta", bs->theta}, {"phi", bs->phi}});
    } else {
      const auto& ps = std::get<PhaseShifter>(element);
      elements.push_back({{"type", "ps"}, {"mode", ps.mode}, {"phi", ps.phi}});
    }
  }
  return Json{{"m", network.m},
              {"beamsplitters", network.beamsplitter_count()},
              {"elements", std::move(elements)},
              {"output_phases", network.output_phases}};
}

InterferometerNetwork network_from_json(const Json& j) {
  return guarded("network", [&] {
    InterferometerNetwork network;
    network.m = require_int(j, "m");
    if (network.m < 1) throw FormatError("network needs at least one mode");
    auto check_mode = [&](int mode) {
      if (mode < 0 || mode >= network.m) throw FormatError("network mode index out of range");
      return mode;
    };
    for (const Json& e : require(j, "elements")) {
      const std::string type = require(e, "type").get<std::string>();
      if (type == "bs") {
        const Json& modes = require(e, "modes");
        if (!modes.is_array() || modes.size() != 2) throw FormatError("beamsplitter needs two modes");
        BeamSplitter bs{check_mode(modes[0].get<int>()), check_mode(modes[1].get<int>()),
                        require_number(e, "theta"), e.value("phi", 0.0)};
        if (bs.p == bs.q) throw FormatError("beamsplitter modes must differ");
        network.elements.emplace_back(bs);
      } else if (type == "ps") {
        network.elements.emplace_back(PhaseShifter{check_mode(require_int(e, "mode")), require_number(e, "phi")});
      } else {
        throw FormatError("unknown element type '" + type + "'");
      }
    }
    if (j.contains("output_phases")) {
      network.output_phases = j.at("output_phases").get<std::vector<double>>();
      if (static_cast<int>(network.output_phases.size()) != network.m) {
        throw FormatError("output_phases must have one entry per mode");
      }
    } else {
      network.output_phases.assign(network.m, 0.0);
    }
    return network;
  });
}

Json to_json(const FamilyParams& params) {
  return Json{{"v14", to_json(params.v14)},
              {"v23", to_json(params.v23)},
              {"v34", to_json(params.v34)},
              {"l1", to_json(params.l1)},
              {"phase", to_json(params.phase)},
              {"branch", params.branch == Branch::plus ? "plus" : "minus"},
              {"log_scales", params.log_scales}};
}

FamilyParams family_params_from_json(const Json& j) {
  return guarded("family parameters", [&] {
    FamilyParams p;
    p.v14 = complex_from_json(require(j, "v14"));
    p.v23 = complex_from_json(require(j, "v23"));
    p.v34 = complex_from_json(require(j, "v34"));
    p.l1 = complex_from_json(require(j, "l1"));
    p.phase = complex_from_json(require(j, "phase"));
    const std::string branch = require(j, "branch").get<std::string>();
    if (branch != "plus" && branch != "minus") throw FormatError("branch must be plus or minus");
    p.branch = branch == "plus" ? Branch::plus : Branch::minus;
    if (j.contains("log_scales")) p.log_scales = j.at("log_scales").get<std::array<double, 6>>();
    return p;
  });
}

Json to_json(const VerificationReport& report) {
  return Json{{"passed", report.passed},
              {"max_constraint_residual", report.max_constraint_residual},
              {"success_probability", report.success_probability},
              {"theta_measured_deg", report.theta_measured * 180.0 / kPi},
              {"max_singular_value", report.max_singular_value}};
}

Json to_json(const SearchConfig& config) {
  const char* branch = config.branch == BranchPolicy::both   ? "both"
                       : config.branch == BranchPolicy::plus ? "plus"
                                                             : "minus";
  return Json{{"theta_deg", config.theta * 180.0 / kPi},
              {"restarts", config.restarts},
              {"seed", config.seed},
              {"perturbation_scale", config.perturbation_scale},
              {"convergence_tol", config.convergence_tol},
              {"max_iterations", config.max_iterations},
              {"polish_iterations", config.polish_iterations},
              {"polish_attempts", config.polish_attempts},
              {"real_only", config.real_only},
              {"branch", branch},
              {"start_range", config.start_range},
              {"scale_range", config.scale_range},
              {"penalty_schedule", config.penalty_schedule},
              {"verify_tol", config.verify_tol},
              {"threads", config.threads}};
}

Json to_json(const SearchResult& result) {
  Json j{{"objective", result.objective},
         {"best_restart", result.best_restart},
         {"evaluations", result.evaluations},
         {"verification", to_json(result.verification)},
         {"best_v", to_json(result.best_v)}};
  if (result.best_params) {
    j["best_params"] = to_json(*result.best_params);
    j["v11_v22_gap"] = result.v11_v22_gap;
  }
  if (!result.best_angles.empty()) j["best_angles"] = result.best_angles;
  Json history = Json::array();
  for (const auto& [restart, value] : result.history) history.push_back(Json::array({restart, value}));
  j["history"] = std::move(history);
  return j;
}

Json to_json(const DilationResult& result) {
  return Json{{"extra_modes", result.extra_modes},
              {"lambda", result.lambda},
              {"block_deviation", result.block_deviation},
              {"unitarity_residual", result.unitary.unitarity_residual()},
              {"unitary", to_json(result.unitary.matrix())}};
}

Json to_json(const ProductState& ps) {
  Json factors = Json::array();
  for (std::size_t k = 0; k < ps.factors.size(); ++k) {
    const Complex s = k == 0 ? ps.prefactor : Complex(1.0);
    Json f = Json::array({to_json(s * ps.factors[k].constant)});
    for (Eigen::Index j = 0; j < ps.factors[k].coeffs.size(); ++j) f.push_back(to_json(s * ps.factors[k].coeffs(j)));
    factors.push_back(std::move(f));
  }
  return factors;
}

ProductState product_state_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("a product state is a non-empty list of factors");
  ProductState ps;
  for (const Json& f : j) {
    if (!f.is_array() || f.size() < 2) throw FormatError("a factor is [constant, c_1, ..., c_m]");
    LinearForm form;
    form.constant = complex_from_json(f[0]);
    form.coeffs.resize(static_cast<Eigen::Index>(f.size() - 1));
    for (std::size_t i = 1; i < f.size(); ++i) form.coeffs(i - 1) = complex_from_json(f[i]);
    if (!ps.factors.empty() && form.coeffs.size() != ps.factors.front().coeffs.size()) {
      throw FormatError("factors act on different numbers of modes");
    }
    ps.factors.push_back(std::move(form));
  }
  return ps;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const RunManifest& manifest) {
  return Json{{"command", manifest.command},
              {"config", manifest.config},
              {"seed", manifest.seed},
              {"version", kVersion},
              {"wall_time_seconds", manifest.wall_time_seconds},
              {"results_digest", manifest.results_digest}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw FormatError("failed writing " + path.string());
}

}  // namespace lingate
