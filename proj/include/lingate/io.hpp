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
#include <filesystem>
#include <string>

#include "json.hpp"
#include "lingate/bounds.hpp"
#include "lingate/dilation.hpp"
#include "lingate/family.hpp"
#include "lingate/gates.hpp"
#include "lingate/optimize.hpp"
#include "lingate/reck.hpp"

namespace lingate {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Malformed or unreadable input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Complex numbers are [re, im]; a bare number is read as real.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"rows", "cols", "entries"} with row-major [re, im] entries.
Json to_json(const CMatrix& m);
/// Accepts a bare entries array, an object with "entries", or an object that
/// nests a matrix under "matrix", "best_v" or "unitary".
CMatrix matrix_from_json(const Json& j);

Json to_json(const FockState& s);
FockState fock_from_json(const Json& j);

/// {"m", "elements": [{"type": "bs", "modes": [p, q], "theta", "phi"} |
/// {"type": "ps", "mode", "phi"}], "output_phases"}
Json to_json(const InterferometerNetwork& network);
InterferometerNetwork network_from_json(const Json& j);

Json to_json(const FamilyParams& params);
FamilyParams family_params_from_json(const Json& j);

Json to_json(const VerificationReport& report);
Json to_json(const SearchConfig& config);
Json to_json(const SearchResult& result);
Json to_json(const DilationResult& result);

/// List of factors, each [constant, c_1, ..., c_m]; the prefactor is folded
/// into the first factor.
Json to_json(const ProductState& ps);
ProductState product_state_from_json(const Json& j);

/// 64-bit FNV-1a of `text`, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

struct RunManifest {
  std::string command;
  Json config;
  std::uint64_t seed = 0;
  double wall_time_seconds = 0.0;
  /// Digest of the serialized results.
  std::string results_digest;
};

Json to_json(const RunManifest& manifest);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace lingate
