// Copyright 2026 The subdiff Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBDIFF_TOOLS_CLI_HPP_
#define SUBDIFF_TOOLS_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace subdiff::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

// Entry point shared by the binary and the tests. Machine-readable JSON goes
// to `out`, the human summary and diagnostics to `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
};

struct VerifyOptions {
  std::string suite;
  int n = 0;  // 0 selects the suite default
  int k = 2;
  int trials = 0;  // 0 selects the suite default
  std::uint64_t seed = 0;
  double t = 0.7;  // series suite evaluation time
  int truncation = 12;
  double edge_prob = 0.5;
  // Overrides the suite's built-in tolerance when set.
  std::optional<double> tolerance;
  std::optional<std::filesystem::path> train;
};

struct VerifyReport {
  std::string suite;
  nlohmann::ordered_json config;
  std::vector<Check> checks;

  bool pass() const;
  nlohmann::ordered_json ToJson() const;
};

inline const std::vector<std::string>& VerifySuites() {
  static const std::vector<std::string> kSuites = {
      "eq5", "finitediff", "series", "basis", "equivariance"};
  return kSuites;
}

// Throws subdiff::InputError for an unknown suite.
VerifyReport RunVerify(const VerifyOptions& opts);

}  // namespace subdiff::cli

#endif  // SUBDIFF_TOOLS_CLI_HPP_
