// Copyright 2026 The QCS Authors
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

#ifndef QCS_TOOLS_CONFIG_H
#define QCS_TOOLS_CONFIG_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace qcs::tools {

struct ScenarioConfig {
  double delta = 1.0;              // interference frequency splitting
  std::size_t grid = 1000;         // interference time points
  double periods = 2.0;            // interference span in units of 2 pi / delta
  std::uint64_t seed = 20260515;   // master seed for random states and perturbations
  int env_states = 2;              // Z
  double perturb = 0.5;            // perturbation magnitude
  std::size_t states = 100;        // random states in the environment scenario
  std::size_t samples = 50;        // perturbation samples
  std::size_t chsh_grid = 64;      // angles per CHSH setting
  std::size_t hamiltonians = 20;   // random exchange-symmetric Hamiltonians
  double tolerance_scale = 1.0;    // multiplies every check tolerance (test hook)
  std::string out_dir = "qcs_out";
};

/// Parses flat `key = value` text with `#` comments on top of `base`.
/// Unknown keys, malformed values and out-of-range values throw
/// std::invalid_argument with the line number.
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base = {});
ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base = {});

/// Applies one key/value pair (same keys as the file format).
void set_config_value(ScenarioConfig& cfg, std::string_view key, std::string_view value);

/// Range checks; throws std::invalid_argument.
void validate(const ScenarioConfig& cfg);

}  // namespace qcs::tools

#endif  // QCS_TOOLS_CONFIG_H
