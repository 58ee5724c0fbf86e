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

#ifndef QCS_TOOLS_SCENARIOS_H
#define QCS_TOOLS_SCENARIOS_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "config.h"
#include "json.hpp"

namespace qcs::tools {

/// One verified quantity. An upper check passes when measured <= tolerance,
/// a lower check when measured > tolerance. Boolean checks use measured 0
/// (holds) or 1 (violated) with tolerance 0.
struct Check {
  enum class Kind { kUpper, kLower };
  std::string name;
  double measured = 0;
  double tolerance = 0;
  Kind kind = Kind::kUpper;
  bool passed = false;
};

struct Artifact {
  std::string filename;
  std::string content;
};

struct ScenarioReport {
  std::string name;
  std::vector<Check> checks;
  nlohmann::ordered_json data;
  std::vector<Artifact> artifacts;  // <name>.json and <name>.txt plus scenario extras

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

ScenarioReport run_algebra(const ScenarioConfig& cfg);
ScenarioReport run_entanglement(const ScenarioConfig& cfg);
ScenarioReport run_interference(const ScenarioConfig& cfg);
ScenarioReport run_cnot(const ScenarioConfig& cfg);
ScenarioReport run_chsh(const ScenarioConfig& cfg);
ScenarioReport run_exchange(const ScenarioConfig& cfg);
ScenarioReport run_environment(const ScenarioConfig& cfg);

/// Names accepted by run_scenario, in run_all order.
const std::vector<std::string>& scenario_names();
/// Throws std::invalid_argument for an unknown name.
ScenarioReport run_scenario(std::string_view name, const ScenarioConfig& cfg);

struct Summary {
  std::vector<ScenarioReport> reports;
  std::vector<Artifact> artifacts;  // summary.json, summary.txt
  std::size_t failures() const;
};

/// Every scenario in fixed order. With parallel = true the scenarios run on
/// separate threads; the output is identical either way.
Summary run_all(const ScenarioConfig& cfg, bool parallel = false);

/// %.17g
std::string format_double(double x);

/// Writes artifacts into dir (created if missing). Throws std::runtime_error.
void write_artifacts(const std::string& dir, const std::vector<Artifact>& artifacts);

}  // namespace qcs::tools

#endif  // QCS_TOOLS_SCENARIOS_H
