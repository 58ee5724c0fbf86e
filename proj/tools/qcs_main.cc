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

#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "config.h"
#include "scenarios.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

void report_failures(const qcs::tools::ScenarioReport& r) {
  for (const auto& c : r.checks) {
    if (!c.passed) {
      std::fprintf(stderr, "FAIL %s.%s measured=%.17g tolerance=%.3g\n", r.name.c_str(), c.name.c_str(), c.measured,
                   c.tolerance);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-bit quantum subsystem scenarios"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> grid;
  std::optional<double> delta;
  std::optional<int> env_states;
  std::optional<double> perturb;
  bool parallel = false;
  bool inject_failure = false;
  bool quiet = false;

  app.add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "master seed");
  app.add_option("--grid", grid, "interference grid points");
  app.add_option("--delta", delta, "interference frequency splitting");
  app.add_option("--env-states", env_states, "environment states Z");
  app.add_option("--perturb", perturb, "perturbation magnitude in [0, 1]");
  app.add_flag("--parallel", parallel, "run scenarios of 'all' concurrently");
  app.add_flag("--inject-failure", inject_failure, "zero every tolerance (test mode)");
  app.add_flag("-q,--quiet", quiet, "do not print the text report");

  std::vector<std::string> commands = qcs::tools::scenario_names();
  commands.push_back("all");
  for (const auto& name : commands) {
    app.add_subcommand(name, name == "all" ? "run every scenario" : "run the " + name + " scenario");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  qcs::tools::ScenarioConfig cfg;
  try {
    if (!config_path.empty()) cfg = qcs::tools::load_config_file(config_path, cfg);
    if (out_dir) cfg.out_dir = *out_dir;
    if (seed) cfg.seed = *seed;
    if (grid) cfg.grid = *grid;
    if (delta) cfg.delta = *delta;
    if (env_states) cfg.env_states = *env_states;
    if (perturb) cfg.perturb = *perturb;
    if (inject_failure) cfg.tolerance_scale = 0.0;
    qcs::tools::validate(cfg);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "all") {
      const auto summary = qcs::tools::run_all(cfg, parallel);
      for (const auto& r : summary.reports) qcs::tools::write_artifacts(cfg.out_dir, r.artifacts);
      qcs::tools::write_artifacts(cfg.out_dir, summary.artifacts);
      if (!quiet) std::cout << summary.artifacts.back().content;
      for (const auto& r : summary.reports) report_failures(r);
      if (summary.failures() > 0) {
        std::fprintf(stderr, "%zu check(s) failed\n", summary.failures());
        return kExitFailed;
      }
      return kExitOk;
    }
    const auto report = qcs::tools::run_scenario(command, cfg);
    qcs::tools::write_artifacts(cfg.out_dir, report.artifacts);
    if (!quiet) std::cout << report.artifacts[1].content;
    report_failures(report);
    return report.passed() ? kExitOk : kExitFailed;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  }
}
