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

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "config.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "scenarios.h"

using namespace qcs::tools;
using nlohmann::json;

namespace {

ScenarioConfig small_config() {
  ScenarioConfig cfg;
  cfg.states = 5;
  cfg.samples = 3;
  cfg.chsh_grid = 16;
  cfg.hamiltonians = 3;
  cfg.grid = 200;
  return cfg;
}

const std::string& artifact(const ScenarioReport& r, const std::string& filename) {
  for (const auto& a : r.artifacts) {
    if (a.filename == filename) return a.content;
  }
  throw std::runtime_error("missing artifact " + filename);
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qcs_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QCS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Config, parses_comments_and_whitespace) {
  const auto cfg = parse_config("# header\n\n  delta = 2.5   # trailing\ngrid=50\nseed = 7\nout = results\r\n");
  EXPECT_EQ(cfg.delta, 2.5);
  EXPECT_EQ(cfg.grid, 50u);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(cfg.out_dir, "results");
  EXPECT_EQ(cfg.env_states, 2);
}

TEST(Config, later_values_and_base_are_respected) {
  ScenarioConfig base;
  base.perturb = 0.25;
  const auto cfg = parse_config("env_states = 3\nenv_states = 4\n", base);
  EXPECT_EQ(cfg.env_states, 4);
  EXPECT_EQ(cfg.perturb, 0.25);
}

TEST(Config, rejects_unknown_and_malformed) {
  EXPECT_THROW(parse_config("colour = red\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("delta 2\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("delta = two\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("grid = -5\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("grid = 5.5\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("delta = nan\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("out =\n"), std::invalid_argument);
  try {
    parse_config("delta = 1\n\nbogus = 3\n");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
  }
}

TEST(Config, range_checks) {
  EXPECT_THROW(parse_config("delta = 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("grid = 2\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("env_states = 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("env_states = 65\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("perturb = 1.5\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("chsh_grid = 4\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("tolerance_scale = -1\n"), std::invalid_argument);
  EXPECT_NO_THROW(parse_config("delta = -2\nperturb = 0\n"));
  EXPECT_THROW(load_config_file("/nonexistent/qcs.cfg"), std::invalid_argument);
}

TEST(Scenarios, every_scenario_passes_on_small_config) {
  for (const auto& name : scenario_names()) {
    const auto r = run_scenario(name, small_config());
    EXPECT_TRUE(r.passed()) << name;
    EXPECT_FALSE(r.checks.empty()) << name;
    EXPECT_EQ(r.artifacts.at(0).filename, name + ".json");
    EXPECT_EQ(r.artifacts.at(1).filename, name + ".txt");
  }
  EXPECT_THROW(run_scenario("nope", small_config()), std::invalid_argument);
}

TEST(Scenarios, entanglement_json_keys) {
  const auto r = run_entanglement(small_config());
  const json doc = json::parse(artifact(r, "entanglement.json"));
  const json& plus = doc["data"]["states"]["psi_plus"];
  for (const char* k : {"w_pp", "w_pm", "w_mp", "w_mm"}) EXPECT_TRUE(plus["outcomes"].contains(k)) << k;
  for (const char* k : {"p_1_given_1", "p_1_given_m1", "p_m1_given_1", "p_m1_given_m1"}) {
    EXPECT_TRUE(plus["conditionals"][k].is_number()) << k;
  }
  EXPECT_EQ(plus["outcomes"].size(), 4u);
  EXPECT_EQ(plus["conditionals"].size(), 4u);
  EXPECT_DOUBLE_EQ(plus["outcomes"]["w_pm"].get<double>(), 0.5);
  EXPECT_EQ(plus["rho"].size(), 15u);
  EXPECT_EQ(doc["scenario"], "entanglement");
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_EQ(artifact(r, "entanglement_ensemble.csv").rfind("state,k,rho_k,sigma_k,abs_diff\n", 0), 0u);
}

TEST(Scenarios, interference_csv_layout) {
  auto cfg = small_config();
  cfg.grid = 17;
  const auto r = run_interference(cfg);
  const std::string& csv = artifact(r, "interference.csv");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line,
            "t,rho_1,rho_2,rho_3,rho_4,rho_5,rho_6,rho_7,rho_8,rho_9,rho_10,rho_11,rho_12,rho_13,rho_14,rho_15,"
            "expect_T2");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 16);
  }
  EXPECT_EQ(rows, 17u);
}

TEST(Scenarios, chsh_and_exchange_json) {
  const json chsh = json::parse(artifact(run_chsh(small_config()), "chsh.json"));
  const json& opt = chsh["data"]["optimal"];
  for (const char* k : {"a", "a_prime", "b", "b_prime"}) EXPECT_TRUE(opt["settings"][k].is_number());
  EXPECT_EQ(opt["E"].size(), 4u);
  EXPECT_NEAR(opt["S"].get<double>(), 2 * std::sqrt(2.0), 1e-9);
  EXPECT_TRUE(opt["bound_flags"]["exceeds_classical"].get<bool>());
  EXPECT_FALSE(opt["bound_flags"]["exceeds_tsirelson"].get<bool>());

  const json ex = json::parse(artifact(run_exchange(small_config()), "exchange.json"));
  for (const auto& c : ex["data"]["classifications"]) {
    EXPECT_TRUE(c.contains("defect"));
    EXPECT_TRUE(c["classification"].is_string());
  }
  EXPECT_EQ(ex["data"]["classifications"][0]["classification"], "antisymmetric-fermion");
}

TEST(Scenarios, environment_binary_dump) {
  auto cfg = small_config();
  cfg.env_states = 3;
  const auto r = run_environment(cfg);
  const std::string& bin = artifact(r, "environment_ensemble.qce");
  ASSERT_EQ(bin.size(), 8u + 32768u * 3u * 8u);
  EXPECT_EQ(bin.substr(0, 4), "QCE1");
  EXPECT_EQ(static_cast<unsigned char>(bin[4]), 3);
  std::istringstream records(artifact(r, "environment_states.txt"));
  std::string line;
  std::size_t n = 0;
  while (std::getline(records, line)) ++n;
  EXPECT_EQ(n, 5u);
}

TEST(Scenarios, zero_perturbation_fails_second_moment_check) {
  auto cfg = small_config();
  cfg.perturb = 0.0;
  const auto r = run_environment(cfg);
  EXPECT_FALSE(r.passed());
  ASSERT_EQ(r.failures(), 1u);
  for (const auto& c : r.checks) {
    if (!c.passed) EXPECT_EQ(c.name, "min_second_moment_shift");
  }
}

TEST(RunAll, deterministic_and_parallel_identical) {
  const auto a = run_all(small_config());
  const auto b = run_all(small_config(), true);
  EXPECT_EQ(a.failures(), 0u);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    ASSERT_EQ(a.reports[i].artifacts.size(), b.reports[i].artifacts.size());
    for (std::size_t j = 0; j < a.reports[i].artifacts.size(); ++j) {
      EXPECT_EQ(a.reports[i].artifacts[j].content, b.reports[i].artifacts[j].content)
          << a.reports[i].artifacts[j].filename;
    }
  }
  EXPECT_EQ(a.artifacts[0].content, b.artifacts[0].content);
  const json summary = json::parse(a.artifacts[0].content);
  EXPECT_TRUE(summary["passed"].get<bool>());
  for (const auto& s : summary["scenarios"]) {
    for (const auto& c : s["checks"]) {
      EXPECT_TRUE(c.contains("tolerance"));
      EXPECT_TRUE(c.contains("measured"));
    }
  }
}

TEST(RunAll, seed_changes_random_scenarios_only) {
  auto cfg = small_config();
  const auto a = run_all(cfg);
  cfg.seed += 1;
  const auto b = run_all(cfg);
  EXPECT_EQ(b.failures(), 0u);
  EXPECT_EQ(artifact(a.reports[3], "cnot.json"), artifact(b.reports[3], "cnot.json"));
  EXPECT_NE(artifact(a.reports[6], "environment.json"), artifact(b.reports[6], "environment.json"));
}

TEST(RunAll, injected_tolerance_corruption_is_surfaced) {
  auto cfg = small_config();
  cfg.tolerance_scale = 0.0;
  const auto s = run_all(cfg);
  EXPECT_GT(s.failures(), 0u);
  const json summary = json::parse(s.artifacts[0].content);
  EXPECT_FALSE(summary["passed"].get<bool>());
  EXPECT_EQ(summary["failures"].get<std::size_t>(), s.failures());
}

TEST(Cli, exit_codes) {
  const auto dir = scratch_dir("exit");
  const std::string small = " --seed 3 --grid 100";
  EXPECT_EQ(run_cli("cnot --out " + dir.string() + small), 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "cnot.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "cnot.txt"));
  EXPECT_EQ(run_cli("exchange --inject-failure --out " + dir.string()), 1);
  EXPECT_EQ(run_cli("interference --grid 1 --out " + dir.string()), 2);
  EXPECT_EQ(run_cli("interference --delta x --out " + dir.string()), 2);
  EXPECT_EQ(run_cli("--out " + dir.string()), 2);
  EXPECT_EQ(run_cli("teleport --out " + dir.string()), 2);
  EXPECT_EQ(run_cli("cnot --config /nonexistent.cfg --out " + dir.string()), 2);

  const auto cfg = dir / "bad.cfg";
  std::ofstream(cfg) << "delta = 1\nwavelength = 3\n";
  EXPECT_EQ(run_cli("cnot --config " + cfg.string() + " --out " + dir.string()), 2);
}

TEST(Cli, flags_override_config_file) {
  const auto dir = scratch_dir("override");
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "# interference run\ngrid = 40\ndelta = 3\n";
  ASSERT_EQ(run_cli("interference --config " + cfg.string() + " --grid 25 --out " + dir.string()), 0);
  const json doc = json::parse(read_file(dir / "interference.json"));
  EXPECT_EQ(doc["data"]["grid"].get<int>(), 25);
  EXPECT_EQ(doc["data"]["delta"].get<double>(), 3.0);
}

TEST(Cli, repeated_runs_are_byte_identical) {
  const auto a = scratch_dir("det_a"), b = scratch_dir("det_b");
  ASSERT_EQ(run_cli("environment --seed 11 --env-states 3 --perturb 0.3 --out " + a.string()), 0);
  ASSERT_EQ(run_cli("environment --seed 11 --env-states 3 --perturb 0.3 --out " + b.string()), 0);
  for (const char* f : {"environment.json", "environment.txt", "environment.csv", "environment_ensemble.qce"}) {
    EXPECT_EQ(read_file(a / f), read_file(b / f)) << f;
  }
}
