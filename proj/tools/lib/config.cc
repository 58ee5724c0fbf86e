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

#include "config.h"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qcs::tools {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(std::string_view key, std::string_view v) {
  const std::string s(v);
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(x)) {
    throw std::invalid_argument("bad number for '" + std::string(key) + "': " + s);
  }
  return x;
}

std::uint64_t to_uint(std::string_view key, std::string_view v) {
  std::uint64_t x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) {
    throw std::invalid_argument("bad unsigned integer for '" + std::string(key) + "': " + std::string(v));
  }
  return x;
}

}  // namespace

void set_config_value(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "delta") {
    cfg.delta = to_double(key, value);
  } else if (key == "grid") {
    cfg.grid = to_uint(key, value);
  } else if (key == "periods") {
    cfg.periods = to_double(key, value);
  } else if (key == "seed") {
    cfg.seed = to_uint(key, value);
  } else if (key == "env_states") {
    const auto z = to_uint(key, value);
    if (z > 64) throw std::invalid_argument("env_states must be in 1..64");
    cfg.env_states = static_cast<int>(z);
  } else if (key == "perturb") {
    cfg.perturb = to_double(key, value);
  } else if (key == "states") {
    cfg.states = to_uint(key, value);
  } else if (key == "samples") {
    cfg.samples = to_uint(key, value);
  } else if (key == "chsh_grid") {
    cfg.chsh_grid = to_uint(key, value);
  } else if (key == "hamiltonians") {
    cfg.hamiltonians = to_uint(key, value);
  } else if (key == "tolerance_scale") {
    cfg.tolerance_scale = to_double(key, value);
  } else if (key == "out") {
    if (value.empty()) throw std::invalid_argument("out must not be empty");
    cfg.out_dir = std::string(value);
  } else {
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
  }
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig cfg) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    try {
      set_config_value(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate(cfg);
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), base);
}

void validate(const ScenarioConfig& cfg) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(cfg.delta != 0.0 && std::abs(cfg.delta) <= 1e6, "delta must be nonzero with |delta| <= 1e6");
  require(cfg.grid >= 3 && cfg.grid <= 1000000, "grid must be in 3..1000000");
  require(cfg.periods > 0 && cfg.periods <= 1000, "periods must be in (0, 1000]");
  require(cfg.env_states >= 1 && cfg.env_states <= 64, "env_states must be in 1..64");
  require(cfg.perturb >= 0 && cfg.perturb <= 1, "perturb must be in [0, 1]");
  require(cfg.states >= 1 && cfg.states <= 100000, "states must be in 1..100000");
  require(cfg.samples <= 100000, "samples must be <= 100000");
  require(cfg.chsh_grid >= 8 && cfg.chsh_grid <= 128, "chsh_grid must be in 8..128");
  require(cfg.hamiltonians <= 10000, "hamiltonians must be <= 10000");
  require(cfg.tolerance_scale >= 0, "tolerance_scale must be >= 0");
  require(!cfg.out_dir.empty(), "out must not be empty");
}

}  // namespace qcs::tools
