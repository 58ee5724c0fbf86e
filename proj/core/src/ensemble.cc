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

#include "qcs/ensemble.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

namespace qcs {
namespace {

constexpr char kMagic[4] = {'Q', 'C', 'E', '1'};

// Pairwise reduction of f(0) + ... + f(n-1); fixed tree shape for any n.
template <typename F>
double tree_sum(std::size_t begin, std::size_t end, const F& f) {
  if (end - begin <= 8) {
    double s = 0;
    for (std::size_t i = begin; i < end; ++i) s += f(i);
    return s;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return tree_sum(begin, mid, f) + tree_sum(mid, end, f);
}

inline double sigma_of(std::size_t flat_index, int k) {
  return ((flat_index >> (k - 1)) & 1u) ? -1.0 : 1.0;
}

void check_index(int k) {
  if (k < 1 || k > kNumSpins) throw std::out_of_range("spin index must be in 1..15");
}

void check_env(int num_env) {
  if (num_env < 1) throw std::invalid_argument("number of environment states must be >= 1");
}

ConstraintResiduals residuals_of(std::span<const double> d) {
  ConstraintResiduals r;
  r.total = tree_sum(0, d.size(), [&](std::size_t i) { return d[i]; });
  for (int k = 1; k <= kNumSpins; ++k) {
    r.first_moments[k - 1] = tree_sum(0, d.size(), [&](std::size_t i) { return sigma_of(i, k) * d[i]; });
  }
  return r;
}

}  // namespace

SpinConfig::SpinConfig(std::uint32_t index) : index_(index) {
  if (index >= kNumSpinConfigs) throw std::out_of_range("spin configuration index must be < 32768");
}

int SpinConfig::sigma(int k) const {
  check_index(k);
  return ((index_ >> (k - 1)) & 1u) ? -1 : 1;
}

int classical_observable_value(SpinConfig config, int k) { return config.sigma(k); }

ClassicalEnsemble ClassicalEnsemble::from_table(int num_env, std::vector<double> probs) {
  check_env(num_env);
  if (probs.size() != kNumSpinConfigs * static_cast<std::size_t>(num_env)) {
    throw std::invalid_argument("ensemble table must have 32768 * Z entries");
  }
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw std::invalid_argument("ensemble probabilities must be >= 0");
  }
  ClassicalEnsemble e;
  e.num_env_ = num_env;
  e.probs_ = std::move(probs);
  const double t = e.total();
  if (std::abs(t - 1.0) > kProbabilityTol) {
    throw std::invalid_argument("ensemble probabilities sum to " + std::to_string(t) + ", not 1");
  }
  return e;
}

double ClassicalEnsemble::prob(SpinConfig config, int zeta) const {
  if (zeta < 0 || zeta >= num_env_) throw std::out_of_range("environment index out of range");
  return probs_[static_cast<std::size_t>(zeta) * kNumSpinConfigs + config.index()];
}

double ClassicalEnsemble::total() const { return pairwise_sum(probs_); }

double ConstraintResiduals::max_abs() const {
  double m = std::abs(total);
  for (double x : first_moments) m = std::max(m, std::abs(x));
  return m;
}

EnvPerturbation::EnvPerturbation(int num_env)
    : num_env_(num_env), delta_(kNumSpinConfigs * static_cast<std::size_t>(std::max(num_env, 1)), 0.0) {
  check_env(num_env);
}

EnvPerturbation::EnvPerturbation(int num_env, std::vector<double> delta) : num_env_(num_env), delta_(std::move(delta)) {
  check_env(num_env);
  if (delta_.size() != kNumSpinConfigs * static_cast<std::size_t>(num_env)) {
    throw std::invalid_argument("perturbation table must have 32768 * Z entries");
  }
}

bool EnvPerturbation::is_zero() const {
  return std::all_of(delta_.begin(), delta_.end(), [](double x) { return x == 0.0; });
}

ConstraintResiduals EnvPerturbation::residuals() const { return residuals_of(delta_); }

bool EnvPerturbation::is_admissible_for(const ClassicalEnsemble& base) const {
  if (base.num_env() != num_env_) return false;
  if (residuals().max_abs() > kProbabilityTol) return false;
  const auto p = base.probs();
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    if (p[i] + delta_[i] < 0.0) return false;
  }
  return true;
}

ClassicalEnsemble build_subsystem_distribution(const CoordVector& rho, std::span<const double> env_weights) {
  // Positive states have |rho_k| <= 1; pure states reach it up to rounding.
  CoordVector r = rho;
  for (int k = 1; k <= kNumSpins; ++k) {
    if (!(std::abs(rho(k)) <= 1.0 + kProbabilityTol)) {
      throw std::invalid_argument("|rho_" + std::to_string(k) + "| > 1 would give negative probabilities");
    }
    r(k) = std::clamp(rho(k), -1.0, 1.0);
  }
  if (env_weights.empty()) throw std::invalid_argument("need at least one environment weight");
  double wsum = 0;
  for (double w : env_weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("environment weights must be nonnegative");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > kProbabilityTol) throw std::invalid_argument("environment weights must sum to 1");

  // Subsystem factor p_s, built up one spin at a time.
  std::vector<double> ps(kNumSpinConfigs, 1.0);
  constexpr double kNorm = 1.0 / static_cast<double>(kNumSpinConfigs);
  for (std::size_t idx = 0; idx < kNumSpinConfigs; ++idx) {
    double p = kNorm;
    for (int k = 1; k <= kNumSpins; ++k) p *= 1.0 + sigma_of(idx, k) * r(k);
    ps[idx] = p;
  }

  const int z = static_cast<int>(env_weights.size());
  std::vector<double> table(kNumSpinConfigs * env_weights.size());
  for (int zeta = 0; zeta < z; ++zeta) {
    const double w = env_weights[static_cast<std::size_t>(zeta)];
    std::transform(ps.begin(), ps.end(), table.begin() + static_cast<std::ptrdiff_t>(zeta * kNumSpinConfigs),
                   [w](double p) { return p * w; });
  }
  return ClassicalEnsemble::from_table(z, std::move(table));
}

ClassicalEnsemble build_subsystem_distribution(const StateCoords& s, std::span<const double> env_weights) {
  return build_subsystem_distribution(s.rho(), env_weights);
}

ClassicalEnsemble build_subsystem_distribution(const StateCoords& s) {
  static constexpr std::array<double, 2> kDefaultEnv{0.5, 0.5};
  return build_subsystem_distribution(s.rho(), kDefaultEnv);
}

ClassicalEnsemble apply_perturbation(const ClassicalEnsemble& base, const EnvPerturbation& delta) {
  if (base.num_env() != delta.num_env()) throw std::invalid_argument("perturbation has the wrong environment size");
  const auto res = delta.residuals();
  if (res.max_abs() > kProbabilityTol) {
    throw std::invalid_argument("perturbation violates its constraints (residual " + std::to_string(res.max_abs()) +
                                ")");
  }
  std::vector<double> table(base.probs().begin(), base.probs().end());
  const auto d = delta.delta();
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] += d[i];
    if (table[i] < 0.0) throw std::invalid_argument("perturbation makes a probability negative");
  }
  return ClassicalEnsemble::from_table(base.num_env(), std::move(table));
}

double expectation_sigma(const ClassicalEnsemble& ens, int k) {
  check_index(k);
  const auto p = ens.probs();
  return tree_sum(0, p.size(), [&](std::size_t i) { return sigma_of(i, k) * p[i]; });
}

CoordVector first_moments(const ClassicalEnsemble& ens) {
  CoordVector out;
  for (int k = 1; k <= kNumSpins; ++k) out(k) = expectation_sigma(ens, k);
  return out;
}

double classical_correlation(const ClassicalEnsemble& ens, int k, int l) {
  check_index(k);
  check_index(l);
  if (k == l) throw std::invalid_argument("classical_correlation needs two distinct spins");
  const auto p = ens.probs();
  return tree_sum(0, p.size(), [&](std::size_t i) { return sigma_of(i, k) * sigma_of(i, l) * p[i]; });
}

double classical_average(const ClassicalEnsemble& ens, const std::function<double(SpinConfig, int)>& f) {
  const auto p = ens.probs();
  return tree_sum(0, p.size(), [&](std::size_t i) {
    const auto zeta = static_cast<int>(i / kNumSpinConfigs);
    return f(SpinConfig(static_cast<std::uint32_t>(i % kNumSpinConfigs)), zeta) * p[i];
  });
}

EnvPerturbation project_constraints(int num_env, std::vector<double> raw) {
  check_env(num_env);
  const std::size_t n = kNumSpinConfigs * static_cast<std::size_t>(num_env);
  if (raw.size() != n) throw std::invalid_argument("perturbation table must have 32768 * Z entries");
  // The constant and the sigma_k are mutually orthogonal with squared norm n.
  const auto res = residuals_of(raw);
  const double inv_n = 1.0 / static_cast<double>(n);
  const double c0 = res.total * inv_n;
  std::array<double, kNumSpins> ck{};
  for (int k = 0; k < kNumSpins; ++k) ck[k] = res.first_moments[k] * inv_n;
  for (std::size_t i = 0; i < n; ++i) {
    double proj = c0;
    for (int k = 1; k <= kNumSpins; ++k) proj += ck[k - 1] * sigma_of(i, k);
    raw[i] -= proj;
  }
  return EnvPerturbation(num_env, std::move(raw));
}

EnvPerturbation sample_env_perturbation(const ClassicalEnsemble& base, std::uint64_t seed, double magnitude) {
  if (!(magnitude >= 0.0) || !std::isfinite(magnitude)) throw std::invalid_argument("magnitude must be >= 0");
  const int z = base.num_env();
  if (magnitude == 0.0) return EnvPerturbation(z);

  const auto p = base.probs();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> raw(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) raw[i] = p[i] * uni(rng);
  EnvPerturbation projected = project_constraints(z, std::move(raw));

  const auto d = projected.delta();
  double dmax = 0, pmax = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    dmax = std::max(dmax, std::abs(d[i]));
    pmax = std::max(pmax, p[i]);
  }
  if (dmax == 0.0) return EnvPerturbation(z);

  // Unit scale: largest |delta| equals the largest base probability.
  const double unit = pmax / dmax;
  double limit = magnitude;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0.0) limit = std::min(limit, p[i] / (-d[i] * unit));
  }
  if (limit <= 0.0) return EnvPerturbation(z);

  std::vector<double> scaled(d.size());
  double factor = limit * unit;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
      scaled[i] = d[i] * factor;
      if (p[i] + scaled[i] < 0.0) ok = false;
    }
    if (ok) break;
    factor *= 1.0 - 1e-12;  // boundary entry rounded below zero
  }
  return EnvPerturbation(z, std::move(scaled));
}

void write_ensemble(std::ostream& out, const ClassicalEnsemble& ens) {
  out.write(kMagic, 4);
  const auto z = static_cast<std::uint32_t>(ens.num_env());
  char zb[4];
  for (int b = 0; b < 4; ++b) zb[b] = static_cast<char>((z >> (8 * b)) & 0xffu);
  out.write(zb, 4);
  for (double x : ens.probs()) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    char buf[8];
    for (int b = 0; b < 8; ++b) buf[b] = static_cast<char>((bits >> (8 * b)) & 0xffu);
    out.write(buf, 8);
  }
  if (!out) throw std::runtime_error("failed to write ensemble");
}

ClassicalEnsemble read_ensemble(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kMagic)) {
    throw std::invalid_argument("not an ensemble file (bad magic)");
  }
  unsigned char zb[4];
  if (!in.read(reinterpret_cast<char*>(zb), 4)) throw std::invalid_argument("truncated ensemble header");
  std::uint32_t z = 0;
  for (int b = 0; b < 4; ++b) z |= static_cast<std::uint32_t>(zb[b]) << (8 * b);
  if (z < 1 || z > (1u << 16)) throw std::invalid_argument("implausible environment size in ensemble file");
  std::vector<double> table(kNumSpinConfigs * z);
  for (auto& x : table) {
    unsigned char buf[8];
    if (!in.read(reinterpret_cast<char*>(buf), 8)) throw std::invalid_argument("truncated ensemble table");
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(buf[b]) << (8 * b);
    x = std::bit_cast<double>(bits);
  }
  return ClassicalEnsemble::from_table(static_cast<int>(z), std::move(table));
}

double pairwise_sum(std::span<const double> values) {
  return tree_sum(0, values.size(), [&](std::size_t i) { return values[i]; });
}

}  // namespace qcs
