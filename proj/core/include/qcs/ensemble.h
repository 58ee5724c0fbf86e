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

#ifndef QCS_ENSEMBLE_H
#define QCS_ENSEMBLE_H

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "qcs/linalg.h"
#include "qcs/state.h"

namespace qcs {

inline constexpr int kNumSpins = 15;
inline constexpr std::size_t kNumSpinConfigs = std::size_t{1} << kNumSpins;  // 32768
inline constexpr double kProbabilityTol = 1e-12;

/// One assignment of the fifteen classical spins sigma_k = +-1, stored as a
/// 15-bit index. Bit b (0-based) encodes sigma_{b+1}: clear -> +1, set -> -1.
class SpinConfig {
 public:
  constexpr SpinConfig() = default;
  explicit SpinConfig(std::uint32_t index);

  std::uint32_t index() const { return index_; }
  /// sigma_k, k 1-based.
  int sigma(int k) const;

 private:
  std::uint32_t index_ = 0;
};

/// The fixed classical value A_tau = sigma_k carried by configuration `config`.
int classical_observable_value(SpinConfig config, int k);

/// Dense probability table p(sigma, zeta) over 32768 * Z classical states.
/// Storage is zeta-major: entry (zeta, sigma) lives at zeta * 32768 + sigma.
class ClassicalEnsemble {
 public:
  /// Validates nonnegativity and unit total within kProbabilityTol.
  static ClassicalEnsemble from_table(int num_env, std::vector<double> probs);

  int num_env() const { return num_env_; }
  std::span<const double> probs() const { return probs_; }
  /// zeta is 0-based here.
  double prob(SpinConfig config, int zeta) const;
  double total() const;

 private:
  ClassicalEnsemble() = default;
  int num_env_ = 1;
  std::vector<double> probs_;
};

struct ConstraintResiduals {
  double total = 0;                              // sum delta
  std::array<double, kNumSpins> first_moments{};  // sum sigma_k delta
  double max_abs() const;
};

/// Environment part delta p_e of the full distribution: invisible to every
/// first moment <sigma_k> and to the normalization.
class EnvPerturbation {
 public:
  /// Zero perturbation.
  explicit EnvPerturbation(int num_env);
  /// Raw table, no constraint check (see residuals()).
  EnvPerturbation(int num_env, std::vector<double> delta);

  int num_env() const { return num_env_; }
  std::span<const double> delta() const { return delta_; }
  bool is_zero() const;

  ConstraintResiduals residuals() const;
  /// All three invariants: zero total, zero first moments, and base + delta >= 0.
  bool is_admissible_for(const ClassicalEnsemble& base) const;

 private:
  int num_env_;
  std::vector<double> delta_;
};

/// p(sigma, zeta) = 2^-15 prod_k (1 + sigma_k rho_k) * env_weights[zeta].
/// Rejects |rho_k| > 1 and env weights that are negative or do not sum to 1.
ClassicalEnsemble build_subsystem_distribution(const CoordVector& rho, std::span<const double> env_weights);
ClassicalEnsemble build_subsystem_distribution(const StateCoords& s, std::span<const double> env_weights);
/// Default environment: Z = 2 with equal weights.
ClassicalEnsemble build_subsystem_distribution(const StateCoords& s);

/// base + delta. Throws if the result is not a valid ensemble or the
/// perturbation violates its constraints.
ClassicalEnsemble apply_perturbation(const ClassicalEnsemble& base, const EnvPerturbation& delta);

/// <sigma_k> by full enumeration.
double expectation_sigma(const ClassicalEnsemble& ens, int k);
/// All fifteen first moments.
CoordVector first_moments(const ClassicalEnsemble& ens);
/// <sigma_k sigma_l> by full enumeration, k != l.
double classical_correlation(const ClassicalEnsemble& ens, int k, int l);
/// sum_tau f(tau) p_tau for an arbitrary classical function of (config, zeta).
double classical_average(const ClassicalEnsemble& ens, const std::function<double(SpinConfig, int)>& f);

/// Removes the constant and the fifteen first-order characters sigma_k from
/// a raw table by exact orthogonal projection.
EnvPerturbation project_constraints(int num_env, std::vector<double> raw);

/// A seeded admissible perturbation: multiplicative noise on the base table,
/// projected onto the constraint subspace, then scaled by the largest factor
/// <= magnitude (relative to the largest base probability) that keeps the
/// perturbed table nonnegative. Degenerate bases yield the zero perturbation.
EnvPerturbation sample_env_perturbation(const ClassicalEnsemble& base, std::uint64_t seed, double magnitude);

/// Binary dump: "QCE1", Z as uint32 LE, then 32768 * Z float64 LE.
void write_ensemble(std::ostream& out, const ClassicalEnsemble& ens);
ClassicalEnsemble read_ensemble(std::istream& in);

/// Deterministic pairwise (tree) summation.
double pairwise_sum(std::span<const double> values);

}  // namespace qcs

#endif  // QCS_ENSEMBLE_H
