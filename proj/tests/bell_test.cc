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

#include "qcs/bell.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracle.h"
#include "qcs/random.h"
#include "qcs/symmetry.h"

using namespace qcs;
using std::numbers::pi;

namespace {

StateCoords rho_plus() { return coords_from_wavefunction(triplet_state()); }

// Two-qubit CHSH evaluated from Pauli Kronecker products, independent of
// the generator tables and of measurement_correlation.
double oracle_chsh(const WaveFunction& psi, const ChshSetting& st) {
  using namespace qcs::oracle;
  auto spin = [](double th) {
    Mat2 m;
    const Mat2 z = pauli_z(), x = pauli_x();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m[i][j] = std::cos(th) * z[i][j] + std::sin(th) * x[i][j];
    return m;
  };
  auto e = [&](double a, double b) { return sandwich(psi.amplitudes(), kron(spin(a), spin(b))).real(); };
  return std::abs(e(st.a, st.b) - e(st.a, st.b_prime) + e(st.a_prime, st.b) + e(st.a_prime, st.b_prime));
}

}  // namespace

TEST(ChshObservables, are_two_level) {
  for (int i = 0; i < 64; ++i) {
    const double th = 2 * pi * i / 64;
    EXPECT_TRUE(bit1_observable(th).two_level());
    EXPECT_TRUE(bit2_observable(th).two_level());
    EXPECT_EQ(commutator(bit1_observable(th).op(), bit2_observable(0.3 * i).op()).max_norm(), 0.0);
  }
}

TEST(ChshQuantum, oracle_fixes_optimal_angles) {
  const WaveFunction psi = triplet_state();
  // The textbook angle set is not optimal for this state.
  EXPECT_NEAR(oracle_chsh(psi, {0, pi / 2, pi / 4, 3 * pi / 4}), 0.0, 1e-12);
  EXPECT_NEAR(oracle_chsh(psi, kTripletOptimalSetting), 2 * std::sqrt(2.0), 1e-12);

  const auto r = chsh_quantum(rho_plus(), kTripletOptimalSetting);
  EXPECT_NEAR(r.s, kTsirelsonBound, 1e-9);
  for (double e : {r.e_ab, r.e_abp, r.e_apb, r.e_apbp}) EXPECT_LE(std::abs(e), 1 + 1e-12);
}

TEST(ChshQuantum, matches_oracle_on_random_states) {
  Rng rng(51);
  std::uniform_real_distribution<double> ang(0, 2 * pi);
  for (int n = 0; n < 100; ++n) {
    const WaveFunction psi = random_wavefunction(rng);
    const ChshSetting st{ang(rng), ang(rng), ang(rng), ang(rng)};
    EXPECT_NEAR(chsh_quantum(coords_from_wavefunction(psi), st).s, oracle_chsh(psi, st), 1e-12);
  }
}

TEST(ChshQuantum, product_and_mixed_states) {
  const auto scan = chsh_grid_scan(coords_from_wavefunction(WaveFunction::basis(1)), 16);
  EXPECT_LE(scan.best_s, 2.0 + 1e-12);
  const auto r = chsh_quantum(StateCoords{}, kTripletOptimalSetting);
  for (double e : {r.e_ab, r.e_abp, r.e_apb, r.e_apbp}) EXPECT_EQ(e, 0.0);
  EXPECT_EQ(r.s, 0.0);
}

TEST(ChshQuantum, grid_scan_reaches_tsirelson_bound) {
  const auto scan = chsh_grid_scan(rho_plus(), 64);
  EXPECT_EQ(scan.points, 64u * 64 * 64 * 64);
  EXPECT_NEAR(scan.best_s, kTsirelsonBound, 1e-9);
  EXPECT_LE(scan.best_s, kTsirelsonBound + 1e-9);
  const auto refined = refine_chsh(rho_plus(), scan.best);
  EXPECT_NEAR(refined.best_s, kTsirelsonBound, 1e-9);
}

TEST(ChshQuantum, refinement_improves_off_grid_start) {
  ChshSetting start = kTripletOptimalSetting;
  start.a += 0.05;
  start.b -= 0.04;
  const double before = chsh_quantum(rho_plus(), start).s;
  const auto refined = refine_chsh(rho_plus(), start);
  EXPECT_GT(refined.best_s, before);
  EXPECT_NEAR(refined.best_s, kTsirelsonBound, 1e-9);
}

TEST(ChshClassical, bounded_by_two) {
  const auto ens = build_subsystem_distribution(rho_plus());
  const auto r = chsh_classical(ens, spin_assignments(1, 8, 2, 4));
  EXPECT_LE(r.s, 2.0 + 1e-12);
  EXPECT_NEAR(r.e_ab, 0.0, 1e-12);

  Rng rng(52);
  for (int n = 0; n < 5; ++n) {
    const auto base = build_subsystem_distribution(random_state(rng));
    const auto perturbed = apply_perturbation(base, sample_env_perturbation(base, 100 + n, 0.8));
    EXPECT_LE(max_classical_chsh(perturbed).s, 2.0 + 1e-12);
  }
}

TEST(ChshClassical, deterministic_assignment_saturates_two) {
  // A point mass on one configuration with A = A' = B = -B' gives S = 2.
  std::vector<double> table(kNumSpinConfigs, 0.0);
  table[0] = 1.0;
  const auto ens = ClassicalEnsemble::from_table(1, table);
  ClassicalAssignments as = spin_assignments(1, 1, 2, 2);
  as.b_prime = [](SpinConfig c) { return -c.sigma(2); };
  EXPECT_NEAR(chsh_classical(ens, as).s, 2.0, 1e-15);

  as.a = [](SpinConfig) { return 0; };
  EXPECT_THROW(chsh_classical(ens, as), std::invalid_argument);
}

TEST(ChshClassical, exhaustive_matches_direct_enumeration) {
  Rng rng(53);
  const auto ens = build_subsystem_distribution(random_state(rng));
  const auto best = max_classical_chsh(ens);
  const auto& k = best.spins;
  EXPECT_NEAR(chsh_classical(ens, spin_assignments(k[0], k[1], k[2], k[3])).s, best.s, 1e-12);
}

TEST(CorrelationGap, entangled_state) {
  const auto gaps = correlation_gap_report(rho_plus());
  ASSERT_EQ(gaps.size(), 105u);
  EXPECT_EQ(gaps[0].k, 1);
  EXPECT_EQ(gaps[0].l, 2);
  EXPECT_NEAR(gaps[0].classical, 0.0, 1e-12);
  EXPECT_NEAR(gaps[0].quantum, -1.0, 1e-12);
}

TEST(CorrelationGap, maximally_mixed_and_sharp_commuting_pair) {
  for (const auto& g : correlation_gap_report(StateCoords{})) {
    EXPECT_NEAR(g.classical, 0.0, 1e-12);
    EXPECT_NEAR(g.quantum, 0.0, 1e-12);
  }
  const double r = 1.0 / std::sqrt(2.0);
  const auto gaps = correlation_gap_report(coords_from_wavefunction(WaveFunction({r, r, 0, 0})));
  for (const auto& g : gaps) {
    if (g.k == 1 && g.l == 4) {
      EXPECT_NEAR(g.classical, 1.0, 1e-12);
      EXPECT_NEAR(g.quantum, 1.0, 1e-12);
    }
  }
}
