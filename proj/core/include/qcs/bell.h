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

#ifndef QCS_BELL_H
#define QCS_BELL_H

#include <array>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "qcs/ensemble.h"
#include "qcs/observables.h"
#include "qcs/state.h"

namespace qcs {

inline constexpr double kClassicalChshBound = 2.0;
inline const double kTsirelsonBound = 2.0 * std::numbers::sqrt2;

/// Measurement angles (radians). Bit-1 observables rotate in the (L_1, L_8)
/// plane, bit-2 observables in the (L_2, L_4) plane.
struct ChshSetting {
  double a = 0, a_prime = 0, b = 0, b_prime = 0;
};

/// Angles reaching 2 sqrt 2 on the triplet (psi_2 + psi_3)/sqrt 2. The
/// familiar (0, pi/2, pi/4, 3pi/4) set gives S = 0 there; the bit-2 angles
/// are reflected.
inline constexpr ChshSetting kTripletOptimalSetting{0.0, std::numbers::pi / 2, 7 * std::numbers::pi / 4,
                                                    5 * std::numbers::pi / 4};

/// cos(theta) L_1 + sin(theta) L_8.
Observable bit1_observable(double theta);
/// cos(theta) L_2 + sin(theta) L_4.
Observable bit2_observable(double theta);

struct ChshResult {
  double e_ab = 0, e_abp = 0, e_apb = 0, e_apbp = 0;
  /// |E(a,b) - E(a,b') + E(a',b) + E(a',b')|
  double s = 0;
};

ChshResult chsh_quantum(const StateCoords& s, const ChshSetting& setting);

/// A deterministic classical observable: a fixed +-1 per configuration.
using ClassicalAssignment = std::function<int(SpinConfig)>;
struct ClassicalAssignments {
  ClassicalAssignment a, a_prime, b, b_prime;
};
/// Assignments reading the spins sigma_ka, sigma_ka', sigma_kb, sigma_kb'.
ClassicalAssignments spin_assignments(int ka, int ka_prime, int kb, int kb_prime);

/// E = sum_tau A_tau B_tau p_tau by enumeration. Throws if an assignment
/// returns anything but +-1.
ChshResult chsh_classical(const ClassicalEnsemble& ens, const ClassicalAssignments& assignments);

struct ClassicalChshMax {
  double s = 0;
  std::array<int, 4> spins{};  // (ka, ka', kb, kb') achieving s
};
/// Largest S over all 15^4 choices of spin assignments, via the enumerated
/// correlation matrix <sigma_k sigma_l>.
ClassicalChshMax max_classical_chsh(const ClassicalEnsemble& ens);

struct ChshScan {
  ChshSetting best;
  double best_s = 0;
  std::size_t points = 0;
};
/// Exhaustive scan of n angles per setting over [0, 2 pi).
ChshScan chsh_grid_scan(const StateCoords& s, std::size_t n = 64);
/// One golden-section pass per angle within +-2pi/n of the start, to `tol`.
ChshScan refine_chsh(const StateCoords& s, const ChshSetting& start, std::size_t n = 64, double tol = 1e-6);

struct CorrelationGap {
  int k = 0, l = 0;
  double classical = 0;  // <sigma_k sigma_l> under the product ensemble
  double quantum = 0;    // tr({L_k, L_l} rho) / 2
};
/// Classical vs. measurement correlation for every pair k < l.
std::vector<CorrelationGap> correlation_gap_report(const StateCoords& s);

}  // namespace qcs

#endif  // QCS_BELL_H
