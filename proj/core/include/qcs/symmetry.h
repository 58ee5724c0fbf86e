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

#ifndef QCS_SYMMETRY_H
#define QCS_SYMMETRY_H

#include <span>
#include <string_view>

#include "qcs/evolution.h"
#include "qcs/linalg.h"
#include "qcs/state.h"

namespace qcs {

inline constexpr double kExchangeSymmetryTol = 1e-10;
inline constexpr double kAmplitudeZeroTol = 1e-10;
inline constexpr double kHamiltonianSymmetryTol = 1e-12;

/// Partner of generator k under exchange of the two bits:
/// 1<->2, 4<->8, 5<->9, 6<->10, 7<->11, 13<->15; 3, 12, 14 fixed.
int exchanged_index(int k);

/// P_23, the basis permutation |up down> <-> |down up>.
Matrix4 exchange_matrix();

CoordVector exchange_coords(const CoordVector& rho);
StateCoords exchange_coords(const StateCoords& s);

struct SymmetryResult {
  bool symmetric = false;
  double defect = 0;  // max_k |rho'_k - rho_k|
};
SymmetryResult is_exchange_symmetric(const StateCoords& s);

enum class ExchangeClass { kSymmetricBoson, kAntisymmetricFermion, kNotExchangeEligible };
std::string_view to_string(ExchangeClass c);

/// psi = a psi_- + b psi_+ + c psi_1 + d psi_4.
struct ExchangeDecomposition {
  ExchangeClass classification = ExchangeClass::kNotExchangeEligible;
  Complex a, b, c, d;
  /// Distance from the closest allowed class: min(|a|, |(b, c, d)|).
  double defect = 0;
};
ExchangeDecomposition superselection_check(const WaveFunction& psi);

/// (psi_2 -+ psi_3)/sqrt 2.
WaveFunction singlet_state();
WaveFunction triplet_state();

/// max |H P_23 - P_23 H|.
double hamiltonian_exchange_defect(const Hamiltonian& h);

struct FermionInvarianceReport {
  double max_drift = 0;          // max_t |rho_k(t) - rho_k(0)|_2 for the psi_- projector
  double max_cross_element = 0;  // max_t |<fermion|U|boson_j>|, |<boson_j|U|fermion>|
};

/// Evolves the fermion state under an exchange-symmetric Hamiltonian.
/// Throws std::invalid_argument if H does not commute with P_23.
FermionInvarianceReport fermion_invariance_check(const Hamiltonian& h, std::span<const double> times);

}  // namespace qcs

#endif  // QCS_SYMMETRY_H
