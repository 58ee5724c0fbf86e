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

#include "qcs/symmetry.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcs {
namespace {

constexpr std::array<int, kNumGenerators + 1> kExchangeMap = {0, 2, 1, 3, 8, 9, 10, 11, 4, 5, 6, 7, 12, 15, 14, 13};

}  // namespace

int exchanged_index(int k) {
  if (k < 1 || k > kNumGenerators) throw std::out_of_range("generator index must be in 1..15");
  return kExchangeMap[static_cast<std::size_t>(k)];
}

Matrix4 exchange_matrix() { return Matrix4::swap_rows(2, 3); }

CoordVector exchange_coords(const CoordVector& rho) {
  CoordVector out;
  for (int k = 1; k <= kNumGenerators; ++k) out(exchanged_index(k)) = rho(k);
  return out;
}

StateCoords exchange_coords(const StateCoords& s) { return StateCoords::from_coords(exchange_coords(s.rho())); }

SymmetryResult is_exchange_symmetric(const StateCoords& s) {
  SymmetryResult r;
  r.defect = exchange_coords(s.rho()).max_abs_diff(s.rho());
  r.symmetric = r.defect < kExchangeSymmetryTol;
  return r;
}

std::string_view to_string(ExchangeClass c) {
  switch (c) {
    case ExchangeClass::kSymmetricBoson:
      return "symmetric-boson";
    case ExchangeClass::kAntisymmetricFermion:
      return "antisymmetric-fermion";
    case ExchangeClass::kNotExchangeEligible:
      return "not-exchange-eligible";
  }
  return "unknown";
}

WaveFunction singlet_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return WaveFunction::normalized({0, r, -r, 0});
}

WaveFunction triplet_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return WaveFunction::normalized({0, r, r, 0});
}

ExchangeDecomposition superselection_check(const WaveFunction& psi) {
  ExchangeDecomposition d;
  d.a = inner(singlet_state().amplitudes(), psi.amplitudes());
  d.b = inner(triplet_state().amplitudes(), psi.amplitudes());
  d.c = psi[0];
  d.d = psi[3];
  const double fermion = std::abs(d.a);
  const double boson = std::sqrt(std::norm(d.b) + std::norm(d.c) + std::norm(d.d));
  const bool boson_zero = std::abs(d.b) < kAmplitudeZeroTol && std::abs(d.c) < kAmplitudeZeroTol &&
                          std::abs(d.d) < kAmplitudeZeroTol;
  if (boson_zero) {
    d.classification = ExchangeClass::kAntisymmetricFermion;
  } else if (fermion < kAmplitudeZeroTol) {
    d.classification = ExchangeClass::kSymmetricBoson;
  } else {
    d.classification = ExchangeClass::kNotExchangeEligible;
  }
  d.defect = std::min(fermion, boson);
  return d;
}

double hamiltonian_exchange_defect(const Hamiltonian& h) {
  return commutator(h.matrix(), exchange_matrix()).max_norm();
}

FermionInvarianceReport fermion_invariance_check(const Hamiltonian& h, std::span<const double> times) {
  const double defect = hamiltonian_exchange_defect(h);
  if (defect > kHamiltonianSymmetryTol) {
    throw std::invalid_argument("Hamiltonian is not exchange symmetric (|[H, P23]| = " + std::to_string(defect) +
                                ")");
  }
  const WaveFunction fermion = singlet_state();
  const std::array<Vector4, 3> bosons = {triplet_state().amplitudes(), WaveFunction::basis(1).amplitudes(),
                                         WaveFunction::basis(4).amplitudes()};
  const StateCoords start = coords_from_wavefunction(fermion);

  FermionInvarianceReport r;
  for (double t : times) {
    const Propagator u = propagator_from_hamiltonian(h, t);
    const StateCoords evolved = apply_propagator(u, start);
    double drift = 0;
    for (int k = 1; k <= kNumGenerators; ++k) drift += std::pow(evolved(k) - start(k), 2);
    r.max_drift = std::max(r.max_drift, std::sqrt(drift));
    for (const auto& b : bosons) {
      r.max_cross_element = std::max(r.max_cross_element, std::abs(inner(fermion.amplitudes(), u.matrix() * b)));
      r.max_cross_element = std::max(r.max_cross_element, std::abs(inner(b, u.matrix() * fermion.amplitudes())));
    }
  }
  return r;
}

}  // namespace qcs
