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

#include <cmath>

#include "gtest/gtest.h"
#include "qcs/random.h"

using namespace qcs;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

}  // namespace

TEST(ExchangeMap, involution_with_expected_fixed_points) {
  for (int k = 1; k <= 15; ++k) EXPECT_EQ(exchanged_index(exchanged_index(k)), k);
  for (int k : {3, 12, 14}) EXPECT_EQ(exchanged_index(k), k);
  EXPECT_EQ(exchanged_index(1), 2);
  EXPECT_EQ(exchanged_index(4), 8);
  EXPECT_EQ(exchanged_index(7), 11);
  EXPECT_EQ(exchanged_index(13), 15);
  EXPECT_THROW(exchanged_index(0), std::out_of_range);
}

TEST(ExchangeCoords, examples) {
  for (const auto& psi : {triplet_state(), singlet_state()}) {
    const StateCoords s = coords_from_wavefunction(psi);
    EXPECT_EQ(exchange_coords(s).rho(), s.rho());
  }
  const StateCoords psi2 = coords_from_wavefunction(WaveFunction::basis(2));
  const StateCoords psi3 = coords_from_wavefunction(WaveFunction::basis(3));
  EXPECT_LT(exchange_coords(psi2).rho().max_abs_diff(psi3.rho()), 1e-15);

  EXPECT_EQ(exchange_coords(CoordVector::unit(13)), CoordVector::unit(15));
}

TEST(ExchangeCoords, matches_p23_conjugation) {
  Rng rng(41);
  const Matrix4 p = exchange_matrix();
  for (int n = 0; n < 1000; ++n) {
    const StateCoords s = random_state(rng);
    const StateCoords conj = coords_from_density(p * density_from_coords(s) * p);
    EXPECT_LT(exchange_coords(s).rho().max_abs_diff(conj.rho()), 1e-12);
    EXPECT_EQ(exchange_coords(exchange_coords(s.rho())), s.rho());
  }
}

TEST(ExchangeSymmetric, examples) {
  EXPECT_TRUE(is_exchange_symmetric(coords_from_wavefunction(singlet_state())).symmetric);
  const auto psi2 = is_exchange_symmetric(coords_from_wavefunction(WaveFunction::basis(2)));
  EXPECT_FALSE(psi2.symmetric);
  EXPECT_NEAR(psi2.defect, 2.0, 1e-15);  // f_1 = 1, f_2 = -1 swap
  EXPECT_TRUE(is_exchange_symmetric(StateCoords{}).symmetric);
}

TEST(Superselection, classification) {
  EXPECT_EQ(superselection_check(singlet_state()).classification, ExchangeClass::kAntisymmetricFermion);

  // (psi_1 + psi_+)/sqrt 2
  const WaveFunction boson({kR, 0.5, 0.5, 0});
  const auto b = superselection_check(boson);
  EXPECT_EQ(b.classification, ExchangeClass::kSymmetricBoson);
  EXPECT_NEAR(std::abs(b.c), kR, 1e-15);
  EXPECT_NEAR(std::abs(b.b), kR, 1e-15);

  // (psi_- + psi_+)/sqrt 2 = psi_2
  const auto mixed = superselection_check(WaveFunction::basis(2));
  EXPECT_EQ(mixed.classification, ExchangeClass::kNotExchangeEligible);
  EXPECT_NEAR(mixed.defect, kR, 1e-15);

  EXPECT_EQ(superselection_check(WaveFunction::basis(4)).classification, ExchangeClass::kSymmetricBoson);
  EXPECT_EQ(to_string(ExchangeClass::kNotExchangeEligible), "not-exchange-eligible");
}

TEST(Superselection, symmetric_density_iff_eligible) {
  Rng rng(42);
  for (int n = 0; n < 200; ++n) {
    const WaveFunction psi = random_wavefunction(rng);
    const auto cls = superselection_check(psi).classification;
    const bool sym = is_exchange_symmetric(coords_from_wavefunction(psi)).symmetric;
    EXPECT_EQ(cls, ExchangeClass::kNotExchangeEligible);
    EXPECT_FALSE(sym);
  }
}

TEST(FermionInvariance, zero_hamiltonian) {
  const auto times = uniform_grid(0, 5, 11);
  const auto r = fermion_invariance_check(Hamiltonian(Matrix4::zero()), times);
  EXPECT_LT(r.max_drift, 1e-15);
  EXPECT_LT(r.max_cross_element, 1e-15);
}

TEST(FermionInvariance, symmetric_hamiltonians) {
  Rng rng(43);
  const auto times = uniform_grid(0, 10, 41);
  for (int n = 0; n < 20; ++n) {
    const Hamiltonian h = random_exchange_symmetric_hamiltonian(rng);
    EXPECT_LT(hamiltonian_exchange_defect(h), 1e-12);
    const auto r = fermion_invariance_check(h, times);
    EXPECT_LT(r.max_drift, 1e-10);
    EXPECT_LT(r.max_cross_element, 1e-12);
  }
}

TEST(FermionInvariance, rejects_asymmetric_hamiltonian) {
  const auto times = uniform_grid(0, 1, 3);
  EXPECT_THROW(fermion_invariance_check(Hamiltonian(generators()(1)), times), std::invalid_argument);
}
