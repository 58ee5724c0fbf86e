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

#include "qcs/algebra.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracle.h"
#include "qcs/random.h"
#include "qcs/symmetry.h"

using namespace qcs;
using namespace qcs::oracle;

namespace {

Matrix4 p23() { return Matrix4::swap_rows(2, 3); }

}  // namespace

TEST(Generators, first_seven_literal) {
  const auto& L = generators();
  EXPECT_EQ(L(1), Matrix4::diagonal({1, 1, -1, -1}));
  EXPECT_EQ(L(2), Matrix4::diagonal({1, -1, 1, -1}));
  EXPECT_EQ(L(3), Matrix4::diagonal({1, -1, -1, 1}));
  const Complex i{0, 1};
  EXPECT_EQ(L(4), literal({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}));
  EXPECT_EQ(L(5), literal({0, -i, 0, 0, i, 0, 0, 0, 0, 0, 0, -i, 0, 0, i, 0}));
  EXPECT_EQ(L(6), literal({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0}));
  EXPECT_EQ(L(7), literal({0, -i, 0, 0, i, 0, 0, 0, 0, 0, 0, i, 0, 0, -i, 0}));
}

TEST(Generators, l8_by_hand) {
  // L_4 with rows/columns 2 and 3 exchanged: ones at (1,3),(3,1),(2,4),(4,2).
  EXPECT_EQ(generators()(8), literal({0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0}));
}

TEST(Generators, match_pauli_products) {
  // Two-qubit reading of the set; L_8..L_15 follow from conjugating by the
  // SWAP gate (P_23) and by CNOT with control on bit 2 (P_24).
  const auto expected = pauli_table();
  for (int k = 1; k <= 15; ++k) {
    EXPECT_LT((generators()(k) - expected[k - 1]).max_norm(), 1e-15) << "k=" << k;
  }
}

TEST(Generators, orthonormal_involutions_exact) {
  const auto& L = generators();
  for (int k = 1; k <= 15; ++k) {
    for (const Complex& x : L(k).entries()) {
      EXPECT_TRUE(x.real() == std::round(x.real()) && x.imag() == std::round(x.imag()));
    }
    EXPECT_EQ(L(k) * L(k), Matrix4::identity()) << "k=" << k;
    EXPECT_EQ(L(k).trace(), Complex{0}) << "k=" << k;
    EXPECT_EQ(L(k), L(k).adjoint());
    for (int l = 1; l <= 15; ++l) {
      EXPECT_EQ(trace_of_product(L(k), L(l)), Complex(k == l ? 4.0 : 0.0)) << k << "," << l;
    }
  }
  EXPECT_EQ(trace_of_product(L(5), L(7)), Complex{0});
  EXPECT_EQ(trace_of_product(L(5), L(5)), Complex{4});
}

TEST(Generators, exchange_conjugation_permutes_set) {
  const auto& L = generators();
  for (int k = 1; k <= 15; ++k) {
    EXPECT_EQ(p23() * L(k) * p23(), L(exchanged_index(k))) << "k=" << k;
  }
}

TEST(Generators, index_bounds) {
  EXPECT_THROW(generators()(0), std::out_of_range);
  EXPECT_THROW(generators()(16), std::out_of_range);
}

TEST(OperatorCoords, basis_and_zero) {
  EXPECT_EQ(operator_from_coords(CoordVector::unit(3)), generators()(3));
  EXPECT_EQ(operator_from_coords(CoordVector{}), Matrix4::zero());
}

TEST(OperatorCoords, commuting_pair_is_not_two_level) {
  const double r = 1.0 / std::sqrt(2.0);
  CoordVector e;
  e(1) = r;
  e(4) = r;
  const Matrix4 a = operator_from_coords(e);
  const auto& L = generators();
  EXPECT_LT((a - (L(1) + L(4)) * Complex{r}).max_norm(), 1e-15);
  EXPECT_EQ(L(1) * L(4), L(6));
  EXPECT_LT((a * a - (Matrix4::identity() + L(6))).max_norm(), 1e-15);
}

TEST(OperatorCoords, decomposition_examples) {
  const auto& L = generators();
  auto c = coords_from_operator(L(5));
  EXPECT_EQ(c.trace_part, 0.0);
  EXPECT_EQ(c.e, CoordVector::unit(5));

  c = coords_from_operator(Matrix4::identity());
  EXPECT_EQ(c.trace_part, 1.0);
  EXPECT_EQ(c.e, CoordVector{});

  const Matrix4 rho_plus = (Matrix4::identity() - L(3) + L(12) - L(14)) * Complex{0.25};
  c = coords_from_operator(rho_plus);
  EXPECT_DOUBLE_EQ(c.trace_part, 0.25);
  CoordVector want;
  want(3) = -0.25;
  want(12) = 0.25;
  want(14) = -0.25;
  EXPECT_LT(c.e.max_abs_diff(want), 1e-15);
}

TEST(OperatorCoords, rejects_non_hermitian) {
  Matrix4 m;
  m(0, 1) = 1;
  EXPECT_THROW(coords_from_operator(m), std::invalid_argument);
}

TEST(OperatorCoords, traceless_round_trip) {
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    Matrix4 a = random_hermitian(rng);
    a -= Matrix4::identity() * (a.trace() / 4.0);
    const auto c = coords_from_operator(a);
    EXPECT_NEAR(c.trace_part, 0.0, 1e-14);
    EXPECT_LT((operator_from_coords(c.e) - a).max_norm(), 1e-13);
  }
}

TEST(Eigh, simple_spectra) {
  auto eig = eigh(Matrix4::identity());
  for (double v : eig.values) EXPECT_DOUBLE_EQ(v, 1.0);

  eig = eigh(generators()(1));
  EXPECT_EQ(eig.values, (std::array<double, 4>{-1, -1, 1, 1}));

  const auto& L = generators();
  eig = eigh((Matrix4::identity() - L(3) + L(12) - L(14)) * Complex{0.25});
  const std::array<double, 4> want{0, 0, 0, 1};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(eig.values[i], want[i], 1e-14);
}

TEST(Eigh, rejects_non_hermitian) {
  Matrix4 m = Matrix4::identity();
  m(0, 3) = Complex{0, 1e-9};
  EXPECT_THROW(eigh(m), std::invalid_argument);
}

TEST(Eigh, reconstruction_property) {
  Rng rng(2026);
  std::uniform_real_distribution<double> scale(-3, 3);
  for (int n = 0; n < 1000; ++n) {
    Matrix4 a = random_hermitian(rng) * Complex{std::pow(10.0, scale(rng) / 3)};
    if (n % 7 == 0) a = generators()(1 + n % 15) + generators()(1 + (n / 7) % 15);  // degenerate spectra
    const auto eig = eigh(a);
    Matrix4 rebuilt;
    for (std::size_t j = 0; j < 4; ++j) rebuilt += outer(eig.vector(j), eig.vector(j)) * Complex{eig.values[j]};
    EXPECT_LT((rebuilt - a).max_norm(), 1e-12 * std::max(1.0, a.max_norm())) << "n=" << n;
    EXPECT_LT(unitarity_defect(eig.vectors), 1e-12);
    for (std::size_t j = 1; j < 4; ++j) EXPECT_LE(eig.values[j - 1], eig.values[j]);
  }
}

TEST(Anticommutator, generator_examples) {
  const auto& L = generators();
  EXPECT_EQ(anticommutator(L(1), L(2)) * Complex{0.5}, L(3));
  EXPECT_EQ(anticommutator(L(1), L(8)), Matrix4::zero());
  Rng rng(5);
  const Matrix4 a = random_hermitian(rng);
  EXPECT_LT((anticommutator(a, a) * Complex{0.5} - a * a).max_norm(), 1e-14);
  const Matrix4 b = random_hermitian(rng);
  EXPECT_LT(hermiticity_defect(anticommutator(a, b)), 1e-13);
}

TEST(HermitianMatrix, validation_and_sanitize) {
  Matrix4 m = generators()(5);
  m(0, 1) += Complex{1e-6, 0};
  EXPECT_THROW(HermitianMatrix4{m}, std::invalid_argument);
  const HermitianMatrix4 h = HermitianMatrix4::sanitize(m);
  EXPECT_EQ(hermiticity_defect(h), 0.0);
}
