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

#include "qcs/random.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "qcs/symmetry.h"

namespace qcs {

Matrix4 random_unitary(Rng& rng) {
  std::normal_distribution<double> g;
  std::array<Vector4, kDim> cols;
  for (auto& c : cols)
    for (auto& x : c) x = {g(rng), g(rng)};
  for (std::size_t j = 0; j < kDim; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Complex proj = inner(cols[i], cols[j]);
      for (std::size_t r = 0; r < kDim; ++r) cols[j][r] -= proj * cols[i][r];
    }
    const double n = std::sqrt(norm_squared(cols[j]));
    for (auto& x : cols[j]) x /= n;
  }
  Matrix4 u;
  for (std::size_t j = 0; j < kDim; ++j)
    for (std::size_t r = 0; r < kDim; ++r) u(r, j) = cols[j][r];
  return u;
}

Matrix4 random_hermitian(Rng& rng) {
  std::normal_distribution<double> g;
  Matrix4 m;
  for (std::size_t i = 0; i < kDim; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < kDim; ++j) {
      m(i, j) = {g(rng), g(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

WaveFunction random_wavefunction(Rng& rng) {
  std::normal_distribution<double> g;
  Vector4 v;
  for (auto& x : v) x = {g(rng), g(rng)};
  return WaveFunction::normalized(v);
}

StateCoords random_state(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<double, 5> cuts{0.0, u(rng), u(rng), u(rng), 1.0};
  std::sort(cuts.begin() + 1, cuts.end() - 1);
  const Matrix4 v = random_unitary(rng);
  Matrix4 rho;
  for (std::size_t j = 0; j < kDim; ++j) {
    Vector4 col;
    for (std::size_t r = 0; r < kDim; ++r) col[r] = v(r, j);
    rho += outer(col, col) * Complex{cuts[j + 1] - cuts[j]};
  }
  return coords_from_density(HermitianMatrix4::sanitize(rho).matrix());
}

CoordVector random_unit_direction(Rng& rng) {
  std::normal_distribution<double> g;
  CoordVector e;
  for (int k = 1; k <= kNumGenerators; ++k) e(k) = g(rng);
  return e * (1.0 / std::sqrt(e.norm_squared()));
}

Hamiltonian random_exchange_symmetric_hamiltonian(Rng& rng) {
  const Matrix4 a = random_hermitian(rng);
  const Matrix4 p = exchange_matrix();
  return Hamiltonian((a + p * a * p) * Complex{0.5});
}

}  // namespace qcs
