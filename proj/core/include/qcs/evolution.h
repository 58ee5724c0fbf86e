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

#ifndef QCS_EVOLUTION_H
#define QCS_EVOLUTION_H

#include <array>
#include <cstddef>
#include <vector>

#include "qcs/algebra.h"
#include "qcs/linalg.h"
#include "qcs/observables.h"
#include "qcs/state.h"

namespace qcs {

/// Time-independent Hamiltonian (hbar = 1).
class Hamiltonian {
 public:
  Hamiltonian() = default;
  /// Throws std::invalid_argument unless Hermitian within kHermitianTol.
  explicit Hamiltonian(const Matrix4& m);
  const Matrix4& matrix() const { return h_.matrix(); }

 private:
  HermitianMatrix4 h_;
};

/// Unitary U(t, t').
class Propagator {
 public:
  Propagator() : u_(Matrix4::identity()) {}
  /// Throws std::invalid_argument unless U^dagger U = 1 within kHermitianTol.
  explicit Propagator(const Matrix4& m);
  const Matrix4& matrix() const { return u_; }

  friend Propagator operator*(const Propagator& a, const Propagator& b) { return Propagator(a.u_ * b.u_); }

 private:
  Matrix4 u_;
};

/// exp(-i H t) through the eigendecomposition of H.
Propagator propagator_from_hamiltonian(const Hamiltonian& h, double t);

/// rho -> U rho U^dagger, in coordinates.
StateCoords apply_propagator(const Propagator& u, const StateCoords& s);
WaveFunction apply_propagator(const Propagator& u, const WaveFunction& psi);

/// Permutation exchanging basis states 3 and 4.
Propagator cnot_gate();

struct InterferenceConfig {
  double omega_a = 1.0;
  double omega_b = 0.0;
  std::vector<double> times;
  /// Hermitian 2x2 block acting on span(psi_3, psi_4), row-major. The
  /// interference curve does not depend on it.
  std::array<Complex, 4> complement{};

  double delta() const { return omega_a - omega_b; }
};

/// n equally spaced points covering [t0, t1] inclusive.
std::vector<double> uniform_grid(double t0, double t1, std::size_t n);

/// omega_a P_a + omega_b P_b (+ complement), P_a/P_b projecting onto
/// (psi_1 +- psi_2)/sqrt 2.
Hamiltonian interference_hamiltonian(const InterferenceConfig& cfg);

/// Closed-form coordinates of the superposed state at time t:
/// f_1 = 1, f_2 = f_3 = cos(delta t), f_5 = f_7 = -sin(delta t).
CoordVector interference_coords(double delta, double t);

struct InterferencePoint {
  double t = 0;
  StateCoords state;
  double expect_t2 = 0;
};

struct InterferenceSeries {
  std::vector<InterferencePoint> points;
  double max_dev_cos = 0;     // max_t |<T_2>(t) - cos(delta t)|
  double max_dev_coords = 0;  // max_t max_k |f_k(t) - closed form|
};

/// Evolves psi_1 = (psi_a + psi_b)/sqrt 2 by exact exponentiation at every grid point.
InterferenceSeries interference_scenario(const InterferenceConfig& cfg);

struct FiniteDifferenceCheck {
  double max_residual_f2 = 0;  // max |d f_2/dt - delta f_5|
  double max_residual_f5 = 0;  // max |d f_5/dt + delta f_2|
  double step = 0;
};

/// Central differences on a uniformly spaced series (interior points).
FiniteDifferenceCheck interference_finite_differences(const InterferenceSeries& series, double delta);

struct HeisenbergCheck {
  double schrodinger = 0;  // tr(A U rho U^dagger)
  double heisenberg = 0;   // tr(U^dagger A U rho)
};
HeisenbergCheck heisenberg_check(const Observable& a, const Hamiltonian& h, const StateCoords& s, double t);

}  // namespace qcs

#endif  // QCS_EVOLUTION_H
