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

#ifndef QCS_RANDOM_H
#define QCS_RANDOM_H

#include <random>

#include "qcs/evolution.h"
#include "qcs/linalg.h"
#include "qcs/state.h"

namespace qcs {

using Rng = std::mt19937_64;

/// Gram-Schmidt orthonormalization of a complex Gaussian matrix.
Matrix4 random_unitary(Rng& rng);
/// Hermitian matrix with independent Gaussian entries (scale ~ 1).
Matrix4 random_hermitian(Rng& rng);
WaveFunction random_wavefunction(Rng& rng);
/// Spectrum drawn flat on the probability simplex, rotated by random_unitary.
StateCoords random_state(Rng& rng);
/// Direction with sum e_k^2 = 1.
CoordVector random_unit_direction(Rng& rng);
/// (A + P_23 A P_23) / 2 for a random Hermitian A.
Hamiltonian random_exchange_symmetric_hamiltonian(Rng& rng);

}  // namespace qcs

#endif  // QCS_RANDOM_H
