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

#ifndef QCS_ALGEBRA_H
#define QCS_ALGEBRA_H

#include <array>

#include "qcs/linalg.h"

namespace qcs {

/// A 4x4 matrix known to be Hermitian within kHermitianTol.
///
/// Construction validates; use `sanitize` to explicitly symmetrize a matrix
/// carrying rounding noise.
class HermitianMatrix4 {
 public:
  HermitianMatrix4() = default;
  /// Throws std::invalid_argument if |m - m^dagger| exceeds kHermitianTol.
  explicit HermitianMatrix4(const Matrix4& m);

  /// (m + m^dagger) / 2, no validation.
  static HermitianMatrix4 sanitize(const Matrix4& m);

  const Matrix4& matrix() const { return m_; }
  operator const Matrix4&() const { return m_; }

 private:
  Matrix4 m_;
};

/// The fifteen traceless Hermitian generators L_1..L_15, each squaring to the
/// identity and mutually trace-orthogonal: tr(L_k L_l) = 4 delta_kl.
class GeneratorSet {
 public:
  /// 1-based.
  const Matrix4& operator()(int k) const;
  const std::array<Matrix4, kNumGenerators>& all() const { return gens_; }

 private:
  friend GeneratorSet build_generators();
  std::array<Matrix4, kNumGenerators> gens_;
};

/// L_1..L_7 are the diagonal and block-Pauli matrices; L_8..L_11 are L_4..L_7
/// conjugated by the 2<->3 row/column swap, L_12..L_15 by the 2<->4 swap.
GeneratorSet build_generators();

/// Process-wide immutable instance of build_generators().
const GeneratorSet& generators();

/// sum_k e_k L_k.
Matrix4 operator_from_coords(const CoordVector& e, const GeneratorSet& gens = generators());

struct OperatorCoords {
  double trace_part = 0;  // tr(A) / 4
  CoordVector e;          // e_k = tr(A L_k) / 4
};

/// Decomposition A = trace_part * 1 + e_k L_k. A must be Hermitian.
OperatorCoords coords_from_operator(const Matrix4& a, const GeneratorSet& gens = generators());

struct EigenDecomposition {
  std::array<double, kDim> values;  // ascending
  Matrix4 vectors;                  // column j is the eigenvector of values[j]

  Vector4 vector(std::size_t j) const;
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Rejects inputs whose Hermiticity defect exceeds kHermitianTol.
EigenDecomposition eigh(const Matrix4& a);

/// AB + BA.
Matrix4 anticommutator(const Matrix4& a, const Matrix4& b);

/// AB - BA.
Matrix4 commutator(const Matrix4& a, const Matrix4& b);

}  // namespace qcs

#endif  // QCS_ALGEBRA_H
