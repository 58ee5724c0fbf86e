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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcs {
namespace {

constexpr Complex kI{0, 1};

// Pauli blocks used for L_4..L_7.
Matrix4 block_pauli(bool use_y, bool flip_lower) {
  Matrix4 m;
  const Complex upper = use_y ? -kI : Complex{1};
  const Complex lower_sign = flip_lower ? -1.0 : 1.0;
  m(0, 1) = upper;
  m(1, 0) = std::conj(upper);
  m(2, 3) = lower_sign * upper;
  m(3, 2) = lower_sign * std::conj(upper);
  return m;
}

Matrix4 conjugate_by(const Matrix4& perm, const Matrix4& m) { return perm * m * perm; }

void require_hermitian(const Matrix4& a, const char* where) {
  const double defect = hermiticity_defect(a);
  if (defect > kHermitianTol) {
    throw std::invalid_argument(std::string(where) + ": matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
}

}  // namespace

HermitianMatrix4::HermitianMatrix4(const Matrix4& m) : m_(m) { require_hermitian(m, "HermitianMatrix4"); }

HermitianMatrix4 HermitianMatrix4::sanitize(const Matrix4& m) {
  HermitianMatrix4 h;
  h.m_ = (m + m.adjoint()) * Complex{0.5};
  return h;
}

const Matrix4& GeneratorSet::operator()(int k) const {
  if (k < 1 || k > kNumGenerators) throw std::out_of_range("generator index must be in 1..15");
  return gens_[static_cast<std::size_t>(k - 1)];
}

GeneratorSet build_generators() {
  GeneratorSet g;
  auto& L = g.gens_;
  L[0] = Matrix4::diagonal({1, 1, -1, -1});
  L[1] = Matrix4::diagonal({1, -1, 1, -1});
  L[2] = Matrix4::diagonal({1, -1, -1, 1});
  L[3] = block_pauli(false, false);
  L[4] = block_pauli(true, false);
  L[5] = block_pauli(false, true);
  L[6] = block_pauli(true, true);

  const Matrix4 p23 = Matrix4::swap_rows(2, 3);
  const Matrix4 p24 = Matrix4::swap_rows(2, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    L[7 + i] = conjugate_by(p23, L[3 + i]);
    L[11 + i] = conjugate_by(p24, L[3 + i]);
  }
  return g;
}

const GeneratorSet& generators() {
  static const GeneratorSet instance = build_generators();
  return instance;
}

Matrix4 operator_from_coords(const CoordVector& e, const GeneratorSet& gens) {
  Matrix4 a;
  for (int k = 1; k <= kNumGenerators; ++k) {
    if (e(k) != 0.0) a += gens(k) * Complex{e(k)};
  }
  return a;
}

OperatorCoords coords_from_operator(const Matrix4& a, const GeneratorSet& gens) {
  require_hermitian(a, "coords_from_operator");
  OperatorCoords out;
  out.trace_part = a.trace().real() / 4.0;
  for (int k = 1; k <= kNumGenerators; ++k) out.e(k) = trace_of_product(a, gens(k)).real() / 4.0;
  return out;
}

Vector4 EigenDecomposition::vector(std::size_t j) const {
  Vector4 v;
  for (std::size_t i = 0; i < kDim; ++i) v[i] = vectors(i, j);
  return v;
}

EigenDecomposition eigh(const Matrix4& input) {
  require_hermitian(input, "eigh");
  Matrix4 a = HermitianMatrix4::sanitize(input).matrix();
  Matrix4 v = Matrix4::identity();

  const double threshold = 1e-14 * std::max(1.0, a.frobenius_norm());
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        if (i != j) off += std::norm(a(i, j));
    if (std::sqrt(off) < threshold) break;

    for (std::size_t p = 0; p < kDim; ++p) {
      for (std::size_t q = p + 1; q < kDim; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const Complex phase = a(p, q) / mag;  // e^{i phi}

        // Real Jacobi rotation on the phase-rotated pair (p, q).
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        Matrix4 g = Matrix4::identity();
        g(p, p) = c;
        g(p, q) = s;
        g(q, p) = -s * std::conj(phase);
        g(q, q) = c * std::conj(phase);

        a = g.adjoint() * a * g;
        a(p, q) = 0;
        a(q, p) = 0;
        for (std::size_t i = 0; i < kDim; ++i) a(i, i) = a(i, i).real();
        v = v * g;
      }
    }
  }

  std::array<std::size_t, kDim> order;
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out;
  for (std::size_t j = 0; j < kDim; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < kDim; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

Matrix4 anticommutator(const Matrix4& a, const Matrix4& b) { return a * b + b * a; }

Matrix4 commutator(const Matrix4& a, const Matrix4& b) { return a * b - b * a; }

}  // namespace qcs
