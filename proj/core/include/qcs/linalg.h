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

#ifndef QCS_LINALG_H
#define QCS_LINALG_H

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>

namespace qcs {

using Complex = std::complex<double>;

inline constexpr std::size_t kDim = 4;
inline constexpr int kNumGenerators = 15;

/// Tolerance used by every Hermiticity / unitarity validation entry point.
inline constexpr double kHermitianTol = 1e-12;

/// Dense 4x4 complex matrix, row-major. Plain value type.
class Matrix4 {
 public:
  constexpr Matrix4() : entries_{} {}

  static Matrix4 identity();
  static Matrix4 zero() { return Matrix4{}; }
  static Matrix4 diagonal(const std::array<double, kDim>& d);
  /// Permutation matrix swapping basis rows a and b (1-indexed).
  static Matrix4 swap_rows(int a, int b);

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * kDim + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * kDim + col];
  }

  std::span<const Complex, kDim * kDim> entries() const { return entries_; }

  Matrix4 adjoint() const;
  Complex trace() const;

  /// Largest absolute entry.
  double max_norm() const;
  double frobenius_norm() const;

  Matrix4& operator+=(const Matrix4& o);
  Matrix4& operator-=(const Matrix4& o);
  Matrix4& operator*=(Complex s);

  friend Matrix4 operator+(Matrix4 a, const Matrix4& b) { return a += b; }
  friend Matrix4 operator-(Matrix4 a, const Matrix4& b) { return a -= b; }
  friend Matrix4 operator*(Matrix4 a, Complex s) { return a *= s; }
  friend Matrix4 operator*(Complex s, Matrix4 a) { return a *= s; }
  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);
  friend bool operator==(const Matrix4&, const Matrix4&) = default;

 private:
  std::array<Complex, kDim * kDim> entries_;
};

/// Complex 4-vector (wave-function amplitudes, eigenvector columns).
using Vector4 = std::array<Complex, kDim>;

Vector4 operator*(const Matrix4& m, const Vector4& v);
Complex inner(const Vector4& a, const Vector4& b);  // a^dagger b
double norm_squared(const Vector4& v);
Matrix4 outer(const Vector4& a, const Vector4& b);  // a b^dagger

/// tr(a b) without forming the product.
Complex trace_of_product(const Matrix4& a, const Matrix4& b);

/// max |A - A^dagger|.
double hermiticity_defect(const Matrix4& m);
/// max |U^dagger U - 1|.
double unitarity_defect(const Matrix4& m);

/// Real 15-vector indexed k = 1..15. Used both for observable directions e_k
/// and for state coordinates rho_k.
class CoordVector {
 public:
  constexpr CoordVector() : v_{} {}
  explicit CoordVector(const std::array<double, kNumGenerators>& values);

  /// Unit vector along generator k (1-based).
  static CoordVector unit(int k);

  /// 1-based access.
  double& operator()(int k);
  double operator()(int k) const;

  std::span<const double, kNumGenerators> values() const { return v_; }

  double dot(const CoordVector& o) const;
  double norm_squared() const { return dot(*this); }
  bool is_finite() const;

  CoordVector& operator+=(const CoordVector& o);
  CoordVector& operator*=(double s);
  friend CoordVector operator+(CoordVector a, const CoordVector& b) { return a += b; }
  friend CoordVector operator*(CoordVector a, double s) { return a *= s; }
  friend CoordVector operator*(double s, CoordVector a) { return a *= s; }
  friend bool operator==(const CoordVector&, const CoordVector&) = default;

  double max_abs_diff(const CoordVector& o) const;

 private:
  std::array<double, kNumGenerators> v_;
};

std::string to_string(const Matrix4& m);

}  // namespace qcs

#endif  // QCS_LINALG_H
