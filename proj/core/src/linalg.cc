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

#include "qcs/linalg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qcs {

Matrix4 Matrix4::identity() { return diagonal({1, 1, 1, 1}); }

Matrix4 Matrix4::diagonal(const std::array<double, kDim>& d) {
  Matrix4 m;
  for (std::size_t i = 0; i < kDim; ++i) m(i, i) = d[i];
  return m;
}

Matrix4 Matrix4::swap_rows(int a, int b) {
  if (a < 1 || a > 4 || b < 1 || b > 4) throw std::invalid_argument("swap_rows: index out of range");
  std::array<std::size_t, kDim> perm{0, 1, 2, 3};
  std::swap(perm[a - 1], perm[b - 1]);
  Matrix4 m;
  for (std::size_t i = 0; i < kDim; ++i) m(i, perm[i]) = 1;
  return m;
}

Matrix4 Matrix4::adjoint() const {
  Matrix4 r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

Complex Matrix4::trace() const {
  Complex t = 0;
  for (std::size_t i = 0; i < kDim; ++i) t += (*this)(i, i);
  return t;
}

double Matrix4::max_norm() const {
  double m = 0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double Matrix4::frobenius_norm() const {
  double s = 0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

Matrix4& Matrix4::operator+=(const Matrix4& o) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Matrix4& Matrix4::operator-=(const Matrix4& o) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Matrix4& Matrix4::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t k = 0; k < kDim; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < kDim; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Vector4 operator*(const Matrix4& m, const Vector4& v) {
  Vector4 r{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r[i] += m(i, j) * v[j];
  return r;
}

Complex inner(const Vector4& a, const Vector4& b) {
  Complex s = 0;
  for (std::size_t i = 0; i < kDim; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm_squared(const Vector4& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

Matrix4 outer(const Vector4& a, const Vector4& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r(i, j) = a[i] * std::conj(b[j]);
  return r;
}

Complex trace_of_product(const Matrix4& a, const Matrix4& b) {
  Complex t = 0;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t k = 0; k < kDim; ++k) t += a(i, k) * b(k, i);
  return t;
}

double hermiticity_defect(const Matrix4& m) { return (m - m.adjoint()).max_norm(); }

double unitarity_defect(const Matrix4& m) { return (m.adjoint() * m - Matrix4::identity()).max_norm(); }

CoordVector::CoordVector(const std::array<double, kNumGenerators>& values) : v_(values) {}

CoordVector CoordVector::unit(int k) {
  CoordVector e;
  e(k) = 1.0;
  return e;
}

double& CoordVector::operator()(int k) {
  if (k < 1 || k > kNumGenerators) throw std::out_of_range("generator index must be in 1..15");
  return v_[static_cast<std::size_t>(k - 1)];
}

double CoordVector::operator()(int k) const {
  if (k < 1 || k > kNumGenerators) throw std::out_of_range("generator index must be in 1..15");
  return v_[static_cast<std::size_t>(k - 1)];
}

double CoordVector::dot(const CoordVector& o) const {
  double s = 0;
  for (std::size_t i = 0; i < v_.size(); ++i) s += v_[i] * o.v_[i];
  return s;
}

bool CoordVector::is_finite() const {
  return std::all_of(v_.begin(), v_.end(), [](double x) { return std::isfinite(x); });
}

CoordVector& CoordVector::operator+=(const CoordVector& o) {
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

CoordVector& CoordVector::operator*=(double s) {
  for (auto& x : v_) x *= s;
  return *this;
}

double CoordVector::max_abs_diff(const CoordVector& o) const {
  double m = 0;
  for (std::size_t i = 0; i < v_.size(); ++i) m = std::max(m, std::abs(v_[i] - o.v_[i]));
  return m;
}

std::string to_string(const Matrix4& m) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < kDim; ++i) {
    out += "[";
    for (std::size_t j = 0; j < kDim; ++j) {
      std::snprintf(buf, sizeof buf, "%s(%.6g,%.6g)", j ? " " : "", m(i, j).real(), m(i, j).imag());
      out += buf;
    }
    out += "]\n";
  }
  return out;
}

}  // namespace qcs
