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

#include "qcs/observables.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcs {

Observable Observable::from_coords(const CoordVector& e, const GeneratorSet& gens) {
  if (!e.is_finite()) throw std::invalid_argument("observable direction must be finite");
  Observable o;
  o.e_ = e;
  o.op_ = operator_from_coords(e, gens);
  o.two_level_defect_ = (o.op_ * o.op_ - Matrix4::identity()).max_norm();
  o.two_level_ = o.two_level_defect_ < kTwoLevelTol;
  return o;
}

Observable Observable::basis(int k) { return from_coords(CoordVector::unit(k)); }

double expectation(const Observable& a, const StateCoords& s) {
  const double via_trace = trace_of_product(a.op(), density_from_coords(s)).real();
  const double via_coords = a.direction().dot(s.rho());
  double scale = 1.0;
  for (double x : a.direction().values()) scale += std::abs(x);
  if (std::abs(via_trace - via_coords) > 1e-12 * scale) {
    throw std::logic_error("expectation: trace and coordinate paths disagree");
  }
  return via_trace;
}

OutcomePair outcome_probabilities(const Observable& a, const StateCoords& s) {
  if (!a.two_level()) {
    throw std::invalid_argument("outcome_probabilities needs a two-level observable (|A^2 - 1| = " +
                                std::to_string(a.two_level_defect()) + ")");
  }
  const double mean = a.direction().dot(s.rho());
  return {0.5 * (1.0 + mean), 0.5 * (1.0 - mean)};
}

OutcomeTable joint_outcomes(const StateCoords& s) {
  const double r1 = s(1), r2 = s(2), r3 = s(3);
  return {0.25 * (1 + r1 + r2 + r3), 0.25 * (1 + r1 - r2 - r3), 0.25 * (1 - r1 + r2 - r3),
          0.25 * (1 - r1 - r2 + r3)};
}

double dispersion(const Observable& a, const StateCoords& s) {
  const Matrix4 rho = density_from_coords(s);
  const double second = trace_of_product(a.op() * a.op(), rho).real();
  const double first = trace_of_product(a.op(), rho).real();
  return second - first * first;
}

double measurement_correlation(const Observable& a, const Observable& b, const StateCoords& s) {
  return 0.5 * trace_of_product(anticommutator(a.op(), b.op()), density_from_coords(s)).real();
}

std::optional<double> ConditionalTable::reconstructed_correlation() const {
  if (!p_1_given_1 || !p_1_given_m1) return std::nullopt;
  return *p_1_given_1 * w1_plus + *p_m1_given_m1 * w1_minus - *p_1_given_m1 * w1_minus - *p_m1_given_1 * w1_plus;
}

ConditionalTable conditional_probabilities(const StateCoords& s) {
  const OutcomeTable w = joint_outcomes(s);
  ConditionalTable c;
  c.w1_plus = 0.5 * (1.0 + s(1));
  c.w1_minus = 0.5 * (1.0 - s(1));
  // Joint index is (bit 1, bit 2): w_{gamma eps}.
  if (c.w1_plus > kUndefinedColumnTol) {
    c.p_1_given_1 = w.w_pp / c.w1_plus;
    c.p_m1_given_1 = w.w_pm / c.w1_plus;
  }
  if (c.w1_minus > kUndefinedColumnTol) {
    c.p_1_given_m1 = w.w_mp / c.w1_minus;
    c.p_m1_given_m1 = w.w_mm / c.w1_minus;
  }
  return c;
}

std::vector<SpectralLine> spectral_probabilities(const Matrix4& a, const StateCoords& s) {
  const EigenDecomposition eig = eigh(a);
  const Matrix4 rho = density_from_coords(s);
  std::vector<SpectralLine> out;
  std::size_t j = 0;
  while (j < kDim) {
    const double head = eig.values[j];
    Matrix4 proj;
    double sum = 0;
    std::size_t count = 0;
    while (j < kDim && eig.values[j] - head < kSpectralMergeTol) {
      const Vector4 v = eig.vector(j);
      proj += outer(v, v);
      sum += eig.values[j];
      ++count;
      ++j;
    }
    out.push_back({sum / static_cast<double>(count), trace_of_product(proj, rho).real()});
  }
  return out;
}

}  // namespace qcs
