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

#ifndef QCS_OBSERVABLES_H
#define QCS_OBSERVABLES_H

#include <optional>
#include <vector>

#include "qcs/algebra.h"
#include "qcs/linalg.h"
#include "qcs/state.h"

namespace qcs {

inline constexpr double kTwoLevelTol = 1e-12;
/// Conditional columns with w_{1,gamma} below this are reported undefined.
inline constexpr double kUndefinedColumnTol = 1e-12;
/// Eigenvalues closer than this are merged in spectral_probabilities.
inline constexpr double kSpectralMergeTol = 1e-9;

/// A system observable labelled by its direction e_k, with operator
/// A = e_k L_k. two_level() is true iff A^2 = 1 within kTwoLevelTol; a unit
/// direction is necessary for this but not sufficient.
class Observable {
 public:
  static Observable from_coords(const CoordVector& e, const GeneratorSet& gens = generators());
  /// T_k, the basis observable along L_k.
  static Observable basis(int k);

  const CoordVector& direction() const { return e_; }
  const Matrix4& op() const { return op_; }
  bool two_level() const { return two_level_; }
  /// max |A^2 - 1|.
  double two_level_defect() const { return two_level_defect_; }

 private:
  CoordVector e_;
  Matrix4 op_;
  bool two_level_ = false;
  double two_level_defect_ = 0;
};

/// tr(A rho), cross-checked against e_k rho_k.
double expectation(const Observable& a, const StateCoords& s);

struct OutcomePair {
  double plus = 0;
  double minus = 0;
};

/// w_+- = (1 +- rho_k e_k) / 2. Throws std::invalid_argument unless A is two-level.
OutcomePair outcome_probabilities(const Observable& a, const StateCoords& s);

/// Joint probabilities for (bit 1, bit 2) from <T_1>, <T_2>, <T_3>.
struct OutcomeTable {
  double w_pp = 0, w_pm = 0, w_mp = 0, w_mm = 0;
};
OutcomeTable joint_outcomes(const StateCoords& s);

/// <A^2> - <A>^2.
double dispersion(const Observable& a, const StateCoords& s);

/// <AB>_m = tr({A, B} rho) / 2.
double measurement_correlation(const Observable& a, const Observable& b, const StateCoords& s);

/// p(eps; gamma): probability of bit 2 = eps given bit 1 measured as gamma.
/// A column is empty when w_{1,gamma} vanishes.
struct ConditionalTable {
  double w1_plus = 0, w1_minus = 0;
  std::optional<double> p_1_given_1, p_m1_given_1;
  std::optional<double> p_1_given_m1, p_m1_given_m1;

  /// p(1;1)w1+ + p(-1;-1)w1- - p(1;-1)w1- - p(-1;1)w1+; requires both columns.
  std::optional<double> reconstructed_correlation() const;
};
ConditionalTable conditional_probabilities(const StateCoords& s);

struct SpectralLine {
  double eigenvalue = 0;
  double probability = 0;
};
/// Outcome distribution of a general Hermitian operator via its spectral projectors.
std::vector<SpectralLine> spectral_probabilities(const Matrix4& a, const StateCoords& s);

}  // namespace qcs

#endif  // QCS_OBSERVABLES_H
