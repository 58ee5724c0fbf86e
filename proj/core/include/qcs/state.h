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

#ifndef QCS_STATE_H
#define QCS_STATE_H

#include <array>
#include <span>
#include <string>
#include <utility>

#include "qcs/algebra.h"
#include "qcs/linalg.h"

namespace qcs {

inline constexpr double kPurityBoundTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kPureDefectTol = 1e-10;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kMaxPurity = 3.0;

/// Normalized four-component wave function.
class WaveFunction {
 public:
  /// Throws std::invalid_argument unless sum |psi_a|^2 = 1 within kNormTol.
  explicit WaveFunction(const Vector4& amplitudes);

  /// Rescales to unit norm. Throws on the zero vector.
  static WaveFunction normalized(const Vector4& amplitudes);
  /// psi_m, 1-based.
  static WaveFunction basis(int m);

  const Vector4& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

 private:
  Vector4 amps_;
};

/// psi psi^dagger.
Matrix4 projector(const WaveFunction& psi);

/// Subsystem state: the fifteen expectation values rho_k, always satisfying
/// the purity bound and the positivity of 1/4 (1 + rho_k L_k).
class StateCoords {
 public:
  /// The maximally mixed state, rho_k = 0.
  StateCoords() = default;

  /// Validates purity and positivity; throws std::invalid_argument naming
  /// the violated bound (and offending eigenvalue for positivity).
  static StateCoords from_coords(const CoordVector& rho);

  const CoordVector& rho() const { return rho_; }
  double operator()(int k) const { return rho_(k); }
  /// Cached sum_k rho_k^2.
  double purity() const { return purity_; }

 private:
  CoordVector rho_;
  double purity_ = 0;
};

/// 1/4 (1 + rho_k L_k). Throws on a positivity violation.
Matrix4 density_from_coords(const CoordVector& rho, const GeneratorSet& gens = generators());
Matrix4 density_from_coords(const StateCoords& s, const GeneratorSet& gens = generators());

/// rho_k = tr(rho L_k). Rejects non-Hermitian, trace != 1, or non-positive input.
StateCoords coords_from_density(const Matrix4& rho, const GeneratorSet& gens = generators());

/// f_k = psi^dagger L_k psi.
StateCoords coords_from_wavefunction(const WaveFunction& psi, const GeneratorSet& gens = generators());

double purity(const StateCoords& s);

struct PureStateFlag {
  bool is_pure = false;
  double defect = 0;  // max |rho^2 - rho|
};

struct StateDiagnostics {
  std::array<double, kDim> eigenvalues{};  // ascending, clamped to [0, 1] within tolerance
  std::array<double, kDim> raw_eigenvalues{};
  double purity = 0;
  bool positive = false;
  PureStateFlag pure;
};

/// Non-throwing diagnostic for arbitrary coordinates.
StateDiagnostics check_state(const CoordVector& rho, const GeneratorSet& gens = generators());
StateDiagnostics check_state(const StateCoords& s, const GeneratorSet& gens = generators());

/// Radial map from a pure state to purity `target`: rho_k = (P/3)^{1/2} f_k.
StateCoords with_purity(const StateCoords& pure, double target);

/// Convex combination of states. Weights must be nonnegative and sum to 1.
StateCoords mix(std::span<const std::pair<double, StateCoords>> states);

/// One-line record of 15 space-separated coordinates at 17 significant digits.
std::string to_record(const StateCoords& s);
/// Parses a record written by to_record; validates the resulting state.
StateCoords parse_record(const std::string& line);

}  // namespace qcs

#endif  // QCS_STATE_H
