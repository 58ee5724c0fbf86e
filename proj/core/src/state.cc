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

#include "qcs/state.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qcs {
namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Matrix4 raw_density(const CoordVector& rho, const GeneratorSet& gens) {
  Matrix4 m = Matrix4::identity() + operator_from_coords(rho, gens);
  return m * Complex{0.25};
}

CoordVector coords_of(const Matrix4& rho, const GeneratorSet& gens) {
  CoordVector out;
  for (int k = 1; k <= kNumGenerators; ++k) out(k) = trace_of_product(rho, gens(k)).real();
  return out;
}

void require_positive(const std::array<double, kDim>& eig) {
  for (double p : eig) {
    if (p < -kPositivityTol || p > 1.0 + kPositivityTol) {
      throw std::invalid_argument("positivity violated: density matrix eigenvalue " + fmt(p) +
                                  " outside [0, 1]");
    }
  }
}

}  // namespace

WaveFunction::WaveFunction(const Vector4& amplitudes) : amps_(amplitudes) {
  const double n = norm_squared(amps_);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTol) {
    throw std::invalid_argument("wave function is not normalized (|psi|^2 = " + fmt(n) + ")");
  }
}

WaveFunction WaveFunction::normalized(const Vector4& amplitudes) {
  const double n = std::sqrt(norm_squared(amplitudes));
  if (!(n > 0) || !std::isfinite(n)) throw std::invalid_argument("cannot normalize a zero wave function");
  Vector4 v = amplitudes;
  for (auto& x : v) x /= n;
  return WaveFunction(v);
}

WaveFunction WaveFunction::basis(int m) {
  if (m < 1 || m > 4) throw std::out_of_range("basis index must be in 1..4");
  Vector4 v{};
  v[static_cast<std::size_t>(m - 1)] = 1.0;
  return WaveFunction(v);
}

Matrix4 projector(const WaveFunction& psi) { return outer(psi.amplitudes(), psi.amplitudes()); }

StateCoords StateCoords::from_coords(const CoordVector& rho) {
  if (!rho.is_finite()) throw std::invalid_argument("state coordinates must be finite");
  const double p = rho.norm_squared();
  if (p > kMaxPurity + kPurityBoundTol) {
    throw std::invalid_argument("purity bound violated: sum rho_k^2 = " + fmt(p) + " > 3");
  }
  require_positive(eigh(raw_density(rho, generators())).values);
  StateCoords s;
  s.rho_ = rho;
  s.purity_ = p;
  return s;
}

Matrix4 density_from_coords(const CoordVector& rho, const GeneratorSet& gens) {
  Matrix4 m = raw_density(rho, gens);
  require_positive(eigh(m).values);
  return m;
}

Matrix4 density_from_coords(const StateCoords& s, const GeneratorSet& gens) { return raw_density(s.rho(), gens); }

StateCoords coords_from_density(const Matrix4& rho, const GeneratorSet& gens) {
  if (hermiticity_defect(rho) > kHermitianTol) throw std::invalid_argument("density matrix is not Hermitian");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) throw std::invalid_argument("density matrix trace " + fmt(tr) + " != 1");
  require_positive(eigh(rho).values);
  return StateCoords::from_coords(coords_of(rho, gens));
}

StateCoords coords_from_wavefunction(const WaveFunction& psi, const GeneratorSet& gens) {
  CoordVector f;
  for (int k = 1; k <= kNumGenerators; ++k) f(k) = inner(psi.amplitudes(), gens(k) * psi.amplitudes()).real();
  return StateCoords::from_coords(f);
}

double purity(const StateCoords& s) { return s.rho().norm_squared(); }

StateDiagnostics check_state(const CoordVector& rho, const GeneratorSet& gens) {
  StateDiagnostics d;
  const Matrix4 m = raw_density(rho, gens);
  d.raw_eigenvalues = eigh(m).values;
  d.purity = rho.norm_squared();
  d.positive = std::all_of(d.raw_eigenvalues.begin(), d.raw_eigenvalues.end(), [](double p) {
    return p >= -kPositivityTol && p <= 1.0 + kPositivityTol;
  });
  for (std::size_t i = 0; i < kDim; ++i) {
    const double p = d.raw_eigenvalues[i];
    d.eigenvalues[i] = (p < 0 && p >= -kPositivityTol) ? 0.0 : (p > 1 && p <= 1 + kPositivityTol) ? 1.0 : p;
  }
  d.pure.defect = (m * m - m).max_norm();
  d.pure.is_pure = d.pure.defect < kPureDefectTol;
  return d;
}

StateDiagnostics check_state(const StateCoords& s, const GeneratorSet& gens) { return check_state(s.rho(), gens); }

StateCoords with_purity(const StateCoords& pure, double target) {
  if (!(target >= 0.0 && target <= kMaxPurity)) throw std::invalid_argument("target purity must be in [0, 3]");
  if (std::abs(pure.purity() - kMaxPurity) > 1e-9) throw std::invalid_argument("with_purity expects a pure state");
  return StateCoords::from_coords(pure.rho() * std::sqrt(target / kMaxPurity));
}

StateCoords mix(std::span<const std::pair<double, StateCoords>> states) {
  if (states.empty()) throw std::invalid_argument("mix: no states given");
  double total = 0;
  CoordVector acc;
  for (const auto& [w, s] : states) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("mix: weights must be nonnegative");
    total += w;
    acc += s.rho() * w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("mix: weights must sum to 1, got " + fmt(total));
  return StateCoords::from_coords(acc);
}

std::string to_record(const StateCoords& s) {
  std::string out;
  for (int k = 1; k <= kNumGenerators; ++k) {
    if (k > 1) out += ' ';
    out += fmt(s(k));
  }
  return out;
}

StateCoords parse_record(const std::string& line) {
  std::istringstream in(line);
  CoordVector rho;
  for (int k = 1; k <= kNumGenerators; ++k) {
    std::string tok;
    if (!(in >> tok)) throw std::invalid_argument("state record has fewer than 15 coordinates");
    std::size_t used = 0;
    double x;
    try {
      x = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("state record: bad number '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("state record: bad number '" + tok + "'");
    rho(k) = x;
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("state record has more than 15 coordinates");
  return StateCoords::from_coords(rho);
}

}  // namespace qcs
