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

#include "qcs/evolution.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcs {
namespace {

CoordVector coords_of(const Matrix4& rho) {
  const auto& gens = generators();
  CoordVector out;
  for (int k = 1; k <= kNumGenerators; ++k) out(k) = trace_of_product(rho, gens(k)).real();
  return out;
}

}  // namespace

Hamiltonian::Hamiltonian(const Matrix4& m) : h_(m) {}

Propagator::Propagator(const Matrix4& m) : u_(m) {
  const double defect = unitarity_defect(m);
  if (defect > kHermitianTol) {
    throw std::invalid_argument("propagator is not unitary (defect " + std::to_string(defect) + ")");
  }
}

Propagator propagator_from_hamiltonian(const Hamiltonian& h, double t) {
  const EigenDecomposition eig = eigh(h.matrix());
  Matrix4 u;
  for (std::size_t j = 0; j < kDim; ++j) {
    const Complex phase = std::exp(Complex{0, -eig.values[j] * t});
    const Vector4 v = eig.vector(j);
    u += outer(v, v) * phase;
  }
  return Propagator(u);
}

StateCoords apply_propagator(const Propagator& u, const StateCoords& s) {
  const Matrix4 rho = density_from_coords(s);
  return StateCoords::from_coords(coords_of(u.matrix() * rho * u.matrix().adjoint()));
}

WaveFunction apply_propagator(const Propagator& u, const WaveFunction& psi) {
  return WaveFunction::normalized(u.matrix() * psi.amplitudes());
}

Propagator cnot_gate() {
  Matrix4 m;
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return Propagator(m);
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
  if (n < 2) throw std::invalid_argument("time grid needs at least two points");
  std::vector<double> g(n);
  const double h = (t1 - t0) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = t0 + h * static_cast<double>(i);
  return g;
}

Hamiltonian interference_hamiltonian(const InterferenceConfig& cfg) {
  const double r = 1.0 / std::sqrt(2.0);
  const Vector4 a{r, r, 0, 0};
  const Vector4 b{r, -r, 0, 0};
  Matrix4 h = outer(a, a) * Complex{cfg.omega_a} + outer(b, b) * Complex{cfg.omega_b};
  h(2, 2) += cfg.complement[0];
  h(2, 3) += cfg.complement[1];
  h(3, 2) += cfg.complement[2];
  h(3, 3) += cfg.complement[3];
  return Hamiltonian(h);
}

CoordVector interference_coords(double delta, double t) {
  CoordVector f;
  const double c = std::cos(delta * t), s = std::sin(delta * t);
  f(1) = 1.0;
  f(2) = c;
  f(3) = c;
  f(5) = -s;
  f(7) = -s;
  return f;
}

InterferenceSeries interference_scenario(const InterferenceConfig& cfg) {
  const Hamiltonian h = interference_hamiltonian(cfg);
  const StateCoords initial = coords_from_wavefunction(WaveFunction::basis(1));
  const Observable t2 = Observable::basis(2);

  InterferenceSeries out;
  out.points.reserve(cfg.times.size());
  for (double t : cfg.times) {
    const StateCoords st = apply_propagator(propagator_from_hamiltonian(h, t), initial);
    const double e2 = expectation(t2, st);
    out.max_dev_cos = std::max(out.max_dev_cos, std::abs(e2 - std::cos(cfg.delta() * t)));
    out.max_dev_coords = std::max(out.max_dev_coords, st.rho().max_abs_diff(interference_coords(cfg.delta(), t)));
    out.points.push_back({t, st, e2});
  }
  return out;
}

FiniteDifferenceCheck interference_finite_differences(const InterferenceSeries& series, double delta) {
  const auto& p = series.points;
  if (p.size() < 3) throw std::invalid_argument("finite differences need at least three points");
  FiniteDifferenceCheck fd;
  fd.step = p[1].t - p[0].t;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const double h2 = p[i + 1].t - p[i - 1].t;
    const double df2 = (p[i + 1].state(2) - p[i - 1].state(2)) / h2;
    const double df5 = (p[i + 1].state(5) - p[i - 1].state(5)) / h2;
    fd.max_residual_f2 = std::max(fd.max_residual_f2, std::abs(df2 - delta * p[i].state(5)));
    fd.max_residual_f5 = std::max(fd.max_residual_f5, std::abs(df5 + delta * p[i].state(2)));
  }
  return fd;
}

HeisenbergCheck heisenberg_check(const Observable& a, const Hamiltonian& h, const StateCoords& s, double t) {
  const Matrix4 u = propagator_from_hamiltonian(h, t).matrix();
  const Matrix4 rho = density_from_coords(s);
  HeisenbergCheck out;
  out.schrodinger = trace_of_product(a.op(), u * rho * u.adjoint()).real();
  out.heisenberg = trace_of_product(u.adjoint() * a.op() * u, rho).real();
  return out;
}

}  // namespace qcs
