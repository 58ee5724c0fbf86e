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

#include "qcs/bell.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcs {
namespace {

Observable planar(int k_cos, int k_sin, double theta) {
  CoordVector e;
  e(k_cos) = std::cos(theta);
  e(k_sin) = std::sin(theta);
  Observable o = Observable::from_coords(e);
  if (!o.two_level()) throw std::logic_error("CHSH observable is not two-level");
  return o;
}

double chsh_value(double e_ab, double e_abp, double e_apb, double e_apbp) {
  return std::abs(e_ab - e_abp + e_apb + e_apbp);
}

int checked(const ClassicalAssignment& f, SpinConfig c) {
  const int v = f(c);
  if (v != 1 && v != -1) throw std::invalid_argument("classical assignment must return +1 or -1");
  return v;
}

double classical_pair(const ClassicalEnsemble& ens, const ClassicalAssignment& x, const ClassicalAssignment& y) {
  return classical_average(ens, [&](SpinConfig c, int) { return static_cast<double>(checked(x, c) * checked(y, c)); });
}

}  // namespace

Observable bit1_observable(double theta) { return planar(1, 8, theta); }
Observable bit2_observable(double theta) { return planar(2, 4, theta); }

ChshResult chsh_quantum(const StateCoords& s, const ChshSetting& st) {
  const Observable a = bit1_observable(st.a), ap = bit1_observable(st.a_prime);
  const Observable b = bit2_observable(st.b), bp = bit2_observable(st.b_prime);
  ChshResult r;
  r.e_ab = measurement_correlation(a, b, s);
  r.e_abp = measurement_correlation(a, bp, s);
  r.e_apb = measurement_correlation(ap, b, s);
  r.e_apbp = measurement_correlation(ap, bp, s);
  r.s = chsh_value(r.e_ab, r.e_abp, r.e_apb, r.e_apbp);
  return r;
}

ClassicalAssignments spin_assignments(int ka, int ka_prime, int kb, int kb_prime) {
  auto spin = [](int k) -> ClassicalAssignment {
    if (k < 1 || k > kNumSpins) throw std::out_of_range("spin index must be in 1..15");
    return [k](SpinConfig c) { return c.sigma(k); };
  };
  return {spin(ka), spin(ka_prime), spin(kb), spin(kb_prime)};
}

ChshResult chsh_classical(const ClassicalEnsemble& ens, const ClassicalAssignments& as) {
  ChshResult r;
  r.e_ab = classical_pair(ens, as.a, as.b);
  r.e_abp = classical_pair(ens, as.a, as.b_prime);
  r.e_apb = classical_pair(ens, as.a_prime, as.b);
  r.e_apbp = classical_pair(ens, as.a_prime, as.b_prime);
  r.s = chsh_value(r.e_ab, r.e_abp, r.e_apb, r.e_apbp);
  return r;
}

ClassicalChshMax max_classical_chsh(const ClassicalEnsemble& ens) {
  std::array<std::array<double, kNumSpins + 1>, kNumSpins + 1> corr{};
  for (int k = 1; k <= kNumSpins; ++k) {
    corr[k][k] = 1.0;
    for (int l = k + 1; l <= kNumSpins; ++l) corr[k][l] = corr[l][k] = classical_correlation(ens, k, l);
  }
  ClassicalChshMax best;
  for (int a = 1; a <= kNumSpins; ++a)
    for (int ap = 1; ap <= kNumSpins; ++ap)
      for (int b = 1; b <= kNumSpins; ++b)
        for (int bp = 1; bp <= kNumSpins; ++bp) {
          const double s = chsh_value(corr[a][b], corr[a][bp], corr[ap][b], corr[ap][bp]);
          if (s > best.s) best = {s, {a, ap, b, bp}};
        }
  return best;
}

ChshScan chsh_grid_scan(const StateCoords& s, std::size_t n) {
  if (n < 2) throw std::invalid_argument("CHSH grid needs at least two angles");
  std::vector<double> angle(n);
  for (std::size_t i = 0; i < n; ++i) angle[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);

  std::vector<Observable> obs1, obs2;
  for (double th : angle) {
    obs1.push_back(bit1_observable(th));
    obs2.push_back(bit2_observable(th));
  }
  std::vector<double> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = measurement_correlation(obs1[i], obs2[j], s);

  ChshScan scan;
  scan.best_s = -1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t ip = 0; ip < n; ++ip)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t jp = 0; jp < n; ++jp) {
          const double v = chsh_value(e[i * n + j], e[i * n + jp], e[ip * n + j], e[ip * n + jp]);
          if (v > scan.best_s) {
            scan.best_s = v;
            scan.best = {angle[i], angle[ip], angle[j], angle[jp]};
          }
        }
  scan.points = n * n * n * n;
  return scan;
}

ChshScan refine_chsh(const StateCoords& s, const ChshSetting& start, std::size_t n, double tol) {
  const double half_width = 2.0 * std::numbers::pi / static_cast<double>(n);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  ChshSetting cur = start;
  for (double ChshSetting::*member : {&ChshSetting::a, &ChshSetting::a_prime, &ChshSetting::b, &ChshSetting::b_prime}) {
    auto value = [&](double x) {
      ChshSetting trial = cur;
      trial.*member = x;
      return chsh_quantum(s, trial).s;
    };
    double lo = cur.*member - half_width, hi = cur.*member + half_width;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = value(x1), f2 = value(x2);
    while (hi - lo > tol) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = value(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = value(x1);
      }
    }
    const double candidate = 0.5 * (lo + hi);
    if (value(candidate) > value(cur.*member)) cur.*member = candidate;
  }
  return {cur, chsh_quantum(s, cur).s, 0};
}

std::vector<CorrelationGap> correlation_gap_report(const StateCoords& s) {
  const ClassicalEnsemble ens = build_subsystem_distribution(s);
  std::vector<CorrelationGap> out;
  for (int k = 1; k <= kNumSpins; ++k)
    for (int l = k + 1; l <= kNumSpins; ++l) {
      out.push_back({k, l, classical_correlation(ens, k, l),
                     measurement_correlation(Observable::basis(k), Observable::basis(l), s)});
    }
  return out;
}

}  // namespace qcs
