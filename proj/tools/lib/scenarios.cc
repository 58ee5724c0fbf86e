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

#include "scenarios.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <future>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qcs/algebra.h"
#include "qcs/bell.h"
#include "qcs/ensemble.h"
#include "qcs/evolution.h"
#include "qcs/observables.h"
#include "qcs/random.h"
#include "qcs/state.h"
#include "qcs/symmetry.h"

namespace qcs::tools {

using json = nlohmann::ordered_json;
using std::numbers::pi;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::size_t ScenarioReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

std::size_t Summary::failures() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.failures();
  return n;
}

namespace {

// Independent stream per scenario so results do not depend on run order.
Rng scenario_rng(std::uint64_t seed, std::uint64_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag)};
  return Rng(seq);
}

json check_json(const Check& c) {
  return json{{"name", c.name},
              {"relation", c.kind == Check::Kind::kUpper ? "<=" : ">"},
              {"measured", c.measured},
              {"tolerance", c.tolerance},
              {"passed", c.passed}};
}

std::string check_line(const Check& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s  %-48s measured=%.6e %s %.3e\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                c.measured, c.kind == Check::Kind::kUpper ? "<=" : ">", c.tolerance);
  return buf;
}

class Recorder {
 public:
  Recorder(std::string name, const ScenarioConfig& cfg) : scale_(cfg.tolerance_scale) {
    report_.name = std::move(name);
    report_.data = json::object();
  }

  void upper(std::string name, double measured, double tol) { add(std::move(name), measured, tol, Check::Kind::kUpper); }
  void lower(std::string name, double measured, double tol) { add(std::move(name), measured, tol, Check::Kind::kLower); }
  void holds(std::string name, bool ok) { upper(std::move(name), ok ? 0.0 : 1.0, 0.0); }

  json& data() { return report_.data; }
  void artifact(std::string filename, std::string content) {
    report_.artifacts.push_back({std::move(filename), std::move(content)});
  }

  ScenarioReport finish() {
    json doc{{"scenario", report_.name},
             {"passed", report_.passed()},
             {"failures", report_.failures()},
             {"checks", json::array()},
             {"data", report_.data}};
    std::string text = "scenario " + report_.name + "\n";
    for (const auto& c : report_.checks) {
      doc["checks"].push_back(check_json(c));
      text += check_line(c);
    }
    text += "result: " + std::string(report_.passed() ? "PASS" : "FAIL") + " (" +
            std::to_string(report_.checks.size() - report_.failures()) + "/" + std::to_string(report_.checks.size()) +
            " checks)\n";
    report_.artifacts.insert(report_.artifacts.begin(), {{report_.name + ".json", doc.dump(2) + "\n"},
                                                         {report_.name + ".txt", text}});
    return std::move(report_);
  }

 private:
  void add(std::string name, double measured, double tol, Check::Kind kind) {
    const double t = tol * scale_;
    const bool ok = std::isfinite(measured) && (kind == Check::Kind::kUpper ? measured <= t : measured > t);
    report_.checks.push_back({std::move(name), measured, t, kind, ok});
  }

  double scale_;
  ScenarioReport report_;
};

json coords_json(const CoordVector& v) {
  json a = json::array();
  for (double x : v.values()) a.push_back(x);
  return a;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json outcome_json(const OutcomeTable& t) {
  return json{{"w_pp", t.w_pp}, {"w_pm", t.w_pm}, {"w_mp", t.w_mp}, {"w_mm", t.w_mm}};
}

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

json conditional_json(const ConditionalTable& t) {
  return json{{"p_1_given_1", optional_json(t.p_1_given_1)},
              {"p_1_given_m1", optional_json(t.p_1_given_m1)},
              {"p_m1_given_1", optional_json(t.p_m1_given_1)},
              {"p_m1_given_m1", optional_json(t.p_m1_given_m1)}};
}

json setting_json(const ChshSetting& s) {
  return json{{"a", s.a}, {"a_prime", s.a_prime}, {"b", s.b}, {"b_prime", s.b_prime}};
}

json chsh_json(const ChshSetting& setting, const ChshResult& r) {
  return json{{"settings", setting_json(setting)},
              {"E", {{"ab", r.e_ab}, {"ab_prime", r.e_abp}, {"a_prime_b", r.e_apb}, {"a_prime_b_prime", r.e_apbp}}},
              {"S", r.s},
              {"bound_flags",
               {{"exceeds_classical", r.s > kClassicalChshBound + 1e-12},
                {"exceeds_tsirelson", r.s > kTsirelsonBound + 1e-9}}}};
}

std::string coords_csv_row(const CoordVector& v) {
  std::string row;
  for (double x : v.values()) row += "," + format_double(x);
  return row;
}

std::string coords_csv_header(const char* first) {
  std::string h = first;
  for (int k = 1; k <= kNumGenerators; ++k) h += ",rho_" + std::to_string(k);
  return h;
}

std::vector<double> uniform_env(int z) { return std::vector<double>(static_cast<std::size_t>(z), 1.0 / z); }

// Largest eigenvalue excursion outside [0, 1].
double eigen_excursion(const StateCoords& s) {
  const auto d = check_state(s);
  return std::max({0.0, -d.raw_eigenvalues.front(), d.raw_eigenvalues.back() - 1.0});
}

bool throws_invalid(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::invalid_argument&) {
    return true;
  }
  return false;
}

}  // namespace

ScenarioReport run_algebra(const ScenarioConfig& cfg) {
  Recorder rec("algebra", cfg);
  const auto& L = generators();

  double integrality = 0, involution = 0, hermitian = 0, traceless = 0, orthogonality = 0;
  for (int k = 1; k <= kNumGenerators; ++k) {
    for (const Complex& x : L(k).entries()) {
      integrality = std::max({integrality, std::abs(x.real() - std::round(x.real())),
                              std::abs(x.imag() - std::round(x.imag()))});
    }
    involution = std::max(involution, (L(k) * L(k) - Matrix4::identity()).max_norm());
    hermitian = std::max(hermitian, hermiticity_defect(L(k)));
    traceless = std::max(traceless, std::abs(L(k).trace()));
    for (int l = k; l <= kNumGenerators; ++l) {
      orthogonality = std::max(orthogonality, std::abs(trace_of_product(L(k), L(l)) - Complex(k == l ? 4.0 : 0.0)));
    }
  }
  rec.upper("generators.integer_entries", integrality, 0.0);
  rec.upper("generators.square_to_identity", involution, 0.0);
  rec.upper("generators.hermitian", hermitian, 0.0);
  rec.upper("generators.traceless", traceless, 0.0);
  rec.upper("generators.trace_orthonormal_pairs", orthogonality, 0.0);

  // Two-level law on rotated basis observables, which square to one by construction.
  Rng rng = scenario_rng(cfg.seed, 1);
  double w_range = 0, w_formula = 0, w_trace = 0, square_defect = 0;
  std::size_t accepted = 0;
  for (int n = 0; n < 1000; ++n) {
    const Matrix4 u = random_unitary(rng);
    const Matrix4 a = u * L(1 + n % kNumGenerators) * u.adjoint();
    const Observable obs = Observable::from_coords(coords_from_operator(HermitianMatrix4::sanitize(a)).e);
    square_defect = std::max(square_defect, obs.two_level_defect());
    if (!obs.two_level()) continue;
    ++accepted;
    const StateCoords s = random_state(rng);
    const OutcomePair w = outcome_probabilities(obs, s);
    const double e_dot_rho = obs.direction().dot(s.rho());
    const double trace = trace_of_product(obs.op(), density_from_coords(s)).real();
    w_range = std::max({w_range, -w.plus, -w.minus, w.plus - 1.0, w.minus - 1.0});
    w_formula = std::max({w_formula, std::abs(w.plus - 0.5 * (1 + e_dot_rho)), std::abs(w.minus - 0.5 * (1 - e_dot_rho))});
    w_trace = std::max(w_trace, std::abs((w.plus - w.minus) - trace));
  }
  rec.upper("two_level.unit_directions_rejected", static_cast<double>(1000 - accepted), 0.0);
  rec.upper("two_level.square_defect", square_defect, kTwoLevelTol);
  rec.upper("two_level.probabilities_outside_unit_interval", std::max(0.0, w_range), 0.0);
  rec.upper("two_level.closed_form", w_formula, 1e-12);
  rec.upper("two_level.trace_formula", w_trace, 1e-12);

  CoordVector mixed_axis = (CoordVector::unit(1) + CoordVector::unit(4)) * (1 / std::numbers::sqrt2);
  const Observable commuting = Observable::from_coords(mixed_axis);
  rec.holds("two_level.commuting_pair_rejected",
            !commuting.two_level() && throws_invalid([&] { outcome_probabilities(commuting, StateCoords{}); }));

  double heisenberg = 0;
  std::normal_distribution<double> gauss;
  for (int n = 0; n < 100; ++n) {
    CoordVector e;
    for (int k = 1; k <= kNumGenerators; ++k) e(k) = gauss(rng);
    const auto r = heisenberg_check(Observable::from_coords(e), Hamiltonian(random_hermitian(rng)), random_state(rng),
                                    gauss(rng));
    heisenberg = std::max(heisenberg, std::abs(r.schrodinger - r.heisenberg));
  }
  rec.upper("evolution.schrodinger_heisenberg", heisenberg, 1e-12);

  double drift = 0, excursion = 0;
  const auto times = uniform_grid(0.0, 10.0, 50);
  for (int n = 0; n < 20; ++n) {
    const Hamiltonian h(random_hermitian(rng));
    const StateCoords s0 = n % 2 == 0 ? random_state(rng) : coords_from_wavefunction(random_wavefunction(rng));
    for (double t : times) {
      const StateCoords st = apply_propagator(propagator_from_hamiltonian(h, t), s0);
      drift = std::max(drift, std::abs(st.purity() - s0.purity()));
      excursion = std::max(excursion, eigen_excursion(st));
    }
  }
  rec.upper("evolution.purity_drift", drift, 1e-12);
  rec.upper("evolution.eigenvalue_excursion", excursion, 1e-10);

  rec.data() = json{{"two_level_samples", 1000}, {"two_level_accepted", accepted}, {"heisenberg_instances", 100},
                    {"propagator_paths", 20}, {"times_per_path", times.size()}};
  return rec.finish();
}

ScenarioReport run_entanglement(const ScenarioConfig& cfg) {
  Recorder rec("entanglement", cfg);
  const Observable t1 = Observable::basis(1), t2 = Observable::basis(2), t3 = Observable::basis(3);
  const auto env = uniform_env(cfg.env_states);

  std::string csv = "state,k,rho_k,sigma_k,abs_diff\n";
  json states = json::object();
  const std::pair<const char*, WaveFunction> entangled[] = {{"psi_plus", triplet_state()}, {"psi_minus", singlet_state()}};
  for (const auto& [label, psi] : entangled) {
    const std::string p = label;
    const StateCoords s = coords_from_wavefunction(psi);
    const double e1 = expectation(t1, s), e2 = expectation(t2, s), e3 = expectation(t3, s);
    rec.upper(p + ".T1", std::abs(e1), 1e-12);
    rec.upper(p + ".T2", std::abs(e2), 1e-12);
    rec.upper(p + ".T3_plus_one", std::abs(e3 + 1), 1e-12);

    const OutcomeTable w = joint_outcomes(s);
    rec.upper(p + ".w_pp", std::abs(w.w_pp), 1e-12);
    rec.upper(p + ".w_mm", std::abs(w.w_mm), 1e-12);
    rec.upper(p + ".w_pm", std::abs(w.w_pm - 0.5), 1e-12);
    rec.upper(p + ".w_mp", std::abs(w.w_mp - 0.5), 1e-12);

    const ConditionalTable c = conditional_probabilities(s);
    rec.holds(p + ".conditionals_defined", c.p_1_given_1 && c.p_1_given_m1 && c.p_m1_given_1 && c.p_m1_given_m1);
    if (c.p_1_given_1 && c.p_1_given_m1 && c.p_m1_given_1 && c.p_m1_given_m1) {
      rec.upper(p + ".p_1_given_1", std::abs(*c.p_1_given_1), 1e-12);
      rec.upper(p + ".p_m1_given_m1", std::abs(*c.p_m1_given_m1), 1e-12);
      rec.upper(p + ".p_1_given_m1", std::abs(*c.p_1_given_m1 - 1), 1e-12);
      rec.upper(p + ".p_m1_given_1", std::abs(*c.p_m1_given_1 - 1), 1e-12);
    }

    const double corr = measurement_correlation(t2, t1, s);
    rec.upper(p + ".measurement_correlation_T2_T1", std::abs(corr + 1), 1e-12);
    rec.upper(p + ".measurement_correlation_equals_rho3", std::abs(corr - s(3)), 1e-12);

    const ClassicalEnsemble ens = build_subsystem_distribution(s, env);
    const CoordVector sigma = first_moments(ens);
    for (int k = 1; k <= kNumGenerators; ++k) {
      csv += p + "," + std::to_string(k) + "," + format_double(s(k)) + "," + format_double(sigma(k)) + "," +
             format_double(std::abs(sigma(k) - s(k))) + "\n";
    }
    rec.upper(p + ".ensemble_first_moments", sigma.max_abs_diff(s.rho()), 1e-12);
    const double classical12 = classical_correlation(ens, 1, 2);
    rec.upper(p + ".classical_sigma1_sigma2", std::abs(classical12), 1e-12);

    states[p] = json{{"rho", coords_json(s.rho())},
                     {"record", to_record(s)},
                     {"purity", s.purity()},
                     {"expectations", {{"T1", e1}, {"T2", e2}, {"T3", e3}}},
                     {"outcomes", outcome_json(w)},
                     {"conditionals", conditional_json(c)},
                     {"measurement_correlation_T2_T1", corr},
                     {"classical_sigma1_sigma2", classical12}};
  }

  // Smoke test on the maximally mixed state.
  const StateCoords mixed;
  const OutcomeTable wm = joint_outcomes(mixed);
  const ConditionalTable cm = conditional_probabilities(mixed);
  double smoke = std::max({std::abs(expectation(t1, mixed)), std::abs(expectation(t2, mixed)),
                           std::abs(expectation(t3, mixed)), std::abs(wm.w_pp - 0.25), std::abs(wm.w_pm - 0.25),
                           std::abs(wm.w_mp - 0.25), std::abs(wm.w_mm - 0.25)});
  for (const auto& x : {cm.p_1_given_1, cm.p_1_given_m1, cm.p_m1_given_1, cm.p_m1_given_m1}) {
    smoke = std::max(smoke, x ? std::abs(*x - 0.5) : 1.0);
  }
  rec.upper("maximally_mixed.smoke", smoke, 1e-12);
  states["maximally_mixed"] = json{{"rho", coords_json(mixed.rho())},
                                   {"outcomes", outcome_json(wm)},
                                   {"conditionals", conditional_json(cm)}};

  rec.data() = json{{"env_states", cfg.env_states}, {"states", states}};
  rec.artifact("entanglement_ensemble.csv", csv);
  return rec.finish();
}

ScenarioReport run_interference(const ScenarioConfig& cfg) {
  Recorder rec("interference", cfg);
  const double delta = cfg.delta;
  const double t_end = cfg.periods * 2 * pi / std::abs(delta);

  InterferenceConfig ic;
  ic.omega_a = delta;
  ic.omega_b = 0.0;
  ic.times = uniform_grid(0.0, t_end, cfg.grid);
  const InterferenceSeries series = interference_scenario(ic);
  rec.upper("max_dev_cos", series.max_dev_cos, 1e-9);
  rec.upper("max_dev_closed_form_coords", series.max_dev_coords, 1e-9);

  CoordVector start;
  start(1) = start(2) = start(3) = 1.0;
  rec.upper("t0_row", std::max(series.points.front().state.rho().max_abs_diff(start),
                               std::abs(series.points.front().expect_t2 - 1.0)),
            1e-12);

  InterferenceConfig half = ic;
  half.times = {pi / delta};
  const double t2_half = interference_scenario(half).points.front().expect_t2;
  rec.upper("half_period_T2_plus_one", std::abs(t2_half + 1.0), 1e-12);

  const FiniteDifferenceCheck fd = interference_finite_differences(series, delta);
  const double bound = std::pow(std::abs(delta), 3) * fd.step * fd.step / 6.0 + 1e-9;
  rec.upper("finite_difference_f2", fd.max_residual_f2, bound);
  rec.upper("finite_difference_f5", fd.max_residual_f5, bound);
  InterferenceConfig fine = ic;
  fine.times = uniform_grid(0.0, t_end, 2 * cfg.grid - 1);
  const FiniteDifferenceCheck fd_fine = interference_finite_differences(interference_scenario(fine), delta);
  const double order_ratio = fd.max_residual_f2 / fd_fine.max_residual_f2;
  rec.upper("finite_difference_second_order", std::abs(order_ratio - 4.0), 0.05);

  double drift = 0, excursion = 0;
  for (const auto& pt : series.points) {
    drift = std::max(drift, std::abs(pt.state.purity() - kMaxPurity));
    excursion = std::max(excursion, eigen_excursion(pt.state));
  }
  rec.upper("purity_drift", drift, 1e-12);
  rec.upper("eigenvalue_excursion", excursion, 1e-10);

  InterferenceConfig alt = ic;
  alt.complement = {2.0, Complex{0.3, -0.4}, Complex{0.3, 0.4}, -1.0};
  const InterferenceSeries alt_series = interference_scenario(alt);
  double completion = 0;
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    completion = std::max(completion, std::abs(series.points[i].expect_t2 - alt_series.points[i].expect_t2));
  }
  rec.upper("complement_independence", completion, 1e-12);

  std::string csv = coords_csv_header("t") + ",expect_T2\n";
  for (const auto& pt : series.points) {
    csv += format_double(pt.t) + coords_csv_row(pt.state.rho()) + "," + format_double(pt.expect_t2) + "\n";
  }
  rec.artifact("interference.csv", csv);

  rec.data() = json{{"delta", delta},
                    {"grid", cfg.grid},
                    {"t_end", t_end},
                    {"max_dev_cos", series.max_dev_cos},
                    {"max_dev_coords", series.max_dev_coords},
                    {"half_period_T2", t2_half},
                    {"finite_difference",
                     {{"step", fd.step},
                      {"max_residual_f2", fd.max_residual_f2},
                      {"max_residual_f5", fd.max_residual_f5},
                      {"half_step_residual_f2", fd_fine.max_residual_f2},
                      {"ratio", order_ratio}}}};
  return rec.finish();
}

ScenarioReport run_cnot(const ScenarioConfig& cfg) {
  Recorder rec("cnot", cfg);
  const Propagator cnot = cnot_gate();
  const int image[] = {1, 2, 4, 3};
  double table = 0;
  json truth = json::array();
  for (int m = 1; m <= 4; ++m) {
    const WaveFunction out = apply_propagator(cnot, WaveFunction::basis(m));
    int landed = 0;
    for (int i = 0; i < 4; ++i) {
      table = std::max(table, std::abs(out[static_cast<std::size_t>(i)] - Complex(i == image[m - 1] - 1 ? 1.0 : 0.0)));
      if (std::abs(out[static_cast<std::size_t>(i)]) > 0.5) landed = i + 1;
    }
    truth.push_back(json{{"in", m}, {"out", landed}});
  }
  rec.upper("truth_table", table, 0.0);
  rec.upper("self_inverse", ((cnot * cnot).matrix() - Matrix4::identity()).max_norm(), 0.0);
  rec.upper("unitarity", unitarity_defect(cnot.matrix()), 0.0);

  const double r = 1 / std::numbers::sqrt2;
  const StateCoords before = coords_from_wavefunction(WaveFunction({r, 0, r, 0}));
  const StateCoords after = apply_propagator(cnot, before);
  const StateCoords want = coords_from_wavefunction(apply_propagator(cnot, WaveFunction({r, 0, r, 0})));
  const StateCoords bell = coords_from_wavefunction(WaveFunction({r, 0, 0, r}));
  rec.upper("product_input_factorizes", std::abs(before(3) - before(1) * before(2)), 1e-12);
  rec.upper("coords_match_wavefunction", after.rho().max_abs_diff(want.rho()), 1e-12);
  rec.upper("coords_match_bell_state", after.rho().max_abs_diff(bell.rho()), 1e-12);
  rec.upper("output_rho3_minus_one", std::abs(after(3) - 1.0), 1e-12);
  rec.upper("output_correlation_gap", std::abs(after(3) - after(1) * after(2) - 1.0), 1e-12);
  rec.upper("purity_drift", std::abs(after.purity() - before.purity()), 1e-12);
  rec.upper("eigenvalue_excursion", eigen_excursion(after), 1e-10);

  std::string csv = coords_csv_header("state") + "\n";
  csv += "input" + coords_csv_row(before.rho()) + "\n";
  csv += "output" + coords_csv_row(after.rho()) + "\n";
  rec.artifact("cnot.csv", csv);

  rec.data() = json{{"truth_table", truth},
                    {"input", {{"rho", coords_json(before.rho())}, {"record", to_record(before)}}},
                    {"output", {{"rho", coords_json(after.rho())}, {"record", to_record(after)}}}};
  return rec.finish();
}

ScenarioReport run_chsh(const ScenarioConfig& cfg) {
  Recorder rec("chsh", cfg);
  const StateCoords plus = coords_from_wavefunction(triplet_state());

  const ChshResult opt = chsh_quantum(plus, kTripletOptimalSetting);
  rec.upper("optimal_setting_tsirelson", std::abs(opt.s - kTsirelsonBound), 1e-9);

  const ChshScan scan = chsh_grid_scan(plus, cfg.chsh_grid);
  rec.upper("grid_within_tsirelson", std::max(0.0, scan.best_s - kTsirelsonBound), 1e-9);
  const ChshScan refined = refine_chsh(plus, scan.best, cfg.chsh_grid);
  rec.upper("refined_within_tsirelson", std::max(0.0, refined.best_s - kTsirelsonBound), 1e-9);
  rec.lower("grid_violates_classical_bound", scan.best_s - kClassicalChshBound, 0.0);

  const StateCoords up = coords_from_wavefunction(WaveFunction::basis(1));
  const ChshScan product_scan = chsh_grid_scan(up, cfg.chsh_grid);
  rec.upper("product_state_within_classical", std::max(0.0, product_scan.best_s - kClassicalChshBound), 1e-9);

  // Classical side: product ensemble of the entangled state plus perturbed
  // ensembles built on random interior states.
  const auto env = uniform_env(cfg.env_states);
  const ClassicalEnsemble base = build_subsystem_distribution(plus, env);
  const ChshResult spins = chsh_classical(base, spin_assignments(1, 8, 2, 4));
  const ClassicalChshMax base_max = max_classical_chsh(base);
  double worst = std::max(spins.s, base_max.s);

  Rng rng = scenario_rng(cfg.seed, 5);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const ClassicalEnsemble ens = build_subsystem_distribution(random_state(rng), env);
    const EnvPerturbation d = sample_env_perturbation(ens, rng(), cfg.perturb);
    worst = std::max(worst, max_classical_chsh(apply_perturbation(ens, d)).s);
  }
  rec.upper("classical_within_bound", std::max(0.0, worst - kClassicalChshBound), 1e-12);

  const ChshSetting& best = refined.best;
  rec.data() = json{{"state", "psi_plus"},
                    {"optimal", chsh_json(kTripletOptimalSetting, opt)},
                    {"grid", {{"n", cfg.chsh_grid}, {"points", scan.points}, {"best_s", scan.best_s},
                              {"best_settings", setting_json(scan.best)}}},
                    {"refined", chsh_json(best, chsh_quantum(plus, best))},
                    {"product_state_grid_max", product_scan.best_s},
                    {"classical",
                     {{"env_states", cfg.env_states},
                      {"spin_assignment", {1, 8, 2, 4}},
                      {"spin_assignment_S", spins.s},
                      {"product_ensemble_max", base_max.s},
                      {"product_ensemble_max_spins", base_max.spins},
                      {"perturbed_samples", cfg.samples},
                      {"max_over_all", worst}}}};
  return rec.finish();
}

ScenarioReport run_exchange(const ScenarioConfig& cfg) {
  Recorder rec("exchange", cfg);
  const StateCoords plus = coords_from_wavefunction(triplet_state());
  const StateCoords minus = coords_from_wavefunction(singlet_state());
  const SymmetryResult sp = is_exchange_symmetric(plus), sm = is_exchange_symmetric(minus);
  rec.upper("psi_plus_symmetric", sp.defect, kExchangeSymmetryTol);
  rec.upper("psi_minus_symmetric", sm.defect, kExchangeSymmetryTol);
  const SymmetryResult s2 = is_exchange_symmetric(coords_from_wavefunction(WaveFunction::basis(2)));
  rec.holds("psi_2_not_symmetric", !s2.symmetric);

  json classes = json::array();
  auto classify = [&](const std::string& label, const WaveFunction& psi, ExchangeClass want) {
    const ExchangeDecomposition d = superselection_check(psi);
    rec.holds("classify." + label, d.classification == want);
    classes.push_back(json{{"state", label},
                           {"classification", std::string(to_string(d.classification))},
                           {"defect", d.defect},
                           {"a", complex_json(d.a)},
                           {"b", complex_json(d.b)},
                           {"c", complex_json(d.c)},
                           {"d", complex_json(d.d)}});
  };
  classify("psi_minus", singlet_state(), ExchangeClass::kAntisymmetricFermion);
  classify("psi_plus", triplet_state(), ExchangeClass::kSymmetricBoson);
  classify("psi_1", WaveFunction::basis(1), ExchangeClass::kSymmetricBoson);
  classify("psi_2", WaveFunction::basis(2), ExchangeClass::kNotExchangeEligible);
  const Vector4 m = singlet_state().amplitudes(), p = triplet_state().amplitudes();
  for (const auto& [a, b] : {std::pair{0.6, 0.8}, std::pair{0.8, 0.6}, std::pair{1e-3, 1.0}}) {
    Vector4 v;
    for (std::size_t i = 0; i < 4; ++i) v[i] = a * m[i] + b * p[i];
    char label[64];
    std::snprintf(label, sizeof label, "superposition_%g_%g", a, b);
    classify(label, WaveFunction::normalized(v), ExchangeClass::kNotExchangeEligible);
  }

  Rng rng = scenario_rng(cfg.seed, 6);
  const auto times = uniform_grid(0.0, 10.0, 50);
  double drift = 0, cross = 0, h_defect = 0;
  for (std::size_t i = 0; i < cfg.hamiltonians; ++i) {
    const Hamiltonian h = random_exchange_symmetric_hamiltonian(rng);
    h_defect = std::max(h_defect, hamiltonian_exchange_defect(h));
    const FermionInvarianceReport r = fermion_invariance_check(h, times);
    drift = std::max(drift, r.max_drift);
    cross = std::max(cross, r.max_cross_element);
  }
  rec.upper("hamiltonian_symmetry_defect", h_defect, kHamiltonianSymmetryTol);
  rec.upper("fermion_drift", drift, 1e-10);
  rec.upper("boson_cross_elements", cross, 1e-12);

  Matrix4 asym;
  asym(1, 1) = 1.0;
  rec.holds("asymmetric_hamiltonian_rejected",
            throws_invalid([&] { fermion_invariance_check(Hamiltonian(asym), times); }));

  rec.data() = json{{"psi_plus_defect", sp.defect},
                    {"psi_minus_defect", sm.defect},
                    {"psi_2_defect", s2.defect},
                    {"classifications", classes},
                    {"hamiltonians", cfg.hamiltonians},
                    {"fermion_max_drift", drift},
                    {"boson_max_cross_element", cross}};
  return rec.finish();
}

ScenarioReport run_environment(const ScenarioConfig& cfg) {
  Recorder rec("environment", cfg);
  const auto env = uniform_env(cfg.env_states);
  Rng rng = scenario_rng(cfg.seed, 7);

  std::vector<StateCoords> states;
  std::vector<ClassicalEnsemble> ensembles;
  double first = 0, total = 0;
  std::string records;
  for (std::size_t i = 0; i < cfg.states; ++i) {
    states.push_back(random_state(rng));
    ensembles.push_back(build_subsystem_distribution(states.back(), env));
    first = std::max(first, first_moments(ensembles.back()).max_abs_diff(states.back().rho()));
    total = std::max(total, std::abs(ensembles.back().total() - 1.0));
    records += to_record(states.back()) + "\n";
  }
  rec.upper("oracle_first_moments", first, 1e-12);
  rec.upper("oracle_total_probability", total, 1e-12);

  std::string csv = "sample,state,first_moment_shift,max_second_moment_shift,k,l\n";
  double first_shift = 0, min_second = std::numeric_limits<double>::infinity(), residual = 0;
  bool admissible = true;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t si = i % states.size();
    const ClassicalEnsemble& base = ensembles[si];
    const EnvPerturbation d = sample_env_perturbation(base, rng(), cfg.perturb);
    admissible = admissible && d.is_admissible_for(base);
    residual = std::max(residual, d.residuals().max_abs());
    const ClassicalEnsemble pert = apply_perturbation(base, d);
    const double shift1 = first_moments(pert).max_abs_diff(states[si].rho());
    first_shift = std::max(first_shift, shift1);

    // Walsh-Hadamard transform of the zeta marginal: entry m holds
    // sum delta * prod_{k in m} sigma_k, so pair masks give the shifts.
    std::vector<double> h(kNumSpinConfigs, 0.0);
    const auto delta = d.delta();
    for (std::size_t j = 0; j < delta.size(); ++j) h[j % kNumSpinConfigs] += delta[j];
    for (std::size_t len = 1; len < kNumSpinConfigs; len <<= 1) {
      for (std::size_t i = 0; i < kNumSpinConfigs; i += len << 1) {
        for (std::size_t j = i; j < i + len; ++j) {
          const double x = h[j], y = h[j + len];
          h[j] = x + y;
          h[j + len] = x - y;
        }
      }
    }
    double best = 0;
    int bk = 0, bl = 0;
    for (int k = 1; k <= kNumSpins; ++k) {
      for (int l = k + 1; l <= kNumSpins; ++l) {
        const double shift = std::abs(h[(std::size_t{1} << (k - 1)) | (std::size_t{1} << (l - 1))]);
        if (shift > best) {
          best = shift;
          bk = k;
          bl = l;
        }
      }
    }
    min_second = std::min(min_second, best);
    csv += std::to_string(i) + "," + std::to_string(si) + "," + format_double(shift1) + "," + format_double(best) +
           "," + std::to_string(bk) + "," + std::to_string(bl) + "\n";
  }
  if (cfg.samples > 0) {
    rec.holds("perturbations_admissible", admissible);
    rec.upper("perturbation_constraint_residual", residual, 1e-12);
    rec.upper("perturbed_first_moments", first_shift, 1e-12);
    rec.lower("min_second_moment_shift", min_second, 1e-6);
  }

  std::ostringstream dump;
  write_ensemble(dump, ensembles.front());
  rec.artifact("environment_ensemble.qce", dump.str());
  rec.artifact("environment_states.txt", records);
  rec.artifact("environment.csv", csv);

  rec.data() = json{{"env_states", cfg.env_states},
                    {"states", cfg.states},
                    {"samples", cfg.samples},
                    {"perturb", cfg.perturb},
                    {"max_first_moment_error", first},
                    {"max_perturbed_first_moment_shift", first_shift},
                    {"min_second_moment_shift", cfg.samples > 0 ? json(min_second) : json(nullptr)}};
  return rec.finish();
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"algebra", "entanglement", "interference", "cnot",
                                                 "chsh",    "exchange",     "environment"};
  return names;
}

ScenarioReport run_scenario(std::string_view name, const ScenarioConfig& cfg) {
  validate(cfg);
  if (name == "algebra") return run_algebra(cfg);
  if (name == "entanglement") return run_entanglement(cfg);
  if (name == "interference") return run_interference(cfg);
  if (name == "cnot") return run_cnot(cfg);
  if (name == "chsh") return run_chsh(cfg);
  if (name == "exchange") return run_exchange(cfg);
  if (name == "environment") return run_environment(cfg);
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

Summary run_all(const ScenarioConfig& cfg, bool parallel) {
  validate(cfg);
  Summary out;
  if (parallel) {
    std::vector<std::future<ScenarioReport>> jobs;
    for (const auto& name : scenario_names()) {
      jobs.push_back(std::async(std::launch::async, [&cfg, name] { return run_scenario(name, cfg); }));
    }
    for (auto& j : jobs) out.reports.push_back(j.get());
  } else {
    for (const auto& name : scenario_names()) out.reports.push_back(run_scenario(name, cfg));
  }

  json doc{{"seed", cfg.seed}, {"passed", out.failures() == 0}, {"failures", out.failures()}, {"scenarios", json::array()}};
  std::string text = "seed " + std::to_string(cfg.seed) + "\n";
  std::size_t total = 0;
  for (const auto& r : out.reports) {
    json s{{"name", r.name}, {"passed", r.passed()}, {"failures", r.failures()}, {"checks", json::array()}};
    text += "[" + r.name + "]\n";
    for (const auto& c : r.checks) {
      s["checks"].push_back(check_json(c));
      text += check_line(c);
    }
    total += r.checks.size();
    doc["scenarios"].push_back(std::move(s));
  }
  doc["total_checks"] = total;
  text += "total: " + std::to_string(total - out.failures()) + "/" + std::to_string(total) + " checks passed\n";
  out.artifacts = {{"summary.json", doc.dump(2) + "\n"}, {"summary.txt", text}};
  return out;
}

void write_artifacts(const std::string& dir, const std::vector<Artifact>& artifacts) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir + ": " + ec.message());
  for (const auto& a : artifacts) {
    const fs::path path = fs::path(dir) / a.filename;
    std::ofstream f(path, std::ios::binary);
    f.write(a.content.data(), static_cast<std::streamsize>(a.content.size()));
    if (!f) throw std::runtime_error("cannot write " + path.string());
  }
}

}  // namespace qcs::tools
