#pragma once

// Hard invariants behind `qqesd verify`. Each check reports pass/fail with
// the worst observed value; the discrepancy report rides along unjudged
// except for its zero-noise column.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qqesd/analysis.hpp"
#include "qqesd/channels.hpp"
#include "qqesd/closed_form.hpp"
#include "qqesd/discrepancy.hpp"
#include "qqesd/entanglement.hpp"
#include "qqesd/states.hpp"

namespace qqesd {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double limit = 0.0;
};

struct VerificationOutcome {
  std::vector<CheckResult> checks;
  DiscrepancyReport report;
  std::vector<double> collective_critical_points;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

// Ginibre-style random density matrix G G^dagger / tr(G G^dagger).
inline Matrix random_density(std::mt19937_64& rng, std::size_t dim = kCompositeDim) {
  std::normal_distribution<double> normal;
  Matrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex{normal(rng), normal(rng)};
  Matrix rho = matmul(g, adjoint(g));
  const double tr = trace(rho).real();
  rho = scale(1.0 / tr, rho);
  return scale(0.5, add(rho, adjoint(rho)));
}

inline std::vector<NoiseScenario> scenario_grid(double step = 0.1) {
  const std::vector<double> g = param_grid(step);
  std::vector<NoiseScenario> out;
  for (double a : g) {
    out.push_back(NoiseScenario::qubit_local(a));
    out.push_back(NoiseScenario::qutrit_local(a));
    out.push_back(NoiseScenario::collective(a));
    for (double b : g) {
      out.push_back(NoiseScenario::multilocal(a, b));
      for (double c : g) out.push_back(NoiseScenario::global(a, b, c));
    }
  }
  return out;
}

namespace detail {

inline CheckResult make_check(std::string name, double worst, double limit) {
  return {std::move(name), worst <= limit, worst, limit};
}

}  // namespace detail

inline CheckResult check_kraus_completeness() {
  double worst = 0.0;
  for (double p : param_grid(0.1)) {
    worst = std::max(worst, completeness_error(qubit_depolarizing_kraus(p)));
    worst = std::max(worst, completeness_error(qutrit_depolarizing_kraus(p)));
    worst = std::max(worst, completeness_error(lift_to_composite(qubit_depolarizing_kraus(p), Subsystem::Qubit)));
    worst = std::max(worst, completeness_error(lift_to_composite(qutrit_depolarizing_kraus(p), Subsystem::Qutrit)));
    worst = std::max(worst, completeness_error(collective_kraus(p)));
  }
  return detail::make_check("kraus-completeness", worst, 1e-12);
}

// Trace, Hermiticity and positivity of evolved states over the scenario grid.
inline std::array<CheckResult, 3> check_evolution_soundness(std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::vector<Matrix> states{rho_x(FamilyParam(0.0)), rho_x(FamilyParam(0.125)), rho_x(FamilyParam(0.25))};
  for (int i = 0; i < 2; ++i) states.push_back(random_density(rng));

  double trace_err = 0.0, herm_err = 0.0, min_eig = 1.0;
  for (const NoiseScenario& s : scenario_grid(0.1)) {
    for (const Matrix& rho : states) {
      const Matrix out = evolve(s, rho);
      trace_err = std::max(trace_err, std::abs(trace(out) - 1.0));
      herm_err = std::max(herm_err, max_abs_diff(out, adjoint(out)));
      min_eig = std::min(min_eig, hermitian_spectrum(out).min());
    }
  }
  return {detail::make_check("trace-preservation", trace_err, 1e-12),
          detail::make_check("hermiticity-preservation", herm_err, 1e-12),
          detail::make_check("positivity", -min_eig, 1e-10)};
}

inline CheckResult check_channel_identities(std::uint64_t seed = 11, int samples = 100) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Matrix rho = random_density(rng);
    const double p = unit(rng);
    const Matrix q = apply_channel(rho, lift_to_composite(qubit_depolarizing_kraus(p), Subsystem::Qubit));
    const Matrix t = apply_channel(rho, lift_to_composite(qutrit_depolarizing_kraus(p), Subsystem::Qutrit));
    worst = std::max(worst, max_abs_diff(q, detail::qubit_channel_identity(rho, p)));
    worst = std::max(worst, max_abs_diff(t, detail::qutrit_channel_identity(rho, p)));
  }
  return detail::make_check("channel-oracle-identities", worst, 1e-12);
}

inline CheckResult check_partial_transpose(std::uint64_t seed = 13, int samples = 50) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Matrix rho = random_density(rng);
    const Matrix pt = partial_transpose_qubit(rho);
    worst = std::max(worst, max_abs_diff(partial_transpose_qubit(pt), rho));
    worst = std::max(worst, std::abs(trace(pt) - trace(rho)));
    worst = std::max(worst, max_abs_diff(pt, adjoint(pt)));
  }
  return detail::make_check("partial-transpose-involution", worst, 1e-13);
}

inline CheckResult check_zero_noise_negativity() {
  double worst = 0.0;
  for (int i = 0; i <= 25; ++i) {
    const double x = i / 100.0;
    const double n = negativity_standard(rho_x(FamilyParam(x))).negativity;
    worst = std::max(worst, std::abs(n - std::max(0.0, x - 0.125)));
  }
  return detail::make_check("zero-noise-negativity", worst, 1e-12);
}

// multilocal(p1, 0) vs qubit-only, multilocal(0, p2) vs qutrit-only on
// (lambda_5, lambda_6), and reconstructed collective vs multilocal(p, p).
inline CheckResult check_reduction_lattice(int density = 20) {
  double worst = 0.0;
  for (int i = 0; i < density; ++i) {
    const double a = static_cast<double>(i) / (density - 1);
    for (int j = 0; j < density; ++j) {
      const FamilyParam x(FamilyParam::kMax * j / (density - 1));
      const auto m_a0 = eigenvalues_multilocal(a, 0.0, x);
      const auto q = eigenvalues_qubit_only(a, x);
      const auto m_0a = eigenvalues_multilocal(0.0, a, x);
      const auto t = eigenvalues_qutrit_only(0.0, a, x);
      const auto m_aa = eigenvalues_multilocal(a, a, x);
      worst = std::max({worst, std::abs(m_a0.lambda5() - q.lambda5()), std::abs(m_a0.lambda6() - q.lambda6()),
                        std::abs(m_0a.lambda5() - t.lambda5()), std::abs(m_0a.lambda6() - t.lambda6()),
                        std::abs(negativity_paper_collective(a, x).inner - m_aa.lambda6())});
    }
  }
  return detail::make_check("closed-form-reduction-lattice", worst, 1e-14);
}

inline CheckResult check_global_half_consistency() {
  double worst = 0.0;
  for (int j = 0; j <= 100; ++j) {
    const FamilyParam x(FamilyParam::kMax * j / 100.0);
    worst = std::max(worst, std::abs(lambda6_global_half(0.0, x) - eigenvalues_multilocal(0.5, 0.5, x).lambda6()));
  }
  return detail::make_check("global-half-vs-multilocal", worst, 1e-14);
}

inline CheckResult check_collective_critical_points(std::vector<double>& found) {
  const auto exact = collective_critical_roots();
  found = critical_point(ScenarioTemplate::of(ScenarioKind::Collective), Mode::Paper, FamilyParam(0.1),
                         FamilyParam(0.25));
  double worst = std::max(std::abs(exact[0] - 0.75), std::abs(exact[1] - 8.0 / 9.0));
  if (found.size() != 2) {
    worst = 1.0;
  } else {
    worst = std::max({worst, std::abs(found[0] - 0.75), std::abs(found[1] - 8.0 / 9.0)});
  }
  return detail::make_check("collective-critical-points", worst, 1e-9);
}

inline CheckResult check_discrepancy_zero_noise(const DiscrepancyReport& report) {
  double worst = 0.0;
  for (const DiscrepancyEntry& e : report.entries) {
    if (e.zero_noise_deviation) worst = std::max(worst, *e.zero_noise_deviation);
  }
  return detail::make_check("discrepancy-zero-noise", worst, kZeroNoiseAgreement);
}

inline VerificationOutcome run_verification(int report_density = 21) {
  VerificationOutcome out;
  out.checks.push_back(check_kraus_completeness());
  for (CheckResult& c : check_evolution_soundness()) out.checks.push_back(std::move(c));
  out.checks.push_back(check_channel_identities());
  out.checks.push_back(check_partial_transpose());
  out.checks.push_back(check_zero_noise_negativity());
  out.checks.push_back(check_reduction_lattice());
  out.checks.push_back(check_global_half_consistency());
  out.checks.push_back(check_collective_critical_points(out.collective_critical_points));
  out.report = discrepancy_report(report_density);
  out.checks.push_back(check_discrepancy_zero_noise(out.report));
  return out;
}

}  // namespace qqesd
