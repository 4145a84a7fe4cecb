#pragma once

// Cross-validation of the closed-form expressions against direct Kraus
// evolution, plus internal consistency checks between the closed forms.
// Deviations are measurements; nothing here fails on their size.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "qqesd/analysis.hpp"
#include "qqesd/channels.hpp"
#include "qqesd/closed_form.hpp"
#include "qqesd/entanglement.hpp"
#include "qqesd/states.hpp"

namespace qqesd {

inline constexpr double kZeroNoiseAgreement = 1e-12;

struct Deviation {
  double max_abs = 0.0;
  // Location of the maximum.
  double p1 = 0.0;
  double p2 = 0.0;
  double p = 0.0;
  double x = 0.0;

  void record(double deviation, double at_p1, double at_p2, double at_p, double at_x) {
    if (deviation > max_abs) *this = {deviation, at_p1, at_p2, at_p, at_x};
  }
};

struct DiscrepancyEntry {
  std::string scenario;
  std::string quantity;   // closed-form quantity under test
  std::string reference;  // what it is compared against
  Deviation deviation;
  // Negativity entries only: deviation from the numeric standard negativity.
  std::optional<Deviation> vs_standard_negativity;
  // Maximum deviation over x at zero noise; absent when the scenario has no
  // noiseless member (the global closed forms fix p1 = p2 = 1/2).
  std::optional<double> zero_noise_deviation;

  bool agrees_at_zero_noise() const { return !zero_noise_deviation || *zero_noise_deviation <= kZeroNoiseAgreement; }
};

struct SpotCheck {
  std::string label;
  double value = 0.0;
};

struct EsdSummary {
  std::string scenario;
  Mode mode = Mode::Standard;
  double x = 0.0;
  std::optional<EsdOnset> onset;
  bool revives = false;
};

struct DiscrepancyReport {
  int density = 0;
  std::vector<DiscrepancyEntry> entries;
  std::vector<SpotCheck> spot_checks;
  std::vector<EsdSummary> esd_summary;
  std::vector<std::string> notes;
};

namespace detail {

inline std::vector<double> unit_grid(int density) {
  std::vector<double> g(static_cast<std::size_t>(density));
  for (int i = 0; i < density; ++i) g[static_cast<std::size_t>(i)] = static_cast<double>(i) / (density - 1);
  return g;
}

inline std::vector<double> family_grid(int density) {
  std::vector<double> g = unit_grid(density);
  for (double& x : g) x *= FamilyParam::kMax;
  return g;
}

inline double sorted_max_deviation(std::array<double, 6> closed, const std::vector<double>& numeric) {
  std::sort(closed.begin(), closed.end());
  double d = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) d = std::max(d, std::abs(closed[i] - numeric[i]));
  return d;
}

inline NegativityResult numeric_pt(const NoiseScenario& s, double x) {
  return negativity_standard(evolve(s, rho_x(FamilyParam(x))));
}

struct NegativityComparison {
  Deviation vs_min_eigenvalue;
  Deviation vs_standard;
  double zero_noise = 0.0;
};

// Compares a closed-form negativity against |min PT eigenvalue| and against the
// standard negativity over a grid of scenarios.
template <class Closed>
void compare_negativity(NegativityComparison& out, const NoiseScenario& s, double x, Closed&& closed, bool noiseless) {
  const NegativityResult numeric = numeric_pt(s, x);
  const double value = closed(s, FamilyParam(x)).value;
  const double dev_min = std::abs(value - std::abs(numeric.min_eigenvalue));
  out.vs_min_eigenvalue.record(dev_min, s.p1(), s.p2(), s.p(), x);
  out.vs_standard.record(std::abs(value - numeric.negativity), s.p1(), s.p2(), s.p(), x);
  if (noiseless) out.zero_noise = std::max(out.zero_noise, dev_min);
}

inline DiscrepancyEntry negativity_entry(std::string scenario, std::string quantity, const NegativityComparison& c,
                                         bool has_zero_noise) {
  DiscrepancyEntry e{std::move(scenario), std::move(quantity), "|min numeric PT eigenvalue|", c.vs_min_eigenvalue,
                     c.vs_standard, std::nullopt};
  if (has_zero_noise) e.zero_noise_deviation = c.zero_noise;
  return e;
}

// Monotonic growth of the closed-form multilocal negativity in p1 over all of
// [0, 1], as a function of the fixed p2. Returns the [lo, hi] range of p2 grid
// values where growth holds, or nullopt when it never does.
inline std::optional<std::array<double, 2>> multilocal_growth_window(double x, const std::vector<double>& p2_grid,
                                                                     const std::vector<double>& p1_grid) {
  std::optional<std::array<double, 2>> window;
  for (double p2 : p2_grid) {
    bool increasing = true;
    double prev = negativity_paper_multilocal(p1_grid.front(), p2, FamilyParam(x)).value;
    for (std::size_t i = 1; i < p1_grid.size() && increasing; ++i) {
      const double cur = negativity_paper_multilocal(p1_grid[i], p2, FamilyParam(x)).value;
      increasing = cur > prev;
      prev = cur;
    }
    if (!increasing) continue;
    if (!window) window = std::array<double, 2>{p2, p2};
    (*window)[1] = p2;
  }
  return window;
}

}  // namespace detail

inline DiscrepancyReport discrepancy_report(int density = 21) {
  if (density < 2) throw DomainError("discrepancy_report: grid density must be at least 2");
  const std::vector<double> ps = detail::unit_grid(density);
  const std::vector<double> xs = detail::family_grid(density);

  DiscrepancyReport report;
  report.density = density;

  // Closed-form spectra against the sorted numeric partial-transpose spectrum.
  {
    Deviation qubit, qutrit, multi, qubit_swapped, qutrit_swapped;
    double qubit0 = 0.0, qutrit0 = 0.0, multi0 = 0.0, qubit_swapped0 = 0.0, qutrit_swapped0 = 0.0;
    for (double x : xs) {
      for (double a : ps) {
        const auto nq = detail::numeric_pt(NoiseScenario::qubit_local(a), x);
        const auto nt = detail::numeric_pt(NoiseScenario::qutrit_local(a), x);
        const auto cq = eigenvalues_qubit_only(a, FamilyParam(x)).lambda;
        const auto ct = eigenvalues_qutrit_only(0.0, a, FamilyParam(x)).lambda;

        const double dq = detail::sorted_max_deviation(cq, nq.spectrum.eigenvalues);
        qubit.record(dq, a, 0, 0, x);
        if (a == 0.0) qubit0 = std::max(qubit0, dq);
        const double dt = detail::sorted_max_deviation(ct, nt.spectrum.eigenvalues);
        qutrit.record(dt, 0, a, 0, x);
        if (a == 0.0) qutrit0 = std::max(qutrit0, dt);

        // Each single-subsystem form evaluated against the other subsystem's channel.
        const double sq = detail::sorted_max_deviation(cq, nt.spectrum.eigenvalues);
        qubit_swapped.record(sq, 0, a, 0, x);
        if (a == 0.0) qubit_swapped0 = std::max(qubit_swapped0, sq);
        const double st = detail::sorted_max_deviation(ct, nq.spectrum.eigenvalues);
        qutrit_swapped.record(st, a, 0, 0, x);
        if (a == 0.0) qutrit_swapped0 = std::max(qutrit_swapped0, st);

        for (double b : ps) {
          const auto nm = detail::numeric_pt(NoiseScenario::multilocal(a, b), x);
          const double dm = detail::sorted_max_deviation(eigenvalues_multilocal(a, b, FamilyParam(x)).lambda,
                                                         nm.spectrum.eigenvalues);
          multi.record(dm, a, b, 0, x);
          if (a == 0.0 && b == 0.0) multi0 = std::max(multi0, dm);
        }
      }
    }
    const std::string ref = "sorted numeric PT spectrum";
    report.entries.push_back({"qubit", "pt-spectrum", ref, qubit, std::nullopt, qubit0});
    report.entries.push_back({"qutrit", "pt-spectrum", ref, qutrit, std::nullopt, qutrit0});
    report.entries.push_back({"multilocal", "pt-spectrum", ref, multi, std::nullopt, multi0});
    report.entries.push_back({"qubit", "pt-spectrum (qubit-only form, parameter as p2)",
                              "sorted numeric PT spectrum under qutrit-local noise", qubit_swapped, std::nullopt,
                              qubit_swapped0});
    report.entries.push_back({"qutrit", "pt-spectrum (qutrit-only form, parameter as p1)",
                              "sorted numeric PT spectrum under qubit-local noise", qutrit_swapped, std::nullopt,
                              qutrit_swapped0});
  }

  // Closed-form spectra are expected to sum to one (unit trace).
  {
    Deviation qutrit_sum, multi_sum;
    for (double x : xs)
      for (double a : ps)
        for (double b : ps) {
          qutrit_sum.record(std::abs(eigenvalues_qutrit_only(a, b, FamilyParam(x)).sum() - 1.0), a, b, 0, x);
          multi_sum.record(std::abs(eigenvalues_multilocal(a, b, FamilyParam(x)).sum() - 1.0), a, b, 0, x);
        }
    report.entries.push_back({"qutrit", "eigenvalue-sum (p1 as formula argument)", "1", qutrit_sum, std::nullopt, 0.0});
    report.entries.push_back({"multilocal", "eigenvalue-sum", "1", multi_sum, std::nullopt, 0.0});
  }

  // Closed-form negativities.
  {
    detail::NegativityComparison qubit, qutrit, multi, printed, reconstructed, global;
    for (double x : xs) {
      for (double a : ps) {
        const bool noiseless = a == 0.0;
        detail::compare_negativity(qubit, NoiseScenario::qubit_local(a), x,
                                   [](const NoiseScenario& s, FamilyParam fx) { return negativity_paper_qubit(s.p1(), fx); },
                                   noiseless);
        detail::compare_negativity(qutrit, NoiseScenario::qutrit_local(a), x,
                                   [](const NoiseScenario& s, FamilyParam fx) { return negativity_paper_qutrit(s.p2(), fx); },
                                   noiseless);
        detail::compare_negativity(printed, NoiseScenario::collective(a), x,
                                   [](const NoiseScenario& s, FamilyParam fx) {
                                     return negativity_paper_collective(s.p(), fx, CollectiveVariant::Printed);
                                   },
                                   noiseless);
        detail::compare_negativity(reconstructed, NoiseScenario::collective(a), x,
                                   [](const NoiseScenario& s, FamilyParam fx) {
                                     return negativity_paper_collective(s.p(), fx, CollectiveVariant::Reconstructed);
                                   },
                                   noiseless);
        detail::compare_negativity(global, NoiseScenario::global(0.5, 0.5, a), x,
                                   [](const NoiseScenario& s, FamilyParam fx) { return negativity_paper_global_half(s.p(), fx); },
                                   false);
        for (double b : ps) {
          detail::compare_negativity(multi, NoiseScenario::multilocal(a, b), x,
                                     [](const NoiseScenario& s, FamilyParam fx) {
                                       return negativity_paper_multilocal(s.p1(), s.p2(), fx);
                                     },
                                     a == 0.0 && b == 0.0);
        }
      }
    }
    report.entries.push_back(detail::negativity_entry("qubit", "negativity", qubit, true));
    report.entries.push_back(detail::negativity_entry("qutrit", "negativity", qutrit, true));
    report.entries.push_back(detail::negativity_entry("multilocal", "negativity", multi, true));
    report.entries.push_back(detail::negativity_entry("collective", "negativity (printed)", printed, true));
    report.entries.push_back(detail::negativity_entry("collective", "negativity (reconstructed)", reconstructed, true));
    report.entries.push_back(detail::negativity_entry("global p1=p2=1/2", "negativity", global, false));
  }

  // Global lambda_6 closed form: against numerics and against the other closed forms.
  {
    Deviation vs_numeric, vs_multilocal, negativity_vs_lambda;
    for (double x : xs) {
      const FamilyParam fx(x);
      vs_multilocal.record(std::abs(lambda6_global_half(0.0, fx) - eigenvalues_multilocal(0.5, 0.5, fx).lambda6()),
                           0.5, 0.5, 0.0, x);
      for (double a : ps) {
        const auto n = detail::numeric_pt(NoiseScenario::global(0.5, 0.5, a), x);
        vs_numeric.record(std::abs(lambda6_global_half(a, fx) - n.min_eigenvalue), 0.5, 0.5, a, x);
        negativity_vs_lambda.record(
            std::abs(negativity_paper_global_half(a, fx).value - std::abs(lambda6_global_half(a, fx))), 0.5, 0.5, a, x);
      }
    }
    report.entries.push_back({"global p1=p2=1/2", "lambda6", "numeric min PT eigenvalue", vs_numeric, std::nullopt,
                              std::nullopt});
    report.entries.push_back({"global p1=p2=1/2", "lambda6 at p=0", "multilocal lambda6 at p1=p2=1/2", vs_multilocal,
                              std::nullopt, std::nullopt});
    report.entries.push_back({"global p1=p2=1/2", "negativity", "|closed-form lambda6|", negativity_vs_lambda,
                              std::nullopt, std::nullopt});
  }

  // Spot values.
  {
    const FamilyParam zero(0.0), eighth(0.125), quarter(0.25);
    report.spot_checks.push_back(
        {"global p1=p2=1/2, p=0, x=0: negativity minus |lambda6|",
         negativity_paper_global_half(0.0, zero).value - std::abs(lambda6_global_half(0.0, zero))});
    report.spot_checks.push_back({"collective p=1/2, x=1/8: printed minus reconstructed negativity",
                                  negativity_paper_collective(0.5, eighth, CollectiveVariant::Printed).value -
                                      negativity_paper_collective(0.5, eighth, CollectiveVariant::Reconstructed).value});
    report.spot_checks.push_back(
        {"qubit p1=1, x=1/4: max sorted PT spectrum deviation",
         detail::sorted_max_deviation(eigenvalues_qubit_only(1.0, quarter).lambda,
                                      detail::numeric_pt(NoiseScenario::qubit_local(1.0), 0.25).spectrum.eigenvalues)});

    const auto roots = collective_critical_roots();
    report.spot_checks.push_back({"collective (reconstructed) critical point 1", roots[0]});
    report.spot_checks.push_back({"collective (reconstructed) critical point 2", roots[1]});

    // Largest x at which the noiseless state is still PPT.
    auto min_pt = [](double x) { return negativity_standard(rho_x(FamilyParam(x))).min_eigenvalue; };
    report.spot_checks.push_back({"noiseless PPT boundary in x", bisect(min_pt, 0.0, 0.25, 1e-12).root});

    // Spread of standard negativity across x at p1 = p2 = 3/4 (global, all p).
    double spread = 0.0;
    for (double a : ps) {
      double lo = 1.0, hi = 0.0;
      for (double x : xs) {
        const double n = detail::numeric_pt(NoiseScenario::global(0.75, 0.75, a), x).negativity;
        lo = std::min(lo, n);
        hi = std::max(hi, n);
      }
      spread = std::max(spread, hi - lo);
    }
    report.spot_checks.push_back({"global p1=p2=3/4: max over p of standard negativity spread across x", spread});

    const auto window = detail::multilocal_growth_window(0.25, param_grid(0.001), param_grid(0.01));
    if (window) {
      report.spot_checks.push_back({"multilocal x=1/4: lowest p2 with closed-form negativity growing in p1", (*window)[0]});
      report.spot_checks.push_back({"multilocal x=1/4: highest p2 with closed-form negativity growing in p1", (*window)[1]});
    }
  }

  // ESD onsets and revivals in both modes.
  {
    struct Case {
      std::string label;
      ScenarioTemplate t;
      bool paper;
    };
    ScenarioTemplate multi = ScenarioTemplate::of(ScenarioKind::Multilocal);
    multi.p2 = 0.1;
    ScenarioTemplate global_half = ScenarioTemplate::of(ScenarioKind::Global);
    global_half.p1 = global_half.p2 = 0.5;
    ScenarioTemplate global_tenth = ScenarioTemplate::of(ScenarioKind::Global);
    global_tenth.p1 = global_tenth.p2 = 0.1;
    const std::vector<Case> cases{
        {"qubit", ScenarioTemplate::of(ScenarioKind::QubitLocal), true},
        {"qutrit", ScenarioTemplate::of(ScenarioKind::QutritLocal), true},
        {"multilocal p2=0.1", multi, true},
        {"collective", ScenarioTemplate::of(ScenarioKind::Collective), true},
        {"global p1=p2=1/2", global_half, true},
        {"global p1=p2=1/10", global_tenth, false},
    };
    const std::vector<double> revival_grid = param_grid(0.01);
    for (const Case& c : cases) {
      for (Mode mode : {Mode::Standard, Mode::Paper}) {
        if (mode == Mode::Paper && !c.paper) continue;
        for (double x : {0.15, 0.20, 0.25}) {
          EsdSummary row{c.label, mode, x, esd_onset(c.t, mode, FamilyParam(x)), false};
          if (row.onset) row.revives = entanglement_revives(c.t, mode, FamilyParam(x), row.onset->value, revival_grid);
          report.esd_summary.push_back(row);
        }
      }
    }
  }

  report.notes.push_back(
      "rho(x) is PPT at zero noise for x <= 1/8 (minimum PT eigenvalue 1/8 - x); only x in (1/8, 1/4] is entangled.");
  report.notes.push_back(
      "Closed-form negativities use max{0, |inner|}, which is nonzero wherever inner != 0, including separable states.");
  report.notes.push_back(
      "The qubit-only closed-form spectrum reproduces qutrit-local evolution and the qutrit-only form reproduces "
      "qubit-local evolution; the subsystem labels of the two forms appear exchanged.");
  report.notes.push_back(
      "The qutrit-only closed form carries p1 terms in lambda_{1,2} and lambda_{3,4}; it is evaluated with p1 = 0.");
  return report;
}

}  // namespace qqesd
