#pragma once

// Parameter sweeps, critical points and ESD onsets in two evaluation modes:
//   standard - Kraus evolution of rho(x) followed by the numeric negativity;
//   paper    - the literal max{0, |.|} closed forms from closed_form.hpp.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qqesd/channels.hpp"
#include "qqesd/closed_form.hpp"
#include "qqesd/entanglement.hpp"
#include "qqesd/errors.hpp"
#include "qqesd/root_finding.hpp"
#include "qqesd/states.hpp"

namespace qqesd {

enum class Mode { Standard, Paper };
enum class NoiseParam { P1, P2, P };

inline std::string_view to_string(Mode mode) { return mode == Mode::Standard ? "standard" : "paper"; }

inline std::string_view to_string(NoiseParam param) {
  switch (param) {
    case NoiseParam::P1: return "p1";
    case NoiseParam::P2: return "p2";
    case NoiseParam::P: return "p";
  }
  return "unknown";
}

inline NoiseParam default_swept_param(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::QubitLocal:
    case ScenarioKind::Multilocal: return NoiseParam::P1;
    case ScenarioKind::QutritLocal: return NoiseParam::P2;
    case ScenarioKind::Collective:
    case ScenarioKind::Global: return NoiseParam::P;
  }
  return NoiseParam::P;
}

// A scenario with one free parameter. The fixed values of the other
// parameters live in p1/p2/p; the swept one is overwritten by at().
struct ScenarioTemplate {
  ScenarioKind kind = ScenarioKind::QubitLocal;
  double p1 = 0.0;
  double p2 = 0.0;
  double p = 0.0;
  NoiseParam swept = NoiseParam::P1;
  CollectiveVariant variant = CollectiveVariant::Reconstructed;

  static ScenarioTemplate of(ScenarioKind kind) { return {kind, 0.0, 0.0, 0.0, default_swept_param(kind)}; }

  NoiseScenario at(double value) const {
    double q1 = p1, q2 = p2, q = p;
    switch (swept) {
      case NoiseParam::P1: q1 = value; break;
      case NoiseParam::P2: q2 = value; break;
      case NoiseParam::P: q = value; break;
    }
    return {kind, q1, q2, q};
  }
};

struct PointEvaluation {
  double negativity = 0.0;
  // Standard mode: minimum eigenvalue of the partial transpose. Paper mode:
  // the signed expression whose absolute value is the closed-form negativity.
  double min_pt_eigenvalue = 0.0;
};

namespace detail {

inline void require_paper_support(const ScenarioTemplate& t) {
  auto unsupported = [&](const std::string& why) {
    throw UnsupportedModeError("paper mode has no closed form for scenario '" + std::string(to_string(t.kind)) +
                               "' " + why);
  };
  switch (t.kind) {
    case ScenarioKind::QubitLocal:
      if (t.swept != NoiseParam::P1) unsupported("swept over " + std::string(to_string(t.swept)));
      break;
    case ScenarioKind::QutritLocal:
      if (t.swept != NoiseParam::P2) unsupported("swept over " + std::string(to_string(t.swept)));
      break;
    case ScenarioKind::Multilocal:
      if (t.swept == NoiseParam::P) unsupported("swept over p");
      break;
    case ScenarioKind::Collective:
      if (t.swept != NoiseParam::P) unsupported("swept over " + std::string(to_string(t.swept)));
      break;
    case ScenarioKind::Global:
      if (t.swept != NoiseParam::P || t.p1 != 0.5 || t.p2 != 0.5) {
        unsupported("unless p1 = p2 = 1/2 with p swept");
      }
      break;
  }
}

inline PaperNegativity paper_point(const ScenarioTemplate& t, const NoiseScenario& s, FamilyParam x) {
  switch (t.kind) {
    case ScenarioKind::QubitLocal: return negativity_paper_qubit(s.p1(), x);
    case ScenarioKind::QutritLocal: return negativity_paper_qutrit(s.p2(), x);
    case ScenarioKind::Multilocal: return negativity_paper_multilocal(s.p1(), s.p2(), x);
    case ScenarioKind::Collective: return negativity_paper_collective(s.p(), x, t.variant);
    case ScenarioKind::Global: return negativity_paper_global_half(s.p(), x);
  }
  return {};
}

}  // namespace detail

inline PointEvaluation evaluate_point(const ScenarioTemplate& t, double value, double x, Mode mode,
                                      double tol = kDefaultTolerance) {
  if (mode == Mode::Paper) detail::require_paper_support(t);
  const NoiseScenario scenario = t.at(value);
  const FamilyParam fx(x);
  if (mode == Mode::Paper) {
    const PaperNegativity n = detail::paper_point(t, scenario, fx);
    return {n.value, n.inner};
  }
  const NegativityResult n = negativity_standard(evolve(scenario, rho_x(fx)), tol);
  return {n.negativity, n.min_eigenvalue};
}

struct SweepGrid {
  ScenarioTemplate scenario;
  std::vector<double> param_values;
  std::vector<double> x_values;
  Mode mode = Mode::Standard;
};

struct SweepRecord {
  ScenarioKind kind = ScenarioKind::QubitLocal;
  Mode mode = Mode::Standard;
  double p1 = 0.0;
  double p2 = 0.0;
  double p = 0.0;
  double x = 0.0;
  double negativity = 0.0;
  double min_pt_eigenvalue = 0.0;
};

// Points i/n for i = 0..n, n = round(1/step). The step must divide 1.
inline std::vector<double> param_grid(double step = 0.01) {
  if (!(step > 0.0 && step <= 1.0)) throw DomainError("grid step must lie in (0, 1]");
  const double count = std::round(1.0 / step);
  if (std::abs(count * step - 1.0) > 1e-9) throw DomainError("grid step must divide 1 evenly");
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> grid(n + 1);
  for (std::size_t i = 0; i <= n; ++i) grid[i] = static_cast<double>(i) / static_cast<double>(n);
  return grid;
}

inline std::vector<double> default_x_values() { return {0.0, 0.05, 0.10, 0.125, 0.15, 0.20, 0.25}; }

namespace detail {

inline void require_ascending(const std::vector<double>& v, double lo, double hi, const char* what) {
  if (v.empty()) throw DomainError(std::string(what) + ": empty list");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] >= lo && v[i] <= hi)) throw DomainError(std::string(what) + ": value out of range");
    if (i > 0 && !(v[i] > v[i - 1])) throw DomainError(std::string(what) + ": values must be strictly ascending");
  }
}

}  // namespace detail

// One record per (x, parameter value), x-major. Grid points are evaluated
// independently; the output order does not depend on `threads`.
inline std::vector<SweepRecord> sweep(const SweepGrid& grid, unsigned threads = 1) {
  detail::require_ascending(grid.param_values, 0.0, 1.0, "sweep parameter values");
  detail::require_ascending(grid.x_values, 0.0, FamilyParam::kMax, "sweep x values");
  if (grid.mode == Mode::Paper) detail::require_paper_support(grid.scenario);
  grid.scenario.at(grid.param_values.front());  // validates the fixed parameters

  const std::size_t n_params = grid.param_values.size();
  std::vector<SweepRecord> records(grid.x_values.size() * n_params);
  auto fill = [&](std::size_t index) {
    const double x = grid.x_values[index / n_params];
    const double value = grid.param_values[index % n_params];
    const NoiseScenario s = grid.scenario.at(value);
    const PointEvaluation e = evaluate_point(grid.scenario, value, x, grid.mode);
    records[index] = {s.kind(), grid.mode, s.p1(), s.p2(), s.p(), x, e.negativity, e.min_pt_eigenvalue};
  };

  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < records.size(); ++i) fill(i);
    return records;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < records.size(); i += threads) fill(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

namespace detail {
inline constexpr std::size_t kScanIntervals = 2000;
}

// Parameter values in [0, 1] at which xa and xb reach the same entanglement.
// Paper mode compares the signed inner expressions, so points where
// inner(xa) = -inner(xb) (equal absolute values, opposite sides of zero) are
// not reported. Standard mode compares negativities and skips stretches where
// both vanish.
inline std::vector<double> critical_point(const ScenarioTemplate& t, Mode mode, FamilyParam xa, FamilyParam xb,
                                          double tol = 1e-9) {
  if (xa.value() == xb.value()) throw DomainError("critical_point: xa and xb must differ");
  if (mode == Mode::Paper) detail::require_paper_support(t);
  auto quantity = [&](double v, FamilyParam x) {
    const PointEvaluation e = evaluate_point(t, v, x.value(), mode);
    return mode == Mode::Paper ? e.min_pt_eigenvalue : e.negativity;
  };
  auto difference = [&](double v) { return quantity(v, xa) - quantity(v, xb); };
  std::vector<double> roots = scan_roots(difference, 0.0, 1.0, detail::kScanIntervals, tol);
  if (mode == Mode::Standard) {
    std::erase_if(roots, [&](double v) {
      return evaluate_point(t, v, xa.value(), mode).negativity == 0.0 &&
             evaluate_point(t, v, xb.value(), mode).negativity == 0.0;
    });
  }
  return roots;
}

enum class EsdKind { Interval, Isolated };

inline std::string_view to_string(EsdKind kind) { return kind == EsdKind::Interval ? "interval" : "isolated"; }

struct EsdOnset {
  double value = 0.0;
  EsdKind kind = EsdKind::Isolated;
};

namespace detail {
inline constexpr double kEsdProbe = 1e-3;
}

// Smallest parameter value at which the negativity reaches zero.
// Standard mode: the minimum partial-transpose eigenvalue crosses -1e-12 from
// below. Paper mode: the inner expression crosses zero. The onset is an
// Interval when negativity stays zero just past it, Isolated otherwise.
inline std::optional<EsdOnset> esd_onset(const ScenarioTemplate& t, Mode mode, FamilyParam x, double tol = 1e-9) {
  if (mode == Mode::Paper) detail::require_paper_support(t);
  auto eval = [&](double v) { return evaluate_point(t, v, x.value(), mode); };

  std::optional<double> onset;
  if (mode == Mode::Paper) {
    auto inner = [&](double v) { return eval(v).min_pt_eigenvalue; };
    const std::vector<double> roots = scan_roots(inner, 0.0, 1.0, detail::kScanIntervals, tol);
    if (!roots.empty()) onset = roots.front();
  } else {
    auto witness = [&](double v) { return eval(v).min_pt_eigenvalue + kDefaultTolerance; };
    double prev_v = 0.0;
    double prev_w = witness(0.0);
    if (prev_w >= 0.0) {
      onset = 0.0;
    } else {
      const std::vector<double> grid = param_grid(1.0 / static_cast<double>(detail::kScanIntervals));
      for (std::size_t i = 1; i < grid.size(); ++i) {
        const double w = witness(grid[i]);
        if (w >= 0.0) {
          onset = bisect(witness, prev_v, grid[i], tol, prev_w, w).root;
          break;
        }
        prev_v = grid[i];
        prev_w = w;
      }
    }
  }
  if (!onset) return std::nullopt;

  const double right = std::min(1.0, *onset + detail::kEsdProbe);
  const double left = std::max(0.0, *onset - detail::kEsdProbe);
  const bool zero_right = eval(right).negativity <= kDefaultTolerance;
  const bool zero_left = *onset > 0.0 && eval(left).negativity <= kDefaultTolerance;
  return EsdOnset{*onset, (zero_right || (right == *onset && zero_left)) ? EsdKind::Interval : EsdKind::Isolated};
}

// Whether negativity becomes positive again after an ESD onset, scanned on
// the given parameter grid.
inline bool entanglement_revives(const ScenarioTemplate& t, Mode mode, FamilyParam x, double onset,
                                 const std::vector<double>& grid) {
  for (double v : grid) {
    if (v <= onset + detail::kEsdProbe) continue;
    if (evaluate_point(t, v, x.value(), mode).negativity > kDefaultTolerance) return true;
  }
  return false;
}

}  // namespace qqesd
