#pragma once

// Closed-form sweeps behind each of the six negativity figures.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qqesd/analysis.hpp"

namespace qqesd {

struct FigureOptions {
  std::vector<double> x_values = default_x_values();
  double step = 0.01;
  CollectiveVariant variant = CollectiveVariant::Reconstructed;
  // Figure 4 only: (p2, x) pairs, each swept over p1.
  std::vector<std::pair<double, double>> multilocal_pairs{{0.32, 0.25}, {0.5, 0.25}, {0.6538, 0.25}, {0.75, 0.25}};
};

inline constexpr int kFigureCount = 6;

inline std::vector<SweepGrid> figure_grids(int id, const FigureOptions& options = {}) {
  const std::vector<double> params = param_grid(options.step);
  auto single = [&](ScenarioTemplate t) { return std::vector<SweepGrid>{{t, params, options.x_values, Mode::Paper}}; };
  switch (id) {
    case 1: return single(ScenarioTemplate::of(ScenarioKind::QubitLocal));
    case 2: return single(ScenarioTemplate::of(ScenarioKind::QutritLocal));
    case 3: {
      ScenarioTemplate t = ScenarioTemplate::of(ScenarioKind::Multilocal);
      t.p2 = 0.3;
      return single(t);
    }
    case 4: {
      std::vector<SweepGrid> grids;
      for (const auto& [p2, x] : options.multilocal_pairs) {
        ScenarioTemplate t = ScenarioTemplate::of(ScenarioKind::Multilocal);
        t.p2 = p2;
        grids.push_back({t, params, {x}, Mode::Paper});
      }
      return grids;
    }
    case 5: {
      ScenarioTemplate t = ScenarioTemplate::of(ScenarioKind::Collective);
      t.variant = options.variant;
      return single(t);
    }
    case 6: {
      ScenarioTemplate t = ScenarioTemplate::of(ScenarioKind::Global);
      t.p1 = t.p2 = 0.5;
      return single(t);
    }
    default: throw DomainError("figure id must be 1.." + std::to_string(kFigureCount) + ", got " + std::to_string(id));
  }
}

// Rows ordered by x, then by the fixed parameters, then by the swept one.
inline std::vector<SweepRecord> figure_records(int id, const FigureOptions& options = {}) {
  std::vector<SweepRecord> rows;
  for (const SweepGrid& g : figure_grids(id, options)) {
    std::vector<SweepRecord> part = sweep(g);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  if (id == 4) {
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRecord& a, const SweepRecord& b) {
      if (a.x != b.x) return a.x < b.x;
      if (a.p2 != b.p2) return a.p2 < b.p2;
      return a.p1 < b.p1;
    });
  }
  return rows;
}

}  // namespace qqesd
