// qqesd: figure data, sweeps, critical points, ESD onsets and verification
// for a qubit-qutrit pair under depolarizing noise.
//
//   qqesd fig 5 --variant printed --out fig5.csv
//   qqesd sweep --scenario collective --mode standard --x 0.2,0.25
//   qqesd critical --scenario qubit --mode paper
//   qqesd esd --scenario qutrit --mode paper --x 0.25
//   qqesd verify --out report.json
//
// Exit status: 0 success, 1 usage error, 2 failed invariant (verify only).

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qqesd/qqesd.hpp"

namespace {

using namespace qqesd;

constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

const std::map<std::string, ScenarioKind> kScenarios{{"qubit", ScenarioKind::QubitLocal},
                                                     {"qutrit", ScenarioKind::QutritLocal},
                                                     {"multilocal", ScenarioKind::Multilocal},
                                                     {"collective", ScenarioKind::Collective},
                                                     {"global", ScenarioKind::Global}};
const std::map<std::string, Mode> kModes{{"standard", Mode::Standard}, {"paper", Mode::Paper}};
const std::map<std::string, CollectiveVariant> kVariants{{"printed", CollectiveVariant::Printed},
                                                         {"reconstructed", CollectiveVariant::Reconstructed}};
const std::map<std::string, Format> kFormats{{"csv", Format::Csv}, {"json", Format::Json}};
const std::map<std::string, NoiseParam> kParams{{"p1", NoiseParam::P1}, {"p2", NoiseParam::P2}, {"p", NoiseParam::P}};

struct Options {
  std::string scenario = "qubit";
  std::string mode = "paper";
  std::string variant = "reconstructed";
  std::string format = "csv";
  std::string swept;
  double p1 = 0.0;
  double p2 = 0.0;
  double p = 0.0;
  std::string x;
  double step = 0.01;
  double tol = 1e-9;
  std::string out;
  unsigned threads = 1;
  int figure = 0;
  std::string pairs;
  int density = 21;
};

void add_common(CLI::App* cmd, Options& o, bool scenario_flags) {
  cmd->add_option("--out", o.out, "Output path (stdout when omitted)");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  if (!scenario_flags) return;
  cmd->add_option("--scenario", o.scenario, "Noise coupling")
      ->check(CLI::IsMember({"qubit", "qutrit", "multilocal", "collective", "global"}));
  cmd->add_option("--mode", o.mode, "standard: Kraus evolution; paper: closed forms")
      ->check(CLI::IsMember({"standard", "paper"}));
  cmd->add_option("--p1", o.p1, "Qubit-local parameter (fixed value)");
  cmd->add_option("--p2", o.p2, "Qutrit-local parameter (fixed value)");
  cmd->add_option("--p", o.p, "Collective parameter (fixed value)");
  cmd->add_option("--sweep", o.swept, "Free parameter (default depends on scenario)")
      ->check(CLI::IsMember({"p1", "p2", "p"}));
  cmd->add_option("--variant", o.variant, "Collective closed form")->check(CLI::IsMember({"printed", "reconstructed"}));
  cmd->add_option("--tol", o.tol, "Root-finder tolerance");
}

ScenarioTemplate make_template(const Options& o) {
  ScenarioTemplate t = ScenarioTemplate::of(kScenarios.at(o.scenario));
  t.p1 = o.p1;
  t.p2 = o.p2;
  t.p = o.p;
  if (!o.swept.empty()) t.swept = kParams.at(o.swept);
  // The free parameter's fixed value is irrelevant; zero it so the scenario
  // check does not reject e.g. --p1 given for a qutrit sweep over p2.
  switch (t.swept) {
    case NoiseParam::P1: t.p1 = 0.0; break;
    case NoiseParam::P2: t.p2 = 0.0; break;
    case NoiseParam::P: t.p = 0.0; break;
  }
  t.variant = kVariants.at(o.variant);
  t.at(0.0);  // validates the fixed parameters against the scenario kind
  return t;
}

std::vector<double> x_values(const Options& o, std::vector<double> fallback) {
  return o.x.empty() ? fallback : parse_number_list(o.x);
}

void emit(const Options& o, const std::string& content) {
  if (o.out.empty()) {
    std::cout << content;
  } else {
    write_atomic(o.out, content);
  }
}

int run_fig(const Options& o) {
  FigureOptions fo;
  fo.x_values = x_values(o, fo.x_values);
  fo.step = o.step;
  fo.variant = kVariants.at(o.variant);
  if (!o.pairs.empty()) {
    const std::vector<double> flat = parse_number_list(o.pairs);
    if (flat.size() % 2 != 0) throw DomainError("--pairs expects p2,x pairs");
    fo.multilocal_pairs.clear();
    for (std::size_t i = 0; i < flat.size(); i += 2) fo.multilocal_pairs.emplace_back(flat[i], flat[i + 1]);
  }
  emit(o, serialize(figure_records(o.figure, fo), kFormats.at(o.format)));
  return 0;
}

int run_sweep(const Options& o) {
  SweepGrid grid{make_template(o), param_grid(o.step), x_values(o, default_x_values()), kModes.at(o.mode)};
  emit(o, serialize(sweep(grid, o.threads), kFormats.at(o.format)));
  return 0;
}

int run_critical(const Options& o) {
  const std::vector<double> xs = x_values(o, {0.1, 0.25});
  if (xs.size() != 2) throw DomainError("critical expects exactly two x values (--x xa,xb)");
  const ScenarioTemplate t = make_template(o);
  const Mode mode = kModes.at(o.mode);
  std::vector<CriticalPointRow> rows;
  for (double v : critical_point(t, mode, FamilyParam(xs[0]), FamilyParam(xs[1]), o.tol)) {
    rows.push_back({t.kind, mode, xs[0], xs[1], v});
  }
  emit(o, critical_points_to_string(rows, kFormats.at(o.format)));
  return 0;
}

int run_esd(const Options& o) {
  const ScenarioTemplate t = make_template(o);
  const Mode mode = kModes.at(o.mode);
  std::vector<EsdRow> rows;
  for (double x : x_values(o, {0.25})) rows.push_back({t.kind, mode, x, esd_onset(t, mode, FamilyParam(x), o.tol)});
  emit(o, esd_to_string(rows, kFormats.at(o.format)));
  return 0;
}

int run_verify(const Options& o) {
  const VerificationOutcome outcome = run_verification(o.density);
  emit(o, verification_to_json(outcome));
  for (const CheckResult& c : outcome.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << " (worst " << c.worst << ", limit " << c.limit << ")\n";
  }
  return outcome.all_passed() ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement dynamics of a qubit-qutrit pair under depolarizing noise"};
  app.require_subcommand(1);
  Options o;

  auto* fig = app.add_subcommand("fig", "Closed-form data for figure 1..6");
  fig->add_option("id", o.figure, "Figure number")->required();
  fig->add_option("--x", o.x, "Comma-separated x values");
  fig->add_option("--step", o.step, "Parameter grid step");
  fig->add_option("--variant", o.variant, "Collective closed form (figure 5)")
      ->check(CLI::IsMember({"printed", "reconstructed"}));
  fig->add_option("--pairs", o.pairs, "Figure 4 p2,x pairs, e.g. 0.32,0.25,0.5,0.25");
  add_common(fig, o, false);

  auto* sweep_cmd = app.add_subcommand("sweep", "Negativity over a parameter grid");
  add_common(sweep_cmd, o, true);
  sweep_cmd->add_option("--x", o.x, "Comma-separated x values");
  sweep_cmd->add_option("--step", o.step, "Parameter grid step");
  sweep_cmd->add_option("--threads", o.threads, "Worker threads");

  auto* critical = app.add_subcommand("critical", "Parameter values where two family members are equally entangled");
  add_common(critical, o, true);
  critical->add_option("--x", o.x, "Two x values xa,xb");

  auto* esd = app.add_subcommand("esd", "Onset of entanglement sudden death");
  add_common(esd, o, true);
  esd->add_option("--x", o.x, "Comma-separated x values");

  auto* verify = app.add_subcommand("verify", "Invariant suite and discrepancy report");
  add_common(verify, o, false);
  verify->add_option("--density", o.density, "Discrepancy grid points per axis")->check(CLI::Range(2, 201));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*fig) return run_fig(o);
    if (*sweep_cmd) return run_sweep(o);
    if (*critical) return run_critical(o);
    if (*esd) return run_esd(o);
    if (*verify) return run_verify(o);
  } catch (const UnsupportedModeError& e) {
    std::cerr << "error: " << e.what() << "\nhint: use --mode standard, or a scenario with a closed form\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
