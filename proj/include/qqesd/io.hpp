#pragma once

// CSV / JSON serialization of sweep records and reports, and atomic file output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qqesd/analysis.hpp"
#include "qqesd/discrepancy.hpp"
#include "qqesd/verify.hpp"

namespace qqesd {

enum class Format { Csv, Json };

inline constexpr std::string_view kSweepCsvHeader = "scenario,mode,p1,p2,p,x,negativity,min_pt_eigenvalue";

// 12 significant digits; negative zero prints as 0.
inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string records_to_csv(const std::vector<SweepRecord>& records) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const SweepRecord& r : records) {
    out += std::string(to_string(r.kind)) + ',' + std::string(to_string(r.mode)) + ',' + format_number(r.p1) + ',' +
           format_number(r.p2) + ',' + format_number(r.p) + ',' + format_number(r.x) + ',' +
           format_number(r.negativity) + ',' + format_number(r.min_pt_eigenvalue) + '\n';
  }
  return out;
}

inline std::string records_to_json(const std::vector<SweepRecord>& records) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRecord& r : records) {
    rows.push_back({{"scenario", to_string(r.kind)},
                    {"mode", to_string(r.mode)},
                    {"p1", r.p1},
                    {"p2", r.p2},
                    {"p", r.p},
                    {"x", r.x},
                    {"negativity", r.negativity},
                    {"min_pt_eigenvalue", r.min_pt_eigenvalue}});
  }
  return rows.dump(2) + '\n';
}

inline std::string serialize(const std::vector<SweepRecord>& records, Format format) {
  return format == Format::Csv ? records_to_csv(records) : records_to_json(records);
}

struct CriticalPointRow {
  ScenarioKind kind;
  Mode mode;
  double xa;
  double xb;
  double value;
};

inline std::string critical_points_to_string(const std::vector<CriticalPointRow>& rows, Format format) {
  if (format == Format::Csv) {
    std::string out = "scenario,mode,xa,xb,critical_point\n";
    for (const auto& r : rows) {
      out += std::string(to_string(r.kind)) + ',' + std::string(to_string(r.mode)) + ',' + format_number(r.xa) + ',' +
             format_number(r.xb) + ',' + format_number(r.value) + '\n';
    }
    return out;
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    j.push_back({{"scenario", to_string(r.kind)},
                 {"mode", to_string(r.mode)},
                 {"xa", r.xa},
                 {"xb", r.xb},
                 {"critical_point", r.value}});
  }
  return j.dump(2) + '\n';
}

struct EsdRow {
  ScenarioKind kind;
  Mode mode;
  double x;
  std::optional<EsdOnset> onset;
};

// Absent onsets print an empty onset and kind "none".
inline std::string esd_to_string(const std::vector<EsdRow>& rows, Format format) {
  if (format == Format::Csv) {
    std::string out = "scenario,mode,x,onset,kind\n";
    for (const auto& r : rows) {
      out += std::string(to_string(r.kind)) + ',' + std::string(to_string(r.mode)) + ',' + format_number(r.x) + ',' +
             (r.onset ? format_number(r.onset->value) : "") + ',' +
             (r.onset ? std::string(to_string(r.onset->kind)) : "none") + '\n';
    }
    return out;
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row{{"scenario", to_string(r.kind)}, {"mode", to_string(r.mode)}, {"x", r.x}};
    row["onset"] = r.onset ? nlohmann::ordered_json(r.onset->value) : nlohmann::ordered_json(nullptr);
    row["kind"] = r.onset ? std::string(to_string(r.onset->kind)) : "none";
    j.push_back(row);
  }
  return j.dump(2) + '\n';
}

namespace detail {

inline nlohmann::ordered_json deviation_json(const Deviation& d) {
  return {{"max_abs_deviation", d.max_abs}, {"p1", d.p1}, {"p2", d.p2}, {"p", d.p}, {"x", d.x}};
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const DiscrepancyReport& report) {
  nlohmann::ordered_json j;
  j["grid_density"] = report.density;
  j["entries"] = nlohmann::ordered_json::array();
  for (const DiscrepancyEntry& e : report.entries) {
    nlohmann::ordered_json row{{"scenario", e.scenario}, {"quantity", e.quantity}, {"reference", e.reference}};
    row["deviation"] = detail::deviation_json(e.deviation);
    row["vs_standard_negativity"] =
        e.vs_standard_negativity ? detail::deviation_json(*e.vs_standard_negativity) : nlohmann::ordered_json(nullptr);
    row["zero_noise_deviation"] =
        e.zero_noise_deviation ? nlohmann::ordered_json(*e.zero_noise_deviation) : nlohmann::ordered_json(nullptr);
    row["agrees_at_zero_noise"] = e.agrees_at_zero_noise();
    j["entries"].push_back(row);
  }
  j["spot_checks"] = nlohmann::ordered_json::array();
  for (const SpotCheck& s : report.spot_checks) j["spot_checks"].push_back({{"label", s.label}, {"value", s.value}});
  j["esd_summary"] = nlohmann::ordered_json::array();
  for (const EsdSummary& s : report.esd_summary) {
    nlohmann::ordered_json row{{"scenario", s.scenario}, {"mode", to_string(s.mode)}, {"x", s.x}};
    row["onset"] = s.onset ? nlohmann::ordered_json(s.onset->value) : nlohmann::ordered_json(nullptr);
    row["kind"] = s.onset ? std::string(to_string(s.onset->kind)) : "none";
    row["revives"] = s.revives;
    j["esd_summary"].push_back(row);
  }
  j["notes"] = report.notes;
  return j;
}

inline std::string verification_to_json(const VerificationOutcome& outcome) {
  nlohmann::ordered_json j;
  j["passed"] = outcome.all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : outcome.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"worst", c.worst}, {"limit", c.limit}});
  }
  nlohmann::ordered_json roots = nlohmann::ordered_json::array();
  for (double r : outcome.collective_critical_points) roots.push_back(format_number(r));
  j["collective_critical_points"] = roots;
  j["discrepancy_report"] = report_to_json(outcome.report);
  return j.dump(2) + '\n';
}

// Writes to `path.tmp` and renames over `path`, so a failed run leaves no partial file.
inline void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// "0.1,0.25" -> {0.1, 0.25}.
inline std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw DomainError("empty entry in number list");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw DomainError("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty number list");
  return out;
}

}  // namespace qqesd
