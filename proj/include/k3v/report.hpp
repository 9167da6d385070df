#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "k3v/check.hpp"

namespace k3v {

inline constexpr std::string_view kToolVersion = "k3v 0.1.0";

struct ReportSection {
  std::string name;
  std::vector<CheckItem> checks;

  friend bool operator==(const ReportSection&, const ReportSection&) = default;
};

/// Header fields, ordered check sections, free-form findings and a summary.
/// The summary is "pass" iff every check in every section passed.
struct Report {
  std::string tool = std::string(kToolVersion);
  std::string command;
  std::string family;
  std::vector<std::string> basis;  // coordinate order of every vector in the report
  std::vector<ReportSection> sections;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::optional<double> timing_seconds;
  std::string summary;

  void add_section(std::string name, const CheckReport& checks);
  bool passed() const;
  /// Recomputes summary from the sections.
  void finalize();

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::ordered_json to_json(const Report& report);
/// Throws std::invalid_argument on a malformed document.
Report report_from_json(const nlohmann::ordered_json& doc);

std::string serialize(const Report& report);
Report parse_report(std::string_view text);
std::string to_text(const Report& report);

}  // namespace k3v
