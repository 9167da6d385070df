#include "k3v/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace k3v {

using Json = nlohmann::ordered_json;

void Report::add_section(std::string name, const CheckReport& checks) {
  sections.push_back({std::move(name), checks.items});
}

bool Report::passed() const {
  for (const auto& s : sections) {
    for (const auto& c : s.checks) {
      if (!c.passed) return false;
    }
  }
  return true;
}

void Report::finalize() { summary = passed() ? "pass" : "fail"; }

Json to_json(const Report& report) {
  Json doc;
  doc["tool"] = report.tool;
  doc["command"] = report.command;
  doc["family"] = report.family;
  doc["basis"] = report.basis;
  Json sections = Json::array();
  for (const auto& s : report.sections) {
    Json checks = Json::array();
    for (const auto& c : s.checks) {
      Json item;
      item["check_name"] = c.name;
      item["status"] = c.passed ? "pass" : "fail";
      item["detail"] = c.detail;
      if (c.witness) item["witness"] = *c.witness;
      checks.push_back(std::move(item));
    }
    sections.push_back({{"name", s.name}, {"checks", std::move(checks)}});
  }
  doc["sections"] = std::move(sections);
  doc["data"] = report.data;
  if (report.timing_seconds) doc["timing_seconds"] = *report.timing_seconds;
  doc["summary"] = report.summary;
  return doc;
}

Report report_from_json(const Json& doc) {
  try {
    Report r;
    r.tool = doc.at("tool").get<std::string>();
    r.command = doc.at("command").get<std::string>();
    r.family = doc.at("family").get<std::string>();
    r.basis = doc.at("basis").get<std::vector<std::string>>();
    for (const auto& s : doc.at("sections")) {
      ReportSection section{s.at("name").get<std::string>(), {}};
      for (const auto& c : s.at("checks")) {
        CheckItem item;
        item.name = c.at("check_name").get<std::string>();
        const auto status = c.at("status").get<std::string>();
        if (status != "pass" && status != "fail") throw std::invalid_argument("bad status " + status);
        item.passed = status == "pass";
        item.detail = c.at("detail").get<std::string>();
        if (c.contains("witness")) item.witness = c.at("witness").get<std::string>();
        section.checks.push_back(std::move(item));
      }
      r.sections.push_back(std::move(section));
    }
    r.data = doc.at("data");
    if (doc.contains("timing_seconds")) r.timing_seconds = doc.at("timing_seconds").get<double>();
    r.summary = doc.at("summary").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string serialize(const Report& report) { return to_json(report).dump(2) + "\n"; }

Report parse_report(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  return report_from_json(doc);
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << report.tool << "  " << report.command;
  if (!report.family.empty()) out << "  " << report.family;
  out << "\n";
  for (const auto& s : report.sections) {
    out << "[" << s.name << "]\n";
    for (const auto& c : s.checks) {
      out << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name;
      if (!c.detail.empty()) out << "  " << c.detail;
      out << "\n";
      if (c.witness) out << "        witness: " << *c.witness << "\n";
    }
  }
  if (report.timing_seconds) out << "time: " << std::fixed << std::setprecision(3) << *report.timing_seconds << " s\n";
  out << "summary: " << report.summary << "\n";
  return out.str();
}

}  // namespace k3v
