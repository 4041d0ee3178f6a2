#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/json_io.hpp"

namespace ribbon::verify {

using json = io::json;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Row-oriented table of exact values, rendered as CSV.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool empty() const { return columns.empty(); }
};

struct Report {
  std::string suite;
  json params = json::object();
  std::vector<Check> checks;
  Table table;
  std::vector<std::string> notes;
  json counterexample;  // null unless some check failed
  std::optional<double> runtime_seconds;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }

  /// Records a check; the first failure's counterexample is kept.
  bool check(std::string name, bool pass, std::string detail = {}, const json& witness = nullptr) {
    if (!pass && counterexample.is_null()) {
      counterexample = json::object();
      counterexample["check"] = name;
      if (!detail.empty()) counterexample["detail"] = detail;
      if (!witness.is_null()) counterexample["witness"] = witness;
    }
    checks.push_back({std::move(name), pass, std::move(detail)});
    return pass;
  }
};

inline json to_json(const Report& r) {
  json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  j["params"] = r.params;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  if (!r.table.empty()) j["table"] = {{"columns", r.table.columns}, {"rows", r.table.rows}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["counterexample"] = r.counterexample;
  if (r.runtime_seconds) j["runtime_seconds"] = *r.runtime_seconds;
  return j;
}

inline Report report_from_json(const json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.params = j.value("params", json::object());
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.value("detail", std::string{})});
  if (j.contains("table")) {
    r.table.columns = j["table"].at("columns").get<std::vector<std::string>>();
    r.table.rows = j["table"].at("rows").get<std::vector<std::vector<std::string>>>();
  }
  if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
  r.counterexample = j.value("counterexample", json());
  if (j.contains("runtime_seconds")) r.runtime_seconds = j["runtime_seconds"].get<double>();
  return r;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_field(fields[i]);
  return line + "\n";
}

/// JSON (lossless), CSV (the table, or the checks when there is none) or plain text.
inline std::string render(const Report& r, std::string_view format) {
  if (format == "json") return to_json(r).dump(2) + "\n";
  if (format == "csv") {
    std::string out;
    if (!r.table.empty()) {
      out += csv_line(r.table.columns);
      for (const auto& row : r.table.rows) out += csv_line(row);
    } else {
      out += csv_line({"suite", "check", "pass", "detail"});
      for (const auto& c : r.checks) out += csv_line({r.suite, c.name, c.pass ? "true" : "false", c.detail});
    }
    return out;
  }
  if (format == "text") {
    std::ostringstream out;
    out << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.checks)
      out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    if (!r.table.empty()) {
      std::vector<size_t> width(r.table.columns.size());
      for (size_t i = 0; i < width.size(); ++i) width[i] = r.table.columns[i].size();
      for (const auto& row : r.table.rows)
        for (size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
      auto line = [&](const std::vector<std::string>& row) {
        out << " ";
        for (size_t i = 0; i < row.size(); ++i) out << " " << row[i] << std::string(width[i] - row[i].size(), ' ');
        out << "\n";
      };
      line(r.table.columns);
      for (const auto& row : r.table.rows) line(row);
    }
    if (!r.counterexample.is_null()) out << "  counterexample: " << r.counterexample.dump() << "\n";
    if (r.runtime_seconds) out << "  runtime: " << *r.runtime_seconds << " s\n";
    return out.str();
  }
  throw std::invalid_argument("unknown format '" + std::string(format) + "' (expected json, csv or text)");
}

}  // namespace ribbon::verify
