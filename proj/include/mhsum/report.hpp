#pragma once

// Verification records and their JSON/CSV serialization.  The on-disk
// schema is exactly {"identity","params","status","lhs","rhs"}; the
// in-memory elapsed field is intentionally not serialized so identical
// configurations produce byte-identical report files.

#include <chrono>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mhsum/errors.hpp"

namespace mhsum {

enum class Status { Pass, Fail, Skipped };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "FAIL";
}

inline Status status_from_string(const std::string& s) {
  if (s == "PASS") return Status::Pass;
  if (s == "FAIL") return Status::Fail;
  if (s == "SKIPPED") return Status::Skipped;
  throw ConfigError("unknown report status '" + s + "'");
}

struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;  // insertion order
  Status status = Status::Pass;
  std::string lhs;
  std::string rhs;
  std::chrono::microseconds elapsed{0};

  bool failed() const { return status == Status::Fail; }
  bool passed() const { return status == Status::Pass; }
  bool skipped() const { return status == Status::Skipped; }

  // Serialized fields only; elapsed is excluded by design.
  friend bool operator==(const VerificationReport& a,
                         const VerificationReport& b) {
    return a.identity == b.identity && a.params == b.params &&
           a.status == b.status && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

using ParamList = std::vector<std::pair<std::string, std::string>>;

inline VerificationReport report_compare(std::string identity,
                                         ParamList params, bool equal,
                                         std::string lhs, std::string rhs) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.status = equal ? Status::Pass : Status::Fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

inline VerificationReport report_skip(std::string identity, ParamList params,
                                      std::string reason) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.params.emplace_back("reason", std::move(reason));
  r.status = Status::Skipped;
  return r;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  j["params"] = std::move(params);
  j["status"] = to_string(r.status);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  return j;
}

inline VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.identity = j.at("identity").get<std::string>();
  for (const auto& [key, value] : j.at("params").items())
    r.params.emplace_back(key, value.get<std::string>());
  r.status = status_from_string(j.at("status").get<std::string>());
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  return r;
}

inline std::string params_to_string(const ParamList& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key + "=" + value;
  }
  return out;
}

// RFC-4180 style quoting: wrap in quotes when the cell contains a
// comma, quote or newline; double embedded quotes.
inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void emit_report(const std::vector<VerificationReport>& reports,
                        const std::string& format, std::ostream& os) {
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    os << arr.dump(2) << '\n';
  } else if (format == "csv") {
    os << "identity,params,status,lhs,rhs\n";
    for (const auto& r : reports)
      os << csv_cell(r.identity) << ',' << csv_cell(params_to_string(r.params))
         << ',' << to_string(r.status) << ',' << csv_cell(r.lhs) << ','
         << csv_cell(r.rhs) << '\n';
  } else {
    throw ConfigError("unknown report format '" + format +
                      "' (expected json or csv)");
  }
}

inline void emit_report(const std::vector<VerificationReport>& reports,
                        const std::string& format, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open report path '" + path + "' for writing");
  emit_report(reports, format, os);
  if (!os.good()) throw Error("write to report path '" + path + "' failed");
}

inline std::vector<VerificationReport> reports_from_json_file(
    const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open report path '" + path + "'");
  nlohmann::ordered_json arr = nlohmann::ordered_json::parse(is);
  std::vector<VerificationReport> out;
  for (const auto& j : arr) out.push_back(report_from_json(j));
  return out;
}

inline bool has_failures(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.failed()) return true;
  return false;
}

}  // namespace mhsum
