// Structured result of one verification and its JSON form.

#ifndef QUARKALG_REPORT_HPP
#define QUARKALG_REPORT_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

namespace quarkalg {

enum class Status { pass, fail };

inline const char* to_string(Status s) { return s == Status::pass ? "pass" : "fail"; }

struct CheckReport {
  std::string name;
  Status status = Status::fail;
  double residual = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string details;

  bool passed() const { return status == Status::pass; }
};

inline Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

/// %.17g rendering used for every number in the JSON report.
inline std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string report_to_json(const CheckReport& r) {
  std::string out = "{";
  out += "\"name\": " + nlohmann::json(r.name).dump();
  out += ", \"status\": \"" + std::string(to_string(r.status)) + "\"";
  out += ", \"residual\": " + format_number(r.residual);
  out += ", \"samples\": " + std::to_string(r.samples);
  out += ", \"seed\": " + std::to_string(r.seed);
  out += ", \"details\": " + nlohmann::json(r.details).dump();
  return out + "}";
}

/// JSON array of reports in the given order, one object per line.
inline std::string reports_to_json(const std::vector<CheckReport>& reports) {
  std::string out = "[\n";
  for (std::size_t k = 0; k < reports.size(); ++k) {
    out += "  " + report_to_json(reports[k]);
    out += k + 1 < reports.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

inline CheckReport report_from_json(const nlohmann::json& j) {
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  r.status = j.at("status").get<std::string>() == "pass" ? Status::pass : Status::fail;
  r.residual = j.at("residual").get<double>();
  r.samples = j.at("samples").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.details = j.at("details").get<std::string>();
  return r;
}

}  // namespace quarkalg

#endif  // QUARKALG_REPORT_HPP
