#include "report.hpp"

namespace numrange::cli {

nlohmann::json to_json(const RunReport& report) {
  return {{"command", report.command},
          {"inputs", report.inputs},
          {"results", report.results},
          {"tolerances", report.tolerances},
          {"version", report.version}};
}

RunReport report_from_json(const nlohmann::json& j) {
  RunReport report;
  report.command = j.at("command").get<std::string>();
  report.inputs = j.at("inputs");
  report.results = j.at("results");
  report.tolerances = j.at("tolerances");
  report.version = j.at("version").get<std::string>();
  return report;
}

std::string serialize(const RunReport& report) { return to_json(report).dump(2) + "\n"; }

RunReport parse_report(std::string_view text) {
  return report_from_json(nlohmann::json::parse(text.begin(), text.end()));
}

}  // namespace numrange::cli
