#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace numrange::cli {

inline constexpr std::string_view kVersion = "0.3.0";

/// Result of one CLI invocation. nlohmann::json objects keep keys in a
/// std::map, so serialization is sorted and stable.
struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json tolerances = nlohmann::json::object();
  std::string version{kVersion};
};

nlohmann::json to_json(const RunReport& report);

/// Throws nlohmann::json::exception on a missing or mistyped field.
RunReport report_from_json(const nlohmann::json& j);

/// Two-space indented JSON with a trailing newline.
std::string serialize(const RunReport& report);
RunReport parse_report(std::string_view text);

}  // namespace numrange::cli
