#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace afspec {

inline constexpr const char* kToolVersion = "0.3.0";

/// Output of one CLI command. `lines` is the text rendering; the JSON
/// sections carry the same content in structured form. Text never includes
/// the wall time, so it is byte-identical across runs.
struct AnalysisReport {
  using Json = nlohmann::ordered_json;

  std::string command;
  Json inputs = Json::object();
  Json verdicts = Json::object();   ///< flat: name -> bool | string | number
  Json tables = Json::object();
  Json witnesses = Json::object();
  std::string version = kToolVersion;
  double wall_time = 0.0;           ///< seconds
  std::vector<std::string> lines;

  void line(std::string s) { lines.push_back(std::move(s)); }
  /// Records a verdict and echoes it as "name: value" in the text output.
  void verdict(const std::string& name, const Json& value);

  Json to_json() const;
  static AnalysisReport from_json(const Json& j);
  std::string text() const;

  /// Verdict rendered the way --assert compares it ("true", "ZeroCenter", "3").
  std::string verdict_string(const std::string& name) const;
};

}  // namespace afspec
