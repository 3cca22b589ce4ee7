#include "afspec/report.hpp"

#include "afspec/error.hpp"

namespace afspec {

void AnalysisReport::verdict(const std::string& name, const Json& value) {
  verdicts[name] = value;
  line(name + ": " + (value.is_string() ? value.get<std::string>() : value.dump()));
}

AnalysisReport::Json AnalysisReport::to_json() const {
  Json j;
  j["command"] = command;
  j["version"] = version;
  j["inputs"] = inputs;
  j["verdicts"] = verdicts;
  j["tables"] = tables;
  j["witnesses"] = witnesses;
  j["text"] = lines;
  j["wall_time"] = wall_time;
  return j;
}

AnalysisReport AnalysisReport::from_json(const Json& j) {
  AnalysisReport r;
  r.command = j.at("command").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.inputs = j.at("inputs");
  r.verdicts = j.at("verdicts");
  r.tables = j.at("tables");
  r.witnesses = j.at("witnesses");
  r.lines = j.at("text").get<std::vector<std::string>>();
  r.wall_time = j.at("wall_time").get<double>();
  return r;
}

std::string AnalysisReport::text() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::string AnalysisReport::verdict_string(const std::string& name) const {
  auto it = verdicts.find(name);
  if (it == verdicts.end()) throw ModelError("no verdict named " + name);
  return it->is_string() ? it->get<std::string>() : it->dump();
}

}  // namespace afspec
