#pragma once

#include "afspec/report.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace afspec::cli {

enum ExitCode { kOk = 0, kAssertionFailed = 1, kParseError = 2, kInvalidModel = 3, kSizeLimit = 4 };

struct Options {
  std::string command;
  std::string file;
  std::optional<std::string> horizon;  ///< integer or "preamble+K*period"
  std::optional<int> period;           ///< closures: which period to display
  std::optional<std::string> ideal;    ///< modular: point name
  std::string check = "all";           ///< topo
  std::size_t max_ideals = 100000;
};

/// Runs one analysis command. Throws ParseError, ModelError, SizeLimitError.
AnalysisReport analyze(const Options& opts);

/// Full command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace afspec::cli
