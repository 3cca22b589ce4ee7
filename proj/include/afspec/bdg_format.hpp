#pragma once

#include "afspec/diagram.hpp"

#include <string>
#include <string_view>

namespace afspec {

/// Parses the line-oriented .bdg format. Throws ParseError (with line and
/// column) on syntax errors and dangling references, ModelError when the
/// parsed diagram violates a model invariant.
///
///   levels <N>
///   vertex <name>@<level> dim=<d> [terminal]
///   edge <name>@<l> -> <name>@<l+1> mult=<m>
///
///   levels periodic preamble=<p> period=<q>
///   column <name> start=<level> [dim=<d>] [mult=<m>] [extra=<e>] [once]
///   link <name>[+k|-k] -> <name> [mult=<m>]
BratteliDiagram parse_diagram(std::string_view text);

/// Reads and parses a file; IO failures throw ParseError at line 0.
BratteliDiagram load_diagram(const std::string& path);

/// Emits the same grammar in canonical order.
std::string serialize(const BratteliDiagram& d);

}  // namespace afspec
