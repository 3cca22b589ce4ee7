#pragma once

#include "afspec/topospace.hpp"

#include <string>
#include <string_view>

namespace afspec {

/// Parses the .ftp format: all `point` lines, then one `minopen` line per
/// point. `#` starts a comment.
///
///   point <name>
///   minopen <name> = {<name>,...}
///
/// Unknown names and duplicates throw ParseError; a table that is not a
/// consistent family of minimal open sets throws ModelError.
FiniteTopSpace parse_space(std::string_view text);

FiniteTopSpace load_space(const std::string& path);

std::string serialize(const FiniteTopSpace& x);

}  // namespace afspec
