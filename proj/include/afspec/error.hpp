#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afspec {

/// Malformed .bdg / .ftp input. Carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// The input parsed but does not describe a valid model (dims, levels,
/// non-ideal vertex sets, mismatched hosts, unknown names).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A combinatorial guard tripped (ideal-count cap, open-set cap, oracle size).
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace afspec
