#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parasoc {

/// Malformed or inconsistent input (wrong dimensions, out-of-range ids, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vector or matrix sizes that do not match the election.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// The instance is valid but exceeds the configured limits of an exhaustive solver.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input that fails to parse. Line and column are 1-based; column 0 means "whole line".
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) +
                   (column ? ", column " + std::to_string(column) : std::string()) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace parasoc
