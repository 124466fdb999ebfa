#pragma once

#include <stdexcept>
#include <string>

namespace sunforge {

/// An enumeration or sampling limit would be exceeded by the requested run.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed family file or report input. Carries the 1-based line number
/// (0 when the error is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A constructive procedure could not produce a witness.
class NoWitnessFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sunforge
