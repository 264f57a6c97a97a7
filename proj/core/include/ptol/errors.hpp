#pragma once

#include <stdexcept>
#include <string>

namespace ptol {

// Error while reading one of the text formats. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, int column, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string source_;
  int line_;
  int column_;
};

// Thrown when a machine-checked structural guarantee does not hold on a
// concrete input. These are never swallowed: either the input violates a
// documented precondition elsewhere, or the guarantee itself is wrong, and
// both deserve a loud stop with the offending data in the message.
class FalsifiedGuarantee : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptol
