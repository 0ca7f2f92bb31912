/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bpsolve {

enum class ErrorKind {
  InvalidArgument,
  IndivisibleAxis,
  DegreeOverflow,
  DegreeDecrease,
  DegreeMismatch,
  Domain,
  DegenerateBox,
  OutOfRange,
  Unbounded,
  CapExceeded,
  Parse,
  Io,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace bpsolve
