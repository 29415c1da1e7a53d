#pragma once

#include <stdexcept>
#include <string>

namespace cychom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value or matrix does not belong to the expected coefficient ring,
/// or an operation is not available over that ring.
class RingError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A degree lies outside a truncation window or a reliable range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed a configured size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  /// The same error located in a file.
  ParseError(const std::string& file, const ParseError& inner) : Error(file + ": " + inner.what()), line_(inner.line_) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An algebra presentation that is not associative or not unital.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

}  // namespace cychom
