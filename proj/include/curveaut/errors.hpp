#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curveaut {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured size or work budget was exceeded. The computation is
/// incomplete, not wrong; callers report such results as unresolved.
struct CapExceeded : Error {
  using Error::Error;
};

struct GeneratorsDoNotGenerate : Error {
  using Error::Error;
};

struct UnsupportedParams : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

struct OrderMismatch : Error {
  using Error::Error;
};

struct AmbiguousMatch : Error {
  using Error::Error;
};

/// Raised when a computed restriction violates a proven dimension statement.
/// Always a bug signal.
struct InternalContradiction : Error {
  using Error::Error;
};

struct ShapeNotCritical : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

} // namespace curveaut
