#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gdf {

enum class ErrorKind {
  Input,          // malformed arguments or preconditions on values
  Parse,          // text formats
  Infeasible,     // Dominate instance with k(v) > u(N[v])
  NotNormalized,  // operation requires normalize() first
  Structural,     // ordering does not certify the required structure
  Unsupported,    // labelled form outside the defined range
  Budget,         // exhaustive search refused
  NoOrder,        // no strong elimination ordering available
};

std::string_view to_string(ErrorKind kind);

/// Base of every exception thrown by the library. `kind()` is stable and
/// machine-readable; `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InfeasibleError : public Error {
 public:
  InfeasibleError(std::size_t vertex, const std::string& message)
      : Error(ErrorKind::Infeasible, message), vertex_(vertex) {}

  std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

}  // namespace gdf
