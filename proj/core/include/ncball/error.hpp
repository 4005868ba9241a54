#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncball {

enum class ErrorKind {
  invalid_parameter,
  reduction_budget_exceeded,
  identity_failed,
  parse_error,
  unknown_generator,
  not_invertible,
  not_positive,
  unsupported_graph,
  unsupported_presentation,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind is the
/// machine-readable part; what() carries a human-readable explanation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void throw_invalid(const std::string& message);

}  // namespace ncball
