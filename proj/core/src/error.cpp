#include "ncball/error.hpp"

#include <fmt/format.h>

namespace ncball {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::reduction_budget_exceeded: return "reduction-budget-exceeded";
    case ErrorKind::identity_failed: return "identity-failed";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::unknown_generator: return "unknown-generator";
    case ErrorKind::not_invertible: return "not-invertible";
    case ErrorKind::not_positive: return "not-positive";
    case ErrorKind::unsupported_graph: return "unsupported-graph";
    case ErrorKind::unsupported_presentation: return "unsupported-presentation";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorKind::parse_error, fmt::format("{} at position {}", message, position)),
      position_(position) {}

void throw_invalid(const std::string& message) {
  throw Error(ErrorKind::invalid_parameter, message);
}

}  // namespace ncball
