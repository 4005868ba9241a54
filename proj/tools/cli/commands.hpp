#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ncball::cli {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

enum class Format { json, text };

/// Every flag of every verb; each verb reads the ones it needs.
struct Options {
  std::string verb;
  std::string family = "ball-even";
  int n = 2;
  double q = 0.5;
  int cutoff = 8;
  int margin = 2;
  double tol = 1e-10;
  int thetas = 8;
  int max_len = 6;
  /// Suspension levels; 0 means the cutoff.
  int levels = 0;
  std::string expr;
  std::string graph = "M";
  std::string edges;
  std::string beta = "mirror";
  std::vector<double> phases_deg;
  Format format = Format::json;
};

struct Outcome {
  Json json;
  std::string text;
  /// 0 all checks passed, 1 some check failed.
  int exit_code = 0;
};

/// Dispatches a validated command. Throws ncball::Error for invalid
/// parameters; numeric failures become failing entries.
Outcome run(const Options& options);

/// Parses argv, runs, prints the report to out and diagnostics to err.
/// Returns 0, 1, or 2 for usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncball::cli
