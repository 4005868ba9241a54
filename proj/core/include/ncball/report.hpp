#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ncball {

struct CheckEntry {
  std::string name;
  bool passed = false;
  /// Residual, slack, defect norm or other measured quantity. NaN when the
  /// check is purely structural.
  double value = 0.0;
  /// Short provenance / context note ("interior margin 2", "surrogate", ...).
  std::string note;
  /// Optional payload such as a non-reduced polynomial.
  std::string detail;
};

/// Ordered list of named checks. Entry order is the order of insertion, which
/// every producer keeps deterministic.
class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const noexcept { return subject_; }
  const std::vector<CheckEntry>& entries() const noexcept { return entries_; }

  void add(CheckEntry entry) { entries_.push_back(std::move(entry)); }
  void add(std::string name, bool passed, double value, std::string note = {},
           std::string detail = {});
  /// Appends other's entries, prefixing each name with prefix.
  void append(const VerificationReport& other, const std::string& prefix = {});

  std::size_t passed_count() const;
  std::size_t failed_count() const;
  bool all_passed() const { return failed_count() == 0; }
  /// Largest value among entries (ignoring NaN); 0 when empty.
  double max_value() const;

  std::string to_text() const;

 private:
  std::string subject_;
  std::vector<CheckEntry> entries_;
};

}  // namespace ncball
