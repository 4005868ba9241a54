#include "ncball/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace ncball {

void VerificationReport::add(std::string name, bool passed, double value, std::string note,
                             std::string detail) {
  entries_.push_back({std::move(name), passed, value, std::move(note), std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (const auto& e : other.entries_) {
    CheckEntry copy = e;
    if (!prefix.empty()) copy.name = prefix + copy.name;
    entries_.push_back(std::move(copy));
  }
}

std::size_t VerificationReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return e.passed; }));
}

std::size_t VerificationReport::failed_count() const { return entries_.size() - passed_count(); }

double VerificationReport::max_value() const {
  double best = 0.0;
  for (const auto& e : entries_)
    if (!std::isnan(e.value)) best = std::max(best, e.value);
  return best;
}

std::string VerificationReport::to_text() const {
  std::string out;
  if (!subject_.empty()) out += subject_ + "\n";
  for (const auto& e : entries_) {
    out += fmt::format("  [{}] {}", e.passed ? "pass" : "FAIL", e.name);
    if (!std::isnan(e.value)) out += fmt::format("  value={:.3e}", e.value);
    if (!e.note.empty()) out += "  (" + e.note + ")";
    if (!e.detail.empty()) out += "\n      " + e.detail;
    out += "\n";
  }
  out += fmt::format("  {} passed, {} failed\n", passed_count(), failed_count());
  return out;
}

}  // namespace ncball
