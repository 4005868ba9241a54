#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ncball::ncalg {

/// One of z, w, x, t, e, f with a 1- or 0-based index and an adjoint flag.
struct Generator {
  char letter = 'z';
  int index = 1;
  bool starred = false;

  Generator adjoint() const { return {letter, index, !starred}; }
  std::string to_string() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

Word adjoint(const Word& word);
Word concat(const Word& a, const Word& b);
/// Space-separated tokens ("z1 z2'"); empty word renders as "".
std::string to_string(const Word& word);

/// Graded order used for storage and printing: longer words first, then
/// lexicographic on (letter, index, starred).
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

}  // namespace ncball::ncalg
