#include "ncball/ncalg/word.hpp"

#include <algorithm>

namespace ncball::ncalg {

std::string Generator::to_string() const {
  std::string out(1, letter);
  out += std::to_string(index);
  if (starred) out += '\'';
  return out;
}

Word adjoint(const Word& word) {
  Word out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(it->adjoint());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string to_string(const Word& word) {
  std::string out;
  for (const auto& g : word) {
    if (!out.empty()) out += ' ';
    out += g.to_string();
  }
  return out;
}

}  // namespace ncball::ncalg
