#include "ncball/fock/evaluate.hpp"

#include <cmath>
#include <string>

#include "ncball/error.hpp"
#include "ncball/fock/numeric.hpp"

namespace ncball::fock {

Assignment::Assignment(TruncatedSpace space, double q) : space_(std::move(space)), q_(q) {
  QValue check(q);
  (void)check;
}

void Assignment::set(char letter, int index, OperatorMatrix m) {
  if (!(m.space() == space_))
    throw_invalid(std::string("matrix for ") + letter + std::to_string(index) +
                  " acts on " + m.space().to_string() + ", expected " + space_.to_string());
  OperatorMatrix adj = m.adjoint();
  matrices_.insert_or_assign({letter, index}, std::make_pair(std::move(m), std::move(adj)));
}

bool Assignment::has(char letter, int index) const { return matrices_.count({letter, index}) > 0; }

const OperatorMatrix& Assignment::get(const ncalg::Generator& g) const {
  auto it = matrices_.find({g.letter, g.index});
  if (it == matrices_.end())
    throw_invalid("no matrix assigned to " + ncalg::Generator{g.letter, g.index, false}.to_string());
  return g.starred ? it->second.second : it->second.first;
}

OperatorMatrix evaluate(const ncalg::Polynomial& p, const Assignment& a) {
  const double s = std::sqrt(a.q());
  OperatorMatrix total = OperatorMatrix::zero(a.space());
  for (const auto& [word, coefficient] : p.terms()) {
    const double c = coefficient.evaluate(s);
    if (word.empty()) {
      total += Complex(c) * OperatorMatrix::identity(a.space());
      continue;
    }
    OperatorMatrix product = a.get(word.front());
    for (std::size_t i = 1; i < word.size(); ++i) product = product * a.get(word[i]);
    total += Complex(c) * product;
  }
  return total;
}

double residual(const ncalg::Polynomial& p, const Assignment& a, int margin) {
  if (p.is_zero()) return 0.0;
  return compressed_norm(evaluate(p, a), InteriorProjector(a.space(), margin));
}

}  // namespace ncball::fock
