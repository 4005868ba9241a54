#include "ncball/ncalg/rewrite.hpp"

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ncball/error.hpp"

namespace ncball::ncalg {
namespace {

struct Redex {
  std::size_t position;
  int rule;
  std::size_t length;
};

std::vector<Redex> all_redexes(const Word& w, const Presentation& pres) {
  std::vector<Redex> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (int r = pres.rule_for(w[i]); r >= 0) out.push_back({i, r, 1});
    if (i + 1 < w.size())
      if (int r = pres.rule_for(w[i], w[i + 1]); r >= 0) out.push_back({i, r, 2});
  }
  return out;
}

std::optional<Redex> leftmost_redex(const Word& w, const Presentation& pres) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (int r = pres.rule_for(w[i]); r >= 0) return Redex{i, r, 1};
    if (i + 1 < w.size())
      if (int r = pres.rule_for(w[i], w[i + 1]); r >= 0) return Redex{i, r, 2};
  }
  return std::nullopt;
}

using Key = std::pair<Rank, Word>;

struct HighestFirst {
  bool operator()(const Key& a, const Key& b) const { return a > b; }
};

}  // namespace

bool is_normal(const Word& word, const Presentation& pres) {
  return !leftmost_redex(word, pres).has_value();
}

Polynomial normal_form(const Polynomial& p, const Presentation& pres,
                       const ReductionOptions& options) {
  std::map<Key, Scalar, HighestFirst> pending;
  for (const auto& [word, c] : p.terms()) {
    for (const auto& g : word)
      if (!pres.contains(g))
        throw Error(ErrorKind::unknown_generator,
                    g.to_string() + " is not a generator of " + pres.name());
    pending.emplace(Key{pres.termination_rank(word), word}, c);
  }

  std::mt19937_64 rng(options.seed);
  std::size_t steps = 0;
  Polynomial result;

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& word = node.key().second;
    const Scalar& coeff = node.mapped();

    std::optional<Redex> redex;
    if (options.strategy == Strategy::leftmost_innermost) {
      redex = leftmost_redex(word, pres);
    } else {
      auto candidates = all_redexes(word, pres);
      if (!candidates.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        redex = candidates[pick(rng)];
      }
    }
    if (!redex) {
      result.add_term(word, coeff);
      continue;
    }
    if (++steps > options.step_budget)
      throw Error(ErrorKind::reduction_budget_exceeded,
                  "step budget exhausted while reducing '" + to_string(word) + "'");

    const RewriteRule& rule = pres.rules()[static_cast<std::size_t>(redex->rule)];
    for (const auto& [rhs_word, rhs_coeff] : rule.rhs.terms()) {
      Word next;
      next.reserve(word.size() - redex->length + rhs_word.size());
      next.insert(next.end(), word.begin(), word.begin() + static_cast<long>(redex->position));
      next.insert(next.end(), rhs_word.begin(), rhs_word.end());
      next.insert(next.end(), word.begin() + static_cast<long>(redex->position + redex->length),
                  word.end());
      Scalar c = coeff * rhs_coeff;
      Key key{pres.termination_rank(next), std::move(next)};
      auto [it, inserted] = pending.try_emplace(std::move(key), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return result;
}

}  // namespace ncball::ncalg
