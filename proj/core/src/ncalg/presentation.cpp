#include "ncball/ncalg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ncball/error.hpp"
#include "ncball/ncalg/rewrite.hpp"

namespace ncball::ncalg {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::ball_even: return "ball-even";
    case Family::ball_odd: return "ball-odd";
    case Family::boundary_even: return "boundary-even";
    case Family::boundary_odd: return "boundary-odd";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  std::string key;
  for (char c : text)
    if (std::isalnum(static_cast<unsigned char>(c)))
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (key == "balleven") return Family::ball_even;
  if (key == "ballodd") return Family::ball_odd;
  if (key == "boundaryeven") return Family::boundary_even;
  if (key == "boundaryodd") return Family::boundary_odd;
  return std::nullopt;
}

char generator_letter(Family family) {
  switch (family) {
    case Family::ball_even: return 'z';
    case Family::boundary_even: return 'w';
    case Family::ball_odd: return 'x';
    case Family::boundary_odd: return 't';
  }
  return '?';
}

bool is_boundary(Family family) {
  return family == Family::boundary_even || family == Family::boundary_odd;
}

bool is_odd(Family family) { return family == Family::ball_odd || family == Family::boundary_odd; }

Presentation::Presentation(Family family, int n)
    : family_(family), n_(n), letter_(generator_letter(family)) {}

std::string Presentation::name() const {
  static constexpr std::string_view names[] = {"BallEven", "BallOdd", "BoundaryEven",
                                               "BoundaryOdd"};
  return std::string(names[static_cast<int>(family_)]) + "(" + std::to_string(n_) + ")";
}

bool Presentation::contains(const Generator& g) const {
  return g.letter == letter_ && g.index >= 1 && g.index <= n_;
}

bool Presentation::is_self_adjoint(int index) const { return is_odd(family_) && index == 1; }

std::vector<Generator> Presentation::generators() const {
  std::vector<Generator> out;
  for (int i = 1; i <= n_; ++i) out.push_back({letter_, i, false});
  return out;
}

int Presentation::rule_for(const Generator& a) const {
  if (!contains(a)) return -1;
  return single_table_[static_cast<std::size_t>(code(a))];
}

int Presentation::rule_for(const Generator& a, const Generator& b) const {
  if (!contains(a) || !contains(b)) return -1;
  return pair_table_[static_cast<std::size_t>(code(a) * 2 * n_ + code(b))];
}

Rank Presentation::termination_rank(const Word& word) const {
  Rank r{static_cast<int>(word.size()), 0, 0, 0, 0};
  const bool sphere = is_boundary(family_);
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p].starred) ++r[1];
    if (sphere && word[p].index == n_) ++r[2];
    for (std::size_t k = p + 1; k < word.size(); ++k) {
      if (word[p].starred && !word[k].starred) ++r[3];
      if (word[p].starred != word[k].starred) continue;
      const bool descending_block = word[p].starred && sphere;
      if (descending_block ? word[p].index < word[k].index : word[p].index > word[k].index) ++r[4];
    }
  }
  return r;
}

void Presentation::add_rule(Word lhs, Polynomial rhs, std::string origin) {
  for (const auto& existing : rules_)
    if (existing.lhs == lhs) return;  // same orientation reached from two relations
  rules_.push_back({std::move(lhs), std::move(rhs), std::move(origin)});
}

void Presentation::index_rules() {
  const auto codes = static_cast<std::size_t>(2 * n_);
  single_table_.assign(codes, -1);
  pair_table_.assign(codes * codes, -1);
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const Word& lhs = rules_[r].lhs;
    if (lhs.size() == 1) {
      single_table_[static_cast<std::size_t>(code(lhs[0]))] = static_cast<int>(r);
    } else if (lhs.size() == 2) {
      pair_table_[static_cast<std::size_t>(code(lhs[0])) * codes +
                  static_cast<std::size_t>(code(lhs[1]))] = static_cast<int>(r);
    } else {
      throw std::logic_error("rule left side longer than two letters");
    }
  }
}

namespace {

Relation make_relation(const Polynomial& lhs, const Polynomial& rhs) {
  return {lhs.to_string() + " = " + rhs.to_string(), lhs - rhs};
}

}  // namespace

Presentation build_presentation(Family family, int n) {
  if (n < 1) throw_invalid("presentation size n must be at least 1, got " + std::to_string(n));

  Presentation pres(family, n);
  const char L = pres.letter_;
  const bool odd = is_odd(family);
  const bool boundary = is_boundary(family);
  const Scalar s = Scalar::symbol();
  const Scalar s_inv = Scalar::monomial(-1);
  const Scalar q = Scalar::q();
  const Scalar one_minus_q = Scalar(1L) - q;

  auto gen = [&](int i, bool star = false) { return Generator{L, i, star}; };
  auto g = [&](int i, bool star = false) { return Polynomial(gen(i, star)); };
  // The self-adjoint generator never appears starred on a right side.
  auto rg = [&](int i, bool star = false) {
    return Polynomial(gen(i, star && !pres.is_self_adjoint(i)));
  };
  auto gg_star = [&](int j) { return rg(j) * rg(j, true); };
  auto tail_sum = [&](int from) {
    Polynomial sum;
    for (int j = from; j <= n; ++j) sum += gg_star(j);
    return sum;
  };

  // ---- relations as usually written -------------------------------------
  if (odd) pres.relations_.push_back(make_relation(g(1, true), g(1)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pres.relations_.push_back(make_relation(g(i) * g(j), s * (g(j) * g(i))));
  for (int i = odd ? 2 : 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      pres.relations_.push_back(make_relation(g(i) * g(j, true), s_inv * (g(j, true) * g(i))));
  for (int i = odd ? 2 : 1; i <= n; ++i)
    pres.relations_.push_back(make_relation(g(i, true) * g(i) - q * (g(i) * g(i, true)),
                                            one_minus_q * (Polynomial(1L) - tail_sum(i + 1))));
  if (boundary) {
    Polynomial radius = odd ? rg(1) * rg(1) + tail_sum(2) : tail_sum(1);
    pres.relations_.push_back(make_relation(radius, Polynomial(1L)));
  }

  // ---- oriented rules that only permute or drop stars --------------------
  for (int i = 1; i <= n; ++i)
    if (pres.is_self_adjoint(i)) pres.add_rule({gen(i, true)}, g(i), "self-adjointness");
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      pres.add_rule({gen(j), gen(i)}, s_inv * (g(i) * g(j)), "commutation");
      // Adjoint of the commutation relation: g_j* g_i* = s g_i* g_j*.
      // Boundary families keep the starred block descending, so g_n g_n*
      // stays adjacent in normal words and the sphere rule always applies.
      if (pres.is_self_adjoint(i))
        pres.add_rule({gen(j, true), gen(i)}, s * (g(i) * g(j, true)), "adjoint commutation");
      else if (boundary)
        pres.add_rule({gen(i, true), gen(j, true)}, s_inv * (g(j, true) * g(i, true)),
                      "adjoint commutation");
      else
        pres.add_rule({gen(j, true), gen(i, true)}, s * (g(i, true) * g(j, true)),
                      "adjoint commutation");
      pres.add_rule({gen(j, true), gen(i)}, s * (g(i) * g(j, true)), "star migration");
      if (!pres.is_self_adjoint(i))
        pres.add_rule({gen(i, true), gen(j)}, s * (g(j) * g(i, true)), "adjoint star migration");
    }
  }
  if (boundary) {
    if (odd && n == 1) {
      pres.add_rule({gen(1), gen(1)}, Polynomial(1L), "sphere");
    } else {
      Polynomial rest = odd ? rg(1) * rg(1) : Polynomial();
      for (int j = odd ? 2 : 1; j < n; ++j) rest += gg_star(j);
      pres.add_rule({gen(n), gen(n, true)}, Polynomial(1L) - rest, "sphere");
    }
  }
  pres.index_rules();

  // ---- g_i* g_i rules, right sides reduced by the rules above -------------
  std::vector<RewriteRule> quadratic;
  for (int i = odd ? 2 : 1; i <= n; ++i) {
    Polynomial rhs = q * gg_star(i) + one_minus_q * (Polynomial(1L) - tail_sum(i + 1));
    quadratic.push_back({{gen(i, true), gen(i)}, normal_form(rhs, pres), "q-commutation"});
  }
  for (auto& rule : quadratic) pres.add_rule(rule.lhs, rule.rhs, rule.origin);
  pres.index_rules();

  for (const auto& rule : pres.rules_) {
    const Rank lhs_rank = pres.termination_rank(rule.lhs);
    for (const auto& [word, c] : rule.rhs.terms())
      if (!(pres.termination_rank(word) < lhs_rank))
        throw std::logic_error("rule " + to_string(rule.lhs) + " -> " + rule.rhs.to_string() +
                               " does not decrease the termination rank");
  }

  // ---- derived identities --------------------------------------------------
  auto identity = [&](std::string name, Polynomial expr) {
    pres.derived_.push_back({std::move(name), std::move(expr)});
  };
  switch (family) {
    case Family::ball_even:
      identity("normality defect: z1' z1 - z1 z1' = (1 - q)(1 - sum z_j z_j')",
               g(1, true) * g(1) - g(1) * g(1, true) - one_minus_q * (Polynomial(1L) - tail_sum(1)));
      break;
    case Family::ball_odd:
      for (int j = 2; j <= n; ++j) {
        Relation r = make_relation(g(1) * g(j, true), s_inv * (g(j, true) * g(1)));
        identity(r.name, r.expr);
      }
      break;
    case Family::boundary_even: {
      Relation normal = make_relation(g(1, true) * g(1), g(1) * g(1, true));
      identity("w1 normal: " + normal.name, normal.expr);
      for (int i = 2; i <= n; ++i) {
        Polynomial lower;
        for (int j = 1; j < i; ++j) lower += gg_star(j);
        Relation r = make_relation(g(i, true) * g(i) - g(i) * g(i, true), one_minus_q * lower);
        identity(r.name, r.expr);
      }
      break;
    }
    case Family::boundary_odd: {
      for (int i = 2; i <= n; ++i) {
        Polynomial lower = rg(1) * rg(1);
        for (int j = 2; j < i; ++j) lower += gg_star(j);
        Relation r = make_relation(g(i, true) * g(i) - g(i) * g(i, true), one_minus_q * lower);
        identity(r.name, r.expr);
      }
      if (n == 2) {
        Relation a = make_relation(g(1) * g(2), s * (g(2) * g(1)));
        Relation b = make_relation(g(2, true) * g(2) - q * (g(2) * g(2, true)), Polynomial(one_minus_q));
        Relation c = make_relation(g(1) * g(1) + g(2) * g(2, true), Polynomial(1L));
        identity("equatorial Podles: " + a.name, a.expr);
        identity("equatorial Podles: " + b.name, b.expr);
        identity("equatorial Podles: " + c.name, c.expr);
      }
      break;
    }
  }
  return pres;
}

}  // namespace ncball::ncalg
