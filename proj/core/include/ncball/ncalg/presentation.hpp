#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncball/ncalg/polynomial.hpp"

namespace ncball::ncalg {

enum class Family { ball_even, ball_odd, boundary_even, boundary_odd };

std::string_view to_string(Family family);
/// Accepts "ball-even", "ball_even", "BallEven" and friends.
std::optional<Family> parse_family(std::string_view text);
/// z for even balls, w for their boundaries, x for odd balls, t for theirs.
char generator_letter(Family family);
bool is_boundary(Family family);
bool is_odd(Family family);

struct RewriteRule {
  Word lhs;
  Polynomial rhs;
  std::string origin;
};

/// A relation of the presentation, stored as the polynomial that vanishes.
struct Relation {
  std::string name;
  Polynomial expr;
};

/// Lexicographic termination rank; see termination_rank().
using Rank = std::array<int, 5>;

/// Generators and oriented rewrite rules for one of the four relation sets.
///
/// Orientation: stars migrate right, indices ascend within the unstarred
/// block and within the starred block of the balls (descend in the starred
/// block of the boundaries), the self-adjoint generator of the odd families loses
/// its star, and the sphere relation eliminates the monomial built from the
/// highest-index generator (g_n g_n^*, or t_1^2 when n = 1).
class Presentation {
 public:
  Family family() const noexcept { return family_; }
  int n() const noexcept { return n_; }
  char letter() const noexcept { return letter_; }
  std::string name() const;

  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  /// Defining relations, in the order they are usually written down.
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  /// Consequences worth checking separately (normality of w_1, ...).
  const std::vector<Relation>& derived_identities() const noexcept { return derived_; }

  bool contains(const Generator& g) const;
  bool is_self_adjoint(int index) const;
  /// Unstarred generators g_1 .. g_n.
  std::vector<Generator> generators() const;

  /// Index into rules() for a length-one / length-two left side, or -1.
  int rule_for(const Generator& a) const;
  int rule_for(const Generator& a, const Generator& b) const;

  /// (degree, starred letters, highest-index letters for sphere families,
  /// starred-before-unstarred pairs, pairs out of block order within a star
  /// class).
  /// Every rule strictly decreases it, and it is compatible with
  /// multiplication on both sides, so reduction terminates.
  Rank termination_rank(const Word& word) const;

  friend Presentation build_presentation(Family family, int n);

 private:
  Presentation(Family family, int n);
  int code(const Generator& g) const { return 2 * (g.index - 1) + (g.starred ? 1 : 0); }
  void add_rule(Word lhs, Polynomial rhs, std::string origin);
  void index_rules();

  Family family_;
  int n_;
  char letter_;
  std::vector<RewriteRule> rules_;
  std::vector<Relation> relations_;
  std::vector<Relation> derived_;
  std::vector<int> single_table_;
  std::vector<int> pair_table_;
};

/// Builds the presentation for the given family; n >= 1.
Presentation build_presentation(Family family, int n);

}  // namespace ncball::ncalg
