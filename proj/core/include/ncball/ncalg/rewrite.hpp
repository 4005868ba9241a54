#pragma once

#include <cstddef>
#include <cstdint>

#include "ncball/ncalg/polynomial.hpp"
#include "ncball/ncalg/presentation.hpp"

namespace ncball::ncalg {

enum class Strategy {
  /// Always rewrite the leftmost redex (length-one rules win ties).
  leftmost_innermost,
  /// Rewrite a uniformly chosen redex; used to fuzz confluence.
  random_redex,
};

struct ReductionOptions {
  Strategy strategy = Strategy::leftmost_innermost;
  std::uint64_t seed = 0;
  std::size_t step_budget = 20'000'000;
};

/// Reduces p modulo the presentation's rules. Words are processed from the
/// highest termination rank down, so each word is rewritten at most once.
/// Throws Error(unknown_generator) when p uses a generator outside pres and
/// Error(reduction_budget_exceeded) when the step budget runs out.
Polynomial normal_form(const Polynomial& p, const Presentation& pres,
                       const ReductionOptions& options = {});

/// True when no rule left side occurs as a subword.
bool is_normal(const Word& word, const Presentation& pres);

}  // namespace ncball::ncalg
