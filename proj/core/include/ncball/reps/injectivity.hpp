#pragma once

#include <string>
#include <vector>

#include "ncball/reps/catalog.hpp"

namespace ncball::reps {

enum class Criterion {
  /// Even balls: injective iff g_1 is not normal.
  normality_defect,
  /// Odd-ball boundaries: injective iff the spectrum of t_1 has both signs.
  sign_spectrum,
  /// Even-ball boundaries: the spectrum of w_1 must contain the unit circle.
  /// At finite truncation this is replaced by a delta-cover of the circle by
  /// the eigenvalue phases.
  circle_cover,
};

std::string_view to_string(Criterion c);
/// The criterion matching a family; throws for ball-odd (none is defined).
Criterion criterion_for(Family family);

struct InjectivityOptions {
  double tol = 1e-10;
  int margin = 1;
  /// Largest allowed phase gap for circle_cover.
  double delta = 0.2;
};

struct InjectivityResult {
  bool injective = false;
  /// Defect norm, min(max eigenvalue, -min eigenvalue), or largest phase gap.
  double witness = 0.0;
  /// Extreme eigenvalues for sign_spectrum; empty otherwise.
  std::vector<double> extremes;
  std::string note;
};

InjectivityResult injectivity_check(const Representation& rep, Criterion criterion,
                                    const InjectivityOptions& options = {});

}  // namespace ncball::reps
