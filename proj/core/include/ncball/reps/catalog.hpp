#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ncball/fock/evaluate.hpp"
#include "ncball/fock/operator.hpp"
#include "ncball/ncalg/presentation.hpp"

namespace ncball::reps {

using ncalg::Family;
using fock::Complex;

/// rho_j^theta / sigma for even balls, eta_j^theta / sigma_s for odd balls.
enum class Kind { rho, sigma, eta, sigma_s };

std::string_view to_string(Kind kind);

struct RepSpec {
  Family family = Family::ball_even;
  int n = 1;
  Kind kind = Kind::sigma;
  /// Catalog index j of rho_j / eta_j (1-based); unused otherwise.
  int j = 0;
  Complex theta{1.0, 0.0};
  /// Interval parameter of sigma_s.
  double s_param = 0.0;
  double q = 0.5;
  int cutoff = 8;
};

/// Generator matrices g_{first}, g_{first+1}, ... on one shared space.
class Representation {
 public:
  Representation(std::string label, char letter, int first_index, double q,
                 fock::TruncatedSpace space, std::vector<fock::OperatorMatrix> matrices);

  const std::string& label() const noexcept { return label_; }
  char letter() const noexcept { return letter_; }
  int first_index() const noexcept { return first_; }
  double q() const noexcept { return q_; }
  const fock::TruncatedSpace& space() const noexcept { return space_; }
  int size() const noexcept { return static_cast<int>(matrices_.size()); }
  const std::vector<fock::OperatorMatrix>& matrices() const noexcept { return matrices_; }
  /// Matrix of the generator with the given index.
  const fock::OperatorMatrix& generator(int index) const;

  const std::optional<RepSpec>& spec() const noexcept { return spec_; }
  void set_spec(RepSpec spec) { spec_ = spec; }

  fock::Assignment assignment() const;
  /// Same matrices under another generator letter (ball -> boundary).
  Representation relabeled(char letter, std::string label) const;

 private:
  std::string label_;
  char letter_;
  int first_;
  double q_;
  fock::TruncatedSpace space_;
  std::vector<fock::OperatorMatrix> matrices_;
  std::optional<RepSpec> spec_;
};

/// theta_k = exp(2 pi i k / count), k = 0..count-1.
std::vector<Complex> theta_grid(int count = 8);
/// {-1, -0.5, 0, 0.5, 1}
std::vector<double> default_s_grid();

/// rho_j^theta (j = 1..n) or sigma of the even ball with n generators.
Representation irrep_ball_even(const RepSpec& spec);
/// eta_j^theta (j = 1..n-1) or sigma_s of the odd ball with n generators
/// x_1 .. x_n (x_1 self-adjoint).
Representation irrep_ball_odd(const RepSpec& spec);
/// Dispatches on spec.family (ball families only).
Representation irrep(const RepSpec& spec);

/// Every catalog member of a ball family over the theta and s grids, in a
/// fixed order: rho_1.., sigma (even) or eta_1.., sigma_s (odd).
std::vector<Representation> catalog(Family family, int n, double q, int cutoff,
                                    const std::vector<Complex>& thetas = theta_grid(),
                                    const std::vector<double>& s_values = default_s_grid());

/// Number of distinct catalog families: circle families and point/interval
/// families.
struct CatalogShape {
  int circle_families = 0;
  int other_families = 0;
};
CatalogShape catalog_shape(Family family, int n);

/// Catalog members that annihilate the boundary ideal, relabeled in the
/// boundary generators: rho_j^theta for boundary-even (letter w), eta_j^theta
/// and sigma_{+1}, sigma_{-1} for boundary-odd (letter t).
std::vector<Representation> boundary_descents(Family family, int n, double q, int cutoff,
                                              const std::vector<Complex>& thetas = theta_grid());

/// Direct sum on blocks(k) x H; all summands must share letter, generator
/// range, q and space.
Representation direct_sum(const std::vector<Representation>& summands, std::string label = {});

}  // namespace ncball::reps
