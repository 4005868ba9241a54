#include "ncball/reps/catalog.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

#include "ncball/error.hpp"

namespace ncball::reps {

using fock::OperatorMatrix;
using fock::QValue;
using fock::TruncatedSpace;

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::rho: return "rho";
    case Kind::sigma: return "sigma";
    case Kind::eta: return "eta";
    case Kind::sigma_s: return "sigma_s";
  }
  return "?";
}

Representation::Representation(std::string label, char letter, int first_index, double q,
                               TruncatedSpace space, std::vector<OperatorMatrix> matrices)
    : label_(std::move(label)),
      letter_(letter),
      first_(first_index),
      q_(q),
      space_(std::move(space)),
      matrices_(std::move(matrices)) {
  for (const auto& m : matrices_)
    if (!(m.space() == space_)) throw_invalid("representation matrices act on different spaces");
}

const OperatorMatrix& Representation::generator(int index) const {
  const int k = index - first_;
  if (k < 0 || k >= size())
    throw_invalid(fmt::format("{} has no generator {}{}", label_, letter_, index));
  return matrices_[static_cast<std::size_t>(k)];
}

fock::Assignment Representation::assignment() const {
  fock::Assignment a(space_, q_);
  for (int k = 0; k < size(); ++k) a.set(letter_, first_ + k, matrices_[static_cast<std::size_t>(k)]);
  return a;
}

Representation Representation::relabeled(char letter, std::string label) const {
  Representation r(std::move(label), letter, first_, q_, space_, matrices_);
  r.spec_ = spec_;
  return r;
}

std::vector<Complex> theta_grid(int count) {
  std::vector<Complex> out;
  for (int k = 0; k < count; ++k) out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / count));
  return out;
}

std::vector<double> default_s_grid() { return {-1.0, -0.5, 0.0, 0.5, 1.0}; }

namespace {

std::string theta_text(Complex theta) {
  const double deg = std::arg(theta) * 180.0 / std::numbers::pi;
  return fmt::format("{:.1f}deg", std::abs(deg) < 0.05 ? 0.0 : deg);
}

void require_theta(Complex theta) {
  if (std::abs(std::abs(theta) - 1.0) > 1e-12)
    throw_invalid(fmt::format("theta must have modulus one, got |theta| = {}", std::abs(theta)));
}

void require_common(const RepSpec& spec, Family family) {
  if (spec.family != family) throw_invalid("representation spec has the wrong family");
  if (spec.n < 1) throw_invalid("n must be at least 1");
  if (spec.cutoff < 1) throw_invalid("cutoff must be at least 1");
  QValue check(spec.q);
  (void)check;
}

// Generators g_i for i in `zero` are 0, g_{diag} = theta q^{|k|/2}, and the
// rest are shifts S_{i - offset}.
std::vector<OperatorMatrix> circle_family(const TruncatedSpace& space, QValue q, int count,
                                          int diag, Complex theta, int offset) {
  std::vector<OperatorMatrix> out;
  for (int i = 1; i <= count; ++i) {
    if (i < diag)
      out.push_back(OperatorMatrix::zero(space));
    else if (i == diag)
      out.push_back(theta * fock::q_diagonal_all(space, q));
    else
      out.push_back(fock::weighted_shift(i - offset, space, q));
  }
  return out;
}

}  // namespace

Representation irrep_ball_even(const RepSpec& spec) {
  require_common(spec, Family::ball_even);
  const int n = spec.n;
  const QValue q(spec.q);
  if (spec.kind == Kind::sigma) {
    TruncatedSpace space(n, spec.cutoff);
    std::vector<OperatorMatrix> z;
    for (int i = 1; i <= n; ++i) z.push_back(fock::weighted_shift(i, space, q));
    Representation r("sigma", 'z', 1, spec.q, space, std::move(z));
    r.set_spec(spec);
    return r;
  }
  if (spec.kind != Kind::rho) throw_invalid("even balls have rho_j^theta and sigma only");
  if (spec.j < 1 || spec.j > n) throw_invalid(fmt::format("rho_j needs 1 <= j <= {}", n));
  require_theta(spec.theta);
  const int j = spec.j;
  TruncatedSpace space(j - 1, spec.cutoff);
  // z_i = 0 (i <= n-j), theta q^{|k|/2} (i = n-j+1), S_{i+j-n-1} above.
  auto z = circle_family(space, q, n, n - j + 1, spec.theta, n + 1 - j);
  Representation r(fmt::format("rho_{}[theta={}]", j, theta_text(spec.theta)), 'z', 1, spec.q,
                   space, std::move(z));
  r.set_spec(spec);
  return r;
}

Representation irrep_ball_odd(const RepSpec& spec) {
  require_common(spec, Family::ball_odd);
  const int m = spec.n - 1;  // shifts act on H_m
  const QValue q(spec.q);
  if (spec.kind == Kind::sigma_s) {
    if (!(spec.s_param >= -1.0 && spec.s_param <= 1.0))
      throw_invalid(fmt::format("sigma_s needs s in [-1, 1], got {}", spec.s_param));
    TruncatedSpace space(m, spec.cutoff);
    std::vector<OperatorMatrix> x;
    x.push_back(Complex(spec.s_param) * fock::q_diagonal_all(space, q));
    for (int i = 2; i <= spec.n; ++i) x.push_back(fock::weighted_shift(i - 1, space, q));
    Representation r(fmt::format("sigma_s[s={}]", spec.s_param), 'x', 1, spec.q, space,
                     std::move(x));
    r.set_spec(spec);
    return r;
  }
  if (spec.kind != Kind::eta) throw_invalid("odd balls have eta_j^theta and sigma_s only");
  if (spec.j < 1 || spec.j > m) throw_invalid(fmt::format("eta_j needs 1 <= j <= {}", m));
  require_theta(spec.theta);
  const int j = spec.j;
  TruncatedSpace space(j - 1, spec.cutoff);
  // x_i = 0 (i <= m-j+1), theta q^{|k|/2} (i = m-j+2), S_{i+j-m-2} above.
  auto x = circle_family(space, q, spec.n, m - j + 2, spec.theta, m + 2 - j);
  Representation r(fmt::format("eta_{}[theta={}]", j, theta_text(spec.theta)), 'x', 1, spec.q,
                   space, std::move(x));
  r.set_spec(spec);
  return r;
}

Representation irrep(const RepSpec& spec) {
  switch (spec.family) {
    case Family::ball_even: return irrep_ball_even(spec);
    case Family::ball_odd: return irrep_ball_odd(spec);
    default: throw_invalid("catalog representations are defined for ball families");
  }
}

std::vector<Representation> catalog(Family family, int n, double q, int cutoff,
                                    const std::vector<Complex>& thetas,
                                    const std::vector<double>& s_values) {
  if (ncalg::is_boundary(family)) return boundary_descents(family, n, q, cutoff, thetas);
  std::vector<Representation> out;
  RepSpec spec{family, n, Kind::sigma, 0, {1.0, 0.0}, 0.0, q, cutoff};
  if (family == Family::ball_even) {
    for (int j = 1; j <= n; ++j)
      for (Complex theta : thetas) {
        spec.kind = Kind::rho;
        spec.j = j;
        spec.theta = theta;
        out.push_back(irrep_ball_even(spec));
      }
    spec.kind = Kind::sigma;
    spec.j = 0;
    spec.theta = 1.0;
    out.push_back(irrep_ball_even(spec));
  } else {
    for (int j = 1; j <= n - 1; ++j)
      for (Complex theta : thetas) {
        spec.kind = Kind::eta;
        spec.j = j;
        spec.theta = theta;
        out.push_back(irrep_ball_odd(spec));
      }
    spec.kind = Kind::sigma_s;
    spec.j = 0;
    spec.theta = 1.0;
    for (double s : s_values) {
      spec.s_param = s;
      out.push_back(irrep_ball_odd(spec));
    }
  }
  return out;
}

CatalogShape catalog_shape(Family family, int n) {
  switch (family) {
    case Family::ball_even: return {n, 1};
    case Family::ball_odd: return {n - 1, 1};
    case Family::boundary_even: return {n, 0};
    case Family::boundary_odd: return {n - 1, 2};
  }
  return {};
}

std::vector<Representation> boundary_descents(Family family, int n, double q, int cutoff,
                                              const std::vector<Complex>& thetas) {
  if (!ncalg::is_boundary(family)) throw_invalid("boundary_descents needs a boundary family");
  std::vector<Representation> out;
  if (family == Family::boundary_even) {
    for (auto& r : catalog(Family::ball_even, n, q, cutoff, thetas, {}))
      if (r.spec()->kind == Kind::rho) out.push_back(r.relabeled('w', r.label()));
  } else {
    for (auto& r : catalog(Family::ball_odd, n, q, cutoff, thetas, {-1.0, 1.0}))
      out.push_back(r.relabeled('t', r.label()));
  }
  for (auto& r : out) {
    RepSpec s = *r.spec();
    s.family = family;
    r.set_spec(s);
  }
  return out;
}

Representation direct_sum(const std::vector<Representation>& summands, std::string label) {
  if (summands.empty()) throw_invalid("direct_sum needs at least one summand");
  const Representation& first = summands.front();
  for (const auto& r : summands)
    if (r.letter() != first.letter() || r.first_index() != first.first_index() ||
        r.size() != first.size() || r.q() != first.q() || !(r.space() == first.space()))
      throw_invalid("direct_sum summands must share generators, q and space");
  if (label.empty()) {
    for (const auto& r : summands) label += (label.empty() ? "" : " + ") + r.label();
  }
  std::vector<OperatorMatrix> gens;
  for (int k = 0; k < first.size(); ++k) {
    std::vector<OperatorMatrix> blocks;
    for (const auto& r : summands) blocks.push_back(r.matrices()[static_cast<std::size_t>(k)]);
    gens.push_back(fock::block_diagonal(blocks));
  }
  return {label, first.letter(), first.first_index(), first.q(), gens.front().space(),
          std::move(gens)};
}

}  // namespace ncball::reps
