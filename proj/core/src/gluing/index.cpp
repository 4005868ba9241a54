#include "ncball/gluing/index.hpp"

#include <fmt/format.h>

#include <future>

#include "ncball/error.hpp"
#include "ncball/graphs/ck_family.hpp"

namespace ncball::gluing {

using graphs::ExactMatrix;

namespace {

long defect_rank(const ExactMatrix& defect, const std::string& what) {
  if (!(defect * defect == defect) || !(defect.adjoint() == defect))
    throw Error(ErrorKind::identity_failed, what + " is not a projection");
  const auto tr = defect.trace().constant_value();
  if (!tr || tr->get_den() != 1)
    throw Error(ErrorKind::identity_failed, what + " has a non-integral trace");
  return tr->get_num().get_si();
}

long fredholm_index(const ExactMatrix& u, const ExactMatrix& restrict_to, const std::string& tag) {
  const std::size_t dim = u.rows();
  const ExactMatrix one = ExactMatrix::identity(dim);
  const ExactMatrix ker = restrict_to * (one - u.adjoint() * u) * restrict_to;
  const ExactMatrix coker = restrict_to * (one - u * u.adjoint()) * restrict_to;
  return defect_rank(ker, "1 - U'U (" + tag + ")") - defect_rank(coker, "1 - UU' (" + tag + ")");
}

}  // namespace

IndexClass index_class(int n, const BetaSpec& beta, int max_length) {
  if (n < 1) throw_invalid("n must be at least 1");
  if (beta.parity != Parity::even_boundary) throw_invalid("the index map is computed for even boundaries");
  if (static_cast<int>(beta.phases.size()) != n)
    throw_invalid(fmt::format("beta needs {} phases, got {}", n, beta.phases.size()));

  const auto graph = graphs::build_graph(graphs::GraphFamily::M, n);
  const auto fam = graphs::path_ck_family(graph, max_length);
  const int v = n - 1;  // v_n, 0-based
  int loop = -1;
  for (int e : graph.edges_from(v))
    if (graph.edges()[static_cast<std::size_t>(e)].range == v) loop = e;
  if (loop < 0) throw std::logic_error("M(n) lost its loop at v_n");

  const std::size_t dim = fam.dimension();
  const ExactMatrix& s = fam.edge_isometries[static_cast<std::size_t>(loop)];
  const ExactMatrix rest = ExactMatrix::identity(dim) - fam.vertex_projections[static_cast<std::size_t>(v)];
  bool trivial = true;
  for (const Complex& l : beta.phases)
    if (std::abs(l - Complex(1.0)) > 1e-12) trivial = false;
  const Laurent lambda = trivial ? Laurent(1L) : Laurent::symbol();

  const ExactMatrix u1 = lambda * s + rest;
  const ExactMatrix u2 = (beta.conjugate_first ? s.adjoint() : s) + rest;
  const ExactMatrix restrict_to = ExactMatrix::selector(dim, fam.paths_up_to(max_length - 1));
  return {fredholm_index(u1, restrict_to, "first copy"), fredholm_index(u2, restrict_to, "second copy")};
}

DoubleKTheory ktheory_double(const IndexClass& idx) {
  const graphs::IntMatrix boundary{{idx.d1}, {idx.d2}};
  const auto snf = graphs::smith_normal_form(boundary);
  DoubleKTheory out;
  out.k1 = graphs::kernel(snf);
  out.k0 = graphs::cokernel(snf);
  out.k0.rank += 1;  // the free quotient generated by [1] splits off

  // [p_1] = c [p_2] in the cokernel iff (1, -c) lies in the image Z (d1, d2).
  auto multiple = [&](long a, long b) {
    if (idx.d1 == 0 && idx.d2 == 0) return false;
    // (a, b) = t (d1, d2) for an integer t
    const long d = idx.d1 != 0 ? idx.d1 : idx.d2;
    const long x = idx.d1 != 0 ? a : b;
    if (x % d != 0) return false;
    const long t = x / d;
    return a == t * idx.d1 && b == t * idx.d2;
  };
  out.relation = multiple(1, -1) ? "p1=p2" : multiple(1, 1) ? "p1=-p2" : "independent";
  return out;
}

MirrorDistinction distinguish_mirror(int n, int max_length) {
  MirrorDistinction out;
  out.n = n;
  auto mirror = std::async(std::launch::async, [&] { return index_class(n, BetaSpec::even(n, true), max_length); });
  out.identity_index = index_class(n, BetaSpec::even(n, false), max_length);
  out.mirror_index = mirror.get();
  out.identity = ktheory_double(out.identity_index);
  out.mirror = ktheory_double(out.mirror_index);
  const bool same_groups = out.identity.k0 == out.mirror.k0 && out.identity.k1 == out.mirror.k1;
  if (same_groups && out.identity.relation != out.mirror.relation)
    out.verdict = "distinguishable";
  else if (same_groups)
    out.verdict = "indistinguishable by ordered K0";
  else
    out.verdict = "distinguishable by K-groups";
  out.ideal_space_shape = fmt::format("two points and {} circle{}", n, n == 1 ? "" : "s");
  return out;
}

}  // namespace ncball::gluing
