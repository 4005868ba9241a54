#include "ncball/graphs/ck_family.hpp"

#include <map>

#include "ncball/error.hpp"

namespace ncball::graphs {

std::vector<std::size_t> CKFamily::paths_up_to(int length) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (static_cast<int>(basis[i].length()) <= length) out.push_back(i);
  return out;
}

CKFamily path_ck_family(const DirectedGraph& graph, int max_length) {
  if (max_length < 1) throw_invalid("max_length must be at least 1");
  const auto sinks = graph.sinks();
  if (sinks.size() != 1)
    throw Error(ErrorKind::unsupported_graph,
                "path representation needs exactly one sink, found " + std::to_string(sinks.size()));
  const int sink = sinks.front();
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (!graph.reaches(v, sink))
      throw Error(ErrorKind::unsupported_graph,
                  graph.vertex_names()[static_cast<std::size_t>(v)] + " does not reach the sink");

  CKFamily fam;
  fam.graph = graph;
  fam.max_length = max_length;
  fam.sink = sink;

  // Grow paths backwards from the sink, one length at a time.
  fam.basis.push_back({sink, {}});
  std::size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t end = fam.basis.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t e = 0; e < graph.edges().size(); ++e)
        if (graph.edges()[e].range == fam.basis[i].start) {
          Path p{graph.edges()[e].source, {static_cast<int>(e)}};
          p.edges.insert(p.edges.end(), fam.basis[i].edges.begin(), fam.basis[i].edges.end());
          fam.basis.push_back(std::move(p));
        }
    begin = end;
  }

  std::map<std::pair<int, std::vector<int>>, std::size_t> position;
  for (std::size_t i = 0; i < fam.basis.size(); ++i)
    position[{fam.basis[i].start, fam.basis[i].edges}] = i;

  const std::size_t dim = fam.basis.size();
  for (int v = 0; v < graph.vertex_count(); ++v) {
    ExactMatrix p(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      if (fam.basis[i].start == v) p.set(i, i, Laurent(1L));
    fam.vertex_projections.push_back(std::move(p));
  }
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    ExactMatrix s(dim, dim);
    const Edge& edge = graph.edges()[e];
    for (std::size_t i = 0; i < dim; ++i) {
      const Path& mu = fam.basis[i];
      if (mu.start != edge.range || static_cast<int>(mu.length()) >= max_length) continue;
      std::vector<int> longer{static_cast<int>(e)};
      longer.insert(longer.end(), mu.edges.begin(), mu.edges.end());
      s.set(position.at({edge.source, longer}), i, Laurent(1L));
    }
    fam.edge_isometries.push_back(std::move(s));
  }
  return fam;
}

VerificationReport verify_ck(const CKFamily& fam) {
  const std::size_t dim = fam.dimension();
  const ExactMatrix q = ExactMatrix::selector(dim, fam.paths_up_to(fam.max_length - 1));
  auto violations = [&](const ExactMatrix& m) { return static_cast<double>((q * m * q).nonzeros()); };
  const auto& g = fam.graph;
  const auto& names = g.vertex_names();
  VerificationReport report("Cuntz-Krieger relations, max length " + std::to_string(fam.max_length));
  const std::string note = "exact, paths of length <= " + std::to_string(fam.max_length - 1);

  for (int v = 0; v < g.vertex_count(); ++v) {
    const ExactMatrix& p = fam.vertex_projections[static_cast<std::size_t>(v)];
    const double bad = violations(p * p - p) + violations(p.adjoint() - p);
    report.add("P_" + names[static_cast<std::size_t>(v)] + " projection", bad == 0, bad, note);
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w = v + 1; w < g.vertex_count(); ++w) {
      const double bad = violations(fam.vertex_projections[static_cast<std::size_t>(v)] *
                                    fam.vertex_projections[static_cast<std::size_t>(w)]);
      report.add("P_" + names[static_cast<std::size_t>(v)] + " P_" + names[static_cast<std::size_t>(w)] + " = 0",
                 bad == 0, bad, note);
    }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const ExactMatrix& s = fam.edge_isometries[e];
    const double bad =
        violations(s.adjoint() * s - fam.vertex_projections[static_cast<std::size_t>(g.edges()[e].range)]);
    report.add("S_" + g.edges()[e].label + "' S_" + g.edges()[e].label + " = P_" +
                   names[static_cast<std::size_t>(g.edges()[e].range)],
               bad == 0, bad, note);
  }
  for (int v : g.regular_vertices()) {
    ExactMatrix sum(dim, dim);
    for (int e : g.edges_from(v)) {
      const ExactMatrix& s = fam.edge_isometries[static_cast<std::size_t>(e)];
      sum += s * s.adjoint();
    }
    const double bad = violations(fam.vertex_projections[static_cast<std::size_t>(v)] - sum);
    report.add("P_" + names[static_cast<std::size_t>(v)] + " = sum S_e S_e'", bad == 0, bad, note);
  }
  return report;
}

}  // namespace ncball::graphs
