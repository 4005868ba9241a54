#include "ncball/graphs/ktheory.hpp"

namespace ncball::graphs {

GraphKTheory ktheory_graph(const DirectedGraph& graph) {
  const auto regular = graph.regular_vertices();
  const auto nv = static_cast<std::size_t>(graph.vertex_count());
  IntMatrix m(nv, regular.size());
  for (std::size_t c = 0; c < regular.size(); ++c)
    for (std::size_t w = 0; w < nv; ++w)
      m(w, c) = (static_cast<int>(w) == regular[c] ? 1 : 0) - graph.adjacency(regular[c], static_cast<int>(w));

  const SmithForm snf = smith_normal_form(m);
  GraphKTheory out;
  out.boundary = m;
  out.k0 = cokernel(snf);
  out.k1 = kernel(snf);

  // U maps Z^vertices / im M isomorphically onto Z^vertices / im D.
  const auto diag = snf.diagonal();
  for (std::size_t w = 0; w < nv; ++w) {
    std::vector<mpz_class> coords;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      if (diag[i] == 1) continue;
      mpz_class r = snf.u(i, w) % diag[i];
      if (r < 0) r += diag[i];
      coords.push_back(r);
    }
    for (std::size_t i = diag.size(); i < nv; ++i) coords.push_back(snf.u(i, w));
    out.vertex_classes.push_back(std::move(coords));
  }
  return out;
}

bool GraphKTheory::classes_generate() const {
  const std::size_t comps = k0.torsion.size() + static_cast<std::size_t>(k0.rank);
  if (comps == 0) return true;
  // Columns: vertex classes followed by the torsion relations t_i e_i.
  IntMatrix gens(comps, vertex_classes.size() + k0.torsion.size());
  for (std::size_t v = 0; v < vertex_classes.size(); ++v)
    for (std::size_t i = 0; i < comps; ++i) gens(i, v) = vertex_classes[v][i];
  for (std::size_t i = 0; i < k0.torsion.size(); ++i) gens(i, vertex_classes.size() + i) = k0.torsion[i];
  const auto d = smith_normal_form(gens).diagonal();
  if (d.size() != comps) return false;
  for (const auto& x : d)
    if (x != 1) return false;
  return true;
}

}  // namespace ncball::graphs
