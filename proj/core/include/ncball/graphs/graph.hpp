#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncball::graphs {

struct Edge {
  int source = 0;  // 0-based vertex
  int range = 0;
  std::string label;
};

/// Finite directed graph with multi-edges and loops.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges);
  /// Unnamed vertices v1..vN.
  DirectedGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool is_sink(int v) const;
  std::vector<int> sinks() const;
  /// Non-sinks.
  std::vector<int> regular_vertices() const;
  /// Edge indices with the given source.
  std::vector<int> edges_from(int v) const;
  /// Number of edges v -> w.
  int adjacency(int v, int w) const;
  bool reaches(int from, int to) const;

  /// Same graph with vertices renumbered: new index of old vertex v is perm[v].
  DirectedGraph permuted(const std::vector<int>& perm) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

enum class GraphFamily {
  /// n+1 vertices, edges e_{i,j} for 1 <= i <= n, i <= j <= n+1.
  M,
  /// M(n) without v_{n+1} and the edges into it.
  L_odd,
  /// L_odd(n) with the loop vertex v_n replaced by two sinks, each receiving
  /// a copy of every edge e_{i,n}, i < n.
  L_even,
};

std::string_view to_string(GraphFamily family);
std::optional<GraphFamily> parse_graph_family(std::string_view text);

/// Throws Error(invalid_parameter) when n < 1.
DirectedGraph build_graph(GraphFamily family, int n);

/// Edge-list text: "N;" followed by "src>dst" items (1-based), separated by
/// newlines or semicolons. Throws ParseError on malformed input.
DirectedGraph parse_graph(std::string_view text);
std::string format_graph(const DirectedGraph& graph);

}  // namespace ncball::graphs
