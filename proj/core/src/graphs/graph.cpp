#include "ncball/graphs/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "ncball/error.hpp"

namespace ncball::graphs {

namespace {

std::vector<std::string> default_names(int count) {
  std::vector<std::string> out;
  for (int v = 1; v <= count; ++v) out.push_back("v" + std::to_string(v));
  return out;
}

}  // namespace

DirectedGraph::DirectedGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : names_(std::move(vertex_names)), edges_(std::move(edges)) {
  const int n = vertex_count();
  for (auto& e : edges_) {
    if (e.source < 0 || e.source >= n || e.range < 0 || e.range >= n)
      throw_invalid("edge endpoint outside the vertex range");
    if (e.label.empty()) e.label = names_[static_cast<std::size_t>(e.source)] + ">" +
                                   names_[static_cast<std::size_t>(e.range)];
  }
}

DirectedGraph::DirectedGraph(int vertex_count, std::vector<Edge> edges)
    : DirectedGraph(default_names(vertex_count), std::move(edges)) {}

bool DirectedGraph::is_sink(int v) const {
  return std::none_of(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.source == v; });
}

std::vector<int> DirectedGraph::sinks() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (is_sink(v)) out.push_back(v);
  return out;
}

std::vector<int> DirectedGraph::regular_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (!is_sink(v)) out.push_back(v);
  return out;
}

std::vector<int> DirectedGraph::edges_from(int v) const {
  std::vector<int> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].source == v) out.push_back(static_cast<int>(e));
  return out;
}

int DirectedGraph::adjacency(int v, int w) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.source == v && e.range == w;
  }));
}

bool DirectedGraph::reaches(int from, int to) const {
  std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (const auto& e : edges_)
      if (e.source == v && !seen[static_cast<std::size_t>(e.range)]) {
        seen[static_cast<std::size_t>(e.range)] = 1;
        stack.push_back(e.range);
      }
  }
  return false;
}

DirectedGraph DirectedGraph::permuted(const std::vector<int>& perm) const {
  const auto n = static_cast<std::size_t>(vertex_count());
  if (perm.size() != n) throw_invalid("permutation has the wrong length");
  std::vector<std::string> names(n);
  for (std::size_t v = 0; v < n; ++v) names[static_cast<std::size_t>(perm[v])] = names_[v];
  std::vector<Edge> edges;
  for (const auto& e : edges_)
    edges.push_back({perm[static_cast<std::size_t>(e.source)], perm[static_cast<std::size_t>(e.range)], e.label});
  return {std::move(names), std::move(edges)};
}

std::string_view to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::M: return "M";
    case GraphFamily::L_odd: return "L-odd";
    case GraphFamily::L_even: return "L-even";
  }
  return "?";
}

std::optional<GraphFamily> parse_graph_family(std::string_view text) {
  std::string key;
  for (char c : text)
    if (std::isalnum(static_cast<unsigned char>(c)))
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (key == "m") return GraphFamily::M;
  if (key == "lodd") return GraphFamily::L_odd;
  if (key == "leven") return GraphFamily::L_even;
  return std::nullopt;
}

DirectedGraph build_graph(GraphFamily family, int n) {
  if (n < 1) throw_invalid("graph size n must be at least 1, got " + std::to_string(n));
  auto label = [](int i, int j) { return "e" + std::to_string(i) + "," + std::to_string(j); };
  std::vector<Edge> edges;
  switch (family) {
    case GraphFamily::M:
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n + 1; ++j) edges.push_back({i - 1, j - 1, label(i, j)});
      return {n + 1, std::move(edges)};
    case GraphFamily::L_odd:
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) edges.push_back({i - 1, j - 1, label(i, j)});
      return {n, std::move(edges)};
    case GraphFamily::L_even: {
      std::vector<std::string> names;
      for (int v = 1; v < n; ++v) names.push_back("v" + std::to_string(v));
      names.push_back("v" + std::to_string(n) + "a");
      names.push_back("v" + std::to_string(n) + "b");
      const int a = n - 1;
      const int b = n;
      for (int i = 1; i < n; ++i) {
        for (int j = i; j < n; ++j) edges.push_back({i - 1, j - 1, label(i, j)});
        edges.push_back({i - 1, a, label(i, n) + "a"});
        edges.push_back({i - 1, b, label(i, n) + "b"});
      }
      return {std::move(names), std::move(edges)};
    }
  }
  throw_invalid("unknown graph family");
}

DirectedGraph parse_graph(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> int {
    skip();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || value < 0) throw ParseError(pos, "expected a nonnegative integer");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  };
  const int n = number();
  expect(';');
  std::vector<Edge> edges;
  for (;;) {
    skip();
    while (pos < text.size() && text[pos] == ';') {
      ++pos;
      skip();
    }
    if (pos >= text.size()) break;
    const std::size_t at = pos;
    const int src = number();
    expect('>');
    const int dst = number();
    if (src < 1 || src > n || dst < 1 || dst > n) throw ParseError(at, "vertex out of range");
    edges.push_back({src - 1, dst - 1, {}});
  }
  return {n, std::move(edges)};
}

std::string format_graph(const DirectedGraph& graph) {
  std::string out = std::to_string(graph.vertex_count()) + ";\n";
  for (const auto& e : graph.edges())
    out += std::to_string(e.source + 1) + ">" + std::to_string(e.range + 1) + "\n";
  return out;
}

}  // namespace ncball::graphs
