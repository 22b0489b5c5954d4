#include "specjoin/constructions.hpp"

#include <utility>

namespace specjoin {

namespace {

// Copies S(g1) into the first n1+m1 vertices of out; the subdivision vertex
// for the k-th canonical edge is n1+k.
void emit_subdivision(const Graph& g1, Graph& out) {
  const int n1 = g1.vertex_count();
  const auto& edges = g1.edges();
  for (size_t k = 0; k < edges.size(); ++k) {
    const int s = n1 + static_cast<int>(k);
    out.add_edge(edges[k].first, s);
    out.add_edge(edges[k].second, s);
  }
}

}  // namespace

LabeledGraph subdivision(const Graph& g) {
  Graph out(g.vertex_count() + g.edge_count());
  emit_subdivision(g, out);
  return LabeledGraph{std::move(out),
                      PartLabels{g.vertex_count(), g.edge_count(), 0}};
}

Graph line_graph(const Graph& g) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  Graph out(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const auto& ea = edges[a];
      const auto& eb = edges[b];
      if (ea.first == eb.first || ea.first == eb.second ||
          ea.second == eb.first || ea.second == eb.second)
        out.add_edge(a, b);
    }
  return out;
}

LabeledGraph sv_join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  const int m1 = g1.edge_count();
  const int n2 = g2.vertex_count();
  Graph out(n1 + m1 + n2);
  emit_subdivision(g1, out);
  for (const auto& e : g2.edges())
    out.add_edge(n1 + m1 + e.first, n1 + m1 + e.second);
  for (int u = 0; u < n1; ++u)
    for (int w = 0; w < n2; ++w) out.add_edge(u, n1 + m1 + w);
  return LabeledGraph{std::move(out), PartLabels{n1, m1, n2}};
}

LabeledGraph se_join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  const int m1 = g1.edge_count();
  const int n2 = g2.vertex_count();
  Graph out(n1 + m1 + n2);
  emit_subdivision(g1, out);
  for (const auto& e : g2.edges())
    out.add_edge(n1 + m1 + e.first, n1 + m1 + e.second);
  for (int s = 0; s < m1; ++s)
    for (int w = 0; w < n2; ++w) out.add_edge(n1 + s, n1 + m1 + w);
  return LabeledGraph{std::move(out), PartLabels{n1, m1, n2}};
}

}  // namespace specjoin
