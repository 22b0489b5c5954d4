#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "specjoin/error.hpp"

namespace specjoin {

// Simple undirected graph on vertices 0..n-1. No self-loops, no parallel
// edges. Edges are kept sorted lexicographically on (min endpoint, max
// endpoint); this ordering is the canonical edge numbering used by the
// subdivision, line-graph and incidence constructions.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  void add_edge(int u, int v);  // idempotent; self-loops rejected
  bool has_edge(int u, int v) const;

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  // Canonical edge list: sorted pairs (u, v) with u < v.
  const std::vector<std::pair<int, int>>& edges() const;

  // Non-increasing degree multiset.
  std::vector<int> degree_sequence() const;

  bool is_connected() const;  // the empty graph counts as connected
  int min_degree() const;     // 0 for the empty graph

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;
  void sort_edges() const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;  // n rows of ceil(n/64) bit-words
  std::vector<int> degree_;
  mutable std::vector<std::pair<int, int>> edges_;
  mutable bool edges_sorted_ = true;
  int words_per_row_ = 0;
};

// (n, m, r) summary of a validated regular graph.
struct RegularProfile {
  int n = 0;
  int m = 0;
  int r = 0;
};

// Validates that every vertex of g has the same degree. The edgeless graph
// is 0-regular by convention. Throws ErrorKind::Regularity naming two
// vertices of differing degree, or ErrorKind::Domain for the empty graph.
RegularProfile regular_profile(const Graph& g);

enum class PartTag : std::uint8_t {
  OriginalOfG1,
  SubdivisionVertex,
  VertexOfG2,
};

// Block structure of a join (or subdivision) output: vertex indices
// [0, n1) are original G1 vertices, [n1, n1+m1) subdivision vertices,
// [n1+m1, n1+m1+n2) G2 vertices.
struct PartLabels {
  int n1 = 0;
  int m1 = 0;
  int n2 = 0;

  int size() const { return n1 + m1 + n2; }
  PartTag label(int v) const;
  std::vector<PartTag> to_vector() const;
};

// Candidate Godsil-McKay switching set; vertices sorted ascending.
struct SwitchingSet {
  std::vector<int> vertices;
};

}  // namespace specjoin
