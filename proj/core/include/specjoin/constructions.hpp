#pragma once

#include "specjoin/graph.hpp"

namespace specjoin {

struct LabeledGraph {
  Graph graph;
  PartLabels labels;
};

// Subdivision graph S(G): one new vertex per edge, each original edge replaced
// by a path of length two. Vertices 0..n-1 are the originals, vertex n+k is
// the subdivision vertex of the k-th edge in canonical (sorted) edge order.
// Labels report (n, m, 0).
LabeledGraph subdivision(const Graph& g);

// Line graph l(G): vertex k per canonical edge, adjacency iff the edges share
// an endpoint.
Graph line_graph(const Graph& g);

// Subdivision-vertex join G1 ∨̇ G2: S(G1) ∪ G2 plus all edges between V(G1)
// and V(G2). Vertex blocks: [V(G1) | I(G1) | V(G2)].
LabeledGraph sv_join(const Graph& g1, const Graph& g2);

// Subdivision-edge join G1 ⊻ G2: S(G1) ∪ G2 plus all edges between I(G1)
// (the subdivision vertices) and V(G2). Same vertex blocks as sv_join.
LabeledGraph se_join(const Graph& g1, const Graph& g2);

}  // namespace specjoin
