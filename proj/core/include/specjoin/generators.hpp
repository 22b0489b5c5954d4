#pragma once

#include <string_view>
#include <vector>

#include "specjoin/graph.hpp"

namespace specjoin {

enum class Family {
  Cycle,
  Complete,
  CompleteBipartite,
  Hypercube,
  Petersen,
  Empty,
  Shrikhande,
  Rook4x4,
};

Family family_from_string(std::string_view name);

// Builds the named graph with canonical vertex numbering. Parameter counts:
// cycle(n>=3), complete(n>=1), complete_bipartite(a>=1, b>=1),
// hypercube(d>=1), empty(n>=0); petersen/shrikhande/rook4x4 take none.
// Invalid parameters raise ErrorKind::Argument.
Graph generate(Family family, const std::vector<int>& params = {});

Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph hypercube(int d);  // binary labels, edge iff labels differ in one bit
Graph petersen();
Graph empty_graph(int n);
Graph shrikhande();  // Cayley graph on Z4 x Z4, connection set {±(1,0), ±(0,1), ±(1,1)}
Graph rook4x4();     // K4 □ K4

}  // namespace specjoin
