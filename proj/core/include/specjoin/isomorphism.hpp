#pragma once

#include <optional>
#include <vector>

#include "specjoin/graph.hpp"

namespace specjoin {

// Exact isomorphism test by colour-refinement-guided backtracking. Returns a
// mapping a -> b (image[v] is the vertex of b matched to v of a) when the
// graphs are isomorphic, std::nullopt otherwise.
std::optional<std::vector<int>> find_isomorphism(const Graph& a,
                                                 const Graph& b);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace specjoin
