#pragma once

#include <vector>

#include "specjoin/graph.hpp"

namespace specjoin {

// Checks the (single-set) Godsil–McKay switching condition for s in g:
//  - |S| is even and S is non-empty,
//  - the subgraph induced on S is regular,
//  - every vertex outside S has exactly 0, |S|/2, or |S| neighbours in S.
bool gm_condition_holds(const Graph& g, const SwitchingSet& s);

// Applies Godsil–McKay switching: every vertex outside S with exactly |S|/2
// neighbours in S swaps its adjacencies towards S. Throws
// ErrorKind::Switching (naming an offending vertex) if the condition fails.
Graph gm_switch(const Graph& g, const SwitchingSet& s);

// Enumerates vertex subsets of the given even size in lexicographic order and
// returns those that satisfy the switching condition AND whose switch is not
// isomorphic to g. max_results == 0 means unbounded.
std::vector<SwitchingSet> gm_search(const Graph& g, int size,
                                    int max_results = 0);

}  // namespace specjoin
