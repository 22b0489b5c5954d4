#include "specjoin/switching.hpp"

#include <algorithm>
#include <string>

#include "specjoin/error.hpp"
#include "specjoin/isomorphism.hpp"

namespace specjoin {

namespace {

void check_vertices(const Graph& g, const std::vector<int>& s,
                    std::vector<bool>& in_set) {
  in_set.assign(g.vertex_count(), false);
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw Error(ErrorKind::Switching,
                  "switching set vertex " + std::to_string(v) +
                      " out of range");
    if (in_set[v])
      throw Error(ErrorKind::Switching,
                  "switching set repeats vertex " + std::to_string(v));
    in_set[v] = true;
  }
}

// Validates the switching condition for a proper non-empty subset; on failure
// either returns false or throws ErrorKind::Switching naming a vertex.
bool check_condition(const Graph& g, const std::vector<int>& s,
                     const std::vector<bool>& in_set, bool throwing) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(s.size());
  auto fail = [&](const std::string& msg) -> bool {
    if (throwing) throw Error(ErrorKind::Switching, msg);
    return false;
  };
  if (k % 2 != 0)
    return fail("switching set size must be even, got " + std::to_string(k));
  int inner_degree = -1;
  for (int v : s) {
    int d = 0;
    for (int w : s) d += g.has_edge(v, w) ? 1 : 0;
    if (inner_degree == -1) inner_degree = d;
    if (d != inner_degree)
      return fail(
          "subgraph induced on the switching set is not regular: vertex " +
          std::to_string(v) + " has " + std::to_string(d) +
          " inside neighbours, expected " + std::to_string(inner_degree));
  }
  for (int v = 0; v < n; ++v) {
    if (in_set[v]) continue;
    int d = 0;
    for (int w : s) d += g.has_edge(v, w) ? 1 : 0;
    if (d != 0 && d != k / 2 && d != k)
      return fail("vertex " + std::to_string(v) + " has " + std::to_string(d) +
                  " neighbours in the switching set; expected 0, " +
                  std::to_string(k / 2) + ", or " + std::to_string(k));
  }
  return true;
}

Graph apply_switch(const Graph& g, const std::vector<int>& s,
                   const std::vector<bool>& in_set) {
  const int n = g.vertex_count();
  const int half = static_cast<int>(s.size()) / 2;
  Graph out(n);
  for (const auto& e : g.edges())
    if (in_set[e.first] == in_set[e.second]) out.add_edge(e.first, e.second);
  for (int v = 0; v < n; ++v) {
    if (in_set[v]) continue;
    int d = 0;
    for (int w : s) d += g.has_edge(v, w) ? 1 : 0;
    if (d == half) {
      for (int w : s)
        if (!g.has_edge(v, w)) out.add_edge(v, w);
    } else {
      for (int w : s)
        if (g.has_edge(v, w)) out.add_edge(v, w);
    }
  }
  return out;
}

}  // namespace

bool gm_condition_holds(const Graph& g, const SwitchingSet& s) {
  std::vector<bool> in_set;
  check_vertices(g, s.vertices, in_set);
  const size_t k = s.vertices.size();
  if (k == 0 || k == static_cast<size_t>(g.vertex_count())) return true;
  return check_condition(g, s.vertices, in_set, /*throwing=*/false);
}

Graph gm_switch(const Graph& g, const SwitchingSet& s) {
  std::vector<bool> in_set;
  check_vertices(g, s.vertices, in_set);
  const size_t k = s.vertices.size();
  // S empty or S = V: no outside vertex exists, the switch is the identity.
  if (k == 0 || k == static_cast<size_t>(g.vertex_count())) return g;
  check_condition(g, s.vertices, in_set, /*throwing=*/true);
  return apply_switch(g, s.vertices, in_set);
}

std::vector<SwitchingSet> gm_search(const Graph& g, int size,
                                    int max_results) {
  const int n = g.vertex_count();
  if (size < 0 || size % 2 != 0)
    throw Error(ErrorKind::Argument,
                "switching set size must be even and non-negative, got " +
                    std::to_string(size));
  if (size > n)
    throw Error(ErrorKind::Argument,
                "switching set size " + std::to_string(size) +
                    " exceeds vertex count " + std::to_string(n));
  std::vector<SwitchingSet> found;
  if (size == 0) return found;  // identity switch is always isomorphic
  std::vector<int> subset(size);
  std::vector<bool> in_set(n, false);
  for (int i = 0; i < size; ++i) subset[i] = i;
  while (true) {
    std::fill(in_set.begin(), in_set.end(), false);
    for (int v : subset) in_set[v] = true;
    if (size == n || check_condition(g, subset, in_set, /*throwing=*/false)) {
      Graph switched = apply_switch(g, subset, in_set);
      if (!is_isomorphic(g, switched)) {
        found.push_back(SwitchingSet{subset});
        if (max_results > 0 && static_cast<int>(found.size()) >= max_results)
          return found;
      }
    }
    // Advance to the next size-subset in lexicographic order.
    int i = size - 1;
    while (i >= 0 && subset[i] == n - size + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
  }
  return found;
}

}  // namespace specjoin
