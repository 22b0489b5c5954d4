#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "specjoin/error.hpp"
#include "specjoin/exact.hpp"
#include "specjoin/generators.hpp"
#include "specjoin/graph.hpp"
#include "specjoin/isomorphism.hpp"
#include "specjoin/switching.hpp"

using namespace specjoin;

namespace {

// Every even-size subset of Q4 satisfying the switching condition, counted by
// brute force for the landscape freeze below.
int count_condition_valid(const Graph& g, int size) {
  const int n = g.vertex_count();
  std::vector<int> pick(size);
  int count = 0;
  // Lexicographic k-subset enumeration.
  for (int i = 0; i < size; ++i) pick[i] = i;
  if (size > n) return 0;
  while (true) {
    if (gm_condition_holds(g, SwitchingSet{pick})) ++count;
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

}  // namespace

TEST_CASE("switching condition basics") {
  const Graph q4 = hypercube(4);
  CHECK(gm_condition_holds(q4, SwitchingSet{{0, 3, 5, 9}}));
  CHECK(!gm_condition_holds(q4, SwitchingSet{{0, 1, 2, 3}}));
  CHECK(!gm_condition_holds(q4, SwitchingSet{{0, 1, 2}}));  // odd
  // S = empty and S = V are identity switches, hence trivially valid.
  CHECK(gm_condition_holds(q4, SwitchingSet{{}}));
}

TEST_CASE("gm_switch identity cases and validation") {
  const Graph q4 = hypercube(4);
  std::vector<int> all(16);
  for (int i = 0; i < 16; ++i) all[i] = i;
  CHECK(gm_switch(q4, SwitchingSet{{}}) == q4);
  CHECK(gm_switch(q4, SwitchingSet{all}) == q4);

  CHECK_THROWS_AS(gm_switch(q4, SwitchingSet{{0, 1, 2}}), Error);
  CHECK_THROWS_AS(gm_switch(q4, SwitchingSet{{0, 16}}), Error);
  CHECK_THROWS_AS(gm_switch(q4, SwitchingSet{{3, 3}}), Error);
  try {
    gm_switch(q4, SwitchingSet{{0, 1, 2, 4}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Switching);
    CHECK(std::string(e.what()).find("vertex") != std::string::npos);
  }
}

TEST_CASE("gm_switch complements exactly the half-joined vertices") {
  const Graph q4 = hypercube(4);
  const SwitchingSet s{{0, 3, 5, 9}};
  const Graph h = gm_switch(q4, s);
  CHECK(h.vertex_count() == 16);
  CHECK(h.degree_sequence() == q4.degree_sequence());
  CHECK(!(h == q4));
  for (int v = 0; v < 16; ++v) {
    if (std::find(s.vertices.begin(), s.vertices.end(), v) != s.vertices.end())
      continue;
    int before = 0, after = 0;
    for (int w : s.vertices) {
      before += q4.has_edge(v, w) ? 1 : 0;
      after += h.has_edge(v, w) ? 1 : 0;
    }
    if (before == 2) {
      // Half-joined: adjacency towards S complemented.
      for (int w : s.vertices) CHECK(h.has_edge(v, w) == !q4.has_edge(v, w));
    } else {
      CHECK(after == before);
    }
  }
  // Edges inside S and outside S are untouched.
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v) {
      const bool us =
          std::find(s.vertices.begin(), s.vertices.end(), u) != s.vertices.end();
      const bool vs =
          std::find(s.vertices.begin(), s.vertices.end(), v) != s.vertices.end();
      if (us == vs) CHECK(h.has_edge(u, v) == q4.has_edge(u, v));
    }
}

TEST_CASE("switching preserves the adjacency characteristic polynomial") {
  const Graph q4 = hypercube(4);
  const Graph h = gm_switch(q4, SwitchingSet{{0, 3, 5, 9}});
  CHECK(adjacency_charpoly(q4) == adjacency_charpoly(h));
}

TEST_CASE("Q4 switching landscape") {
  const Graph q4 = hypercube(4);

  // Condition-valid subset counts per size, frozen against an independent
  // brute-force enumeration.
  CHECK(count_condition_valid(q4, 2) == 120);
  CHECK(count_condition_valid(q4, 4) == 28);
  CHECK(count_condition_valid(q4, 6) == 8);
  CHECK(count_condition_valid(q4, 8) == 2);

  // Searches keep only sets whose switch is non-isomorphic to Q4.
  CHECK(gm_search(q4, 2).empty());
  const auto size4 = gm_search(q4, 4);
  REQUIRE(size4.size() == 16);
  CHECK(size4.front().vertices == std::vector<int>{0, 3, 5, 9});
  CHECK(gm_search(q4, 6).empty());
  CHECK(gm_search(q4, 8).empty());

  // Every reported set is condition-valid and genuinely non-isomorphic.
  for (const auto& s : size4) {
    CHECK(gm_condition_holds(q4, s));
    CHECK(!is_isomorphic(q4, gm_switch(q4, s)));
  }

  CHECK(gm_search(q4, 4, 3).size() == 3);  // max_results cap
  CHECK(gm_search(q4, 0).empty());
  CHECK_THROWS_AS(gm_search(q4, 3), Error);
  CHECK_THROWS_AS(gm_search(q4, -2), Error);
  CHECK_THROWS_AS(gm_search(q4, 18), Error);
}

TEST_CASE("small graphs admit no non-trivial switch") {
  CHECK(gm_search(cycle(4), 2).empty());
  CHECK(gm_search(complete(4), 2).empty());
  CHECK(gm_search(petersen(), 2).empty());
}

TEST_CASE("isomorphism basics") {
  CHECK(is_isomorphic(empty_graph(0), empty_graph(0)));
  CHECK(is_isomorphic(cycle(5), cycle(5)));
  CHECK(!is_isomorphic(cycle(5), cycle(6)));
  CHECK(!is_isomorphic(cycle(6), complete_bipartite(3, 3)));
  // Same degree sequence, different structure: C6 vs. two triangles.
  const Graph two_triangles =
      Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!is_isomorphic(cycle(6), two_triangles));
  // K33 vs. the triangular prism: both 3-regular on 6 vertices.
  const Graph prism = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(!is_isomorphic(complete_bipartite(3, 3), prism));
  // Cospectral strongly regular pair is still distinguished.
  CHECK(!is_isomorphic(shrikhande(), rook4x4()));
}

TEST_CASE("find_isomorphism returns a certified mapping") {
  const Graph a = petersen();
  std::mt19937 rng(20240229u);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> perm(a.vertex_count());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph b(a.vertex_count());
    for (const auto& e : a.edges()) b.add_edge(perm[e.first], perm[e.second]);
    const auto mapping = find_isomorphism(a, b);
    REQUIRE(mapping.has_value());
    for (int u = 0; u < a.vertex_count(); ++u)
      for (int v = u + 1; v < a.vertex_count(); ++v)
        CHECK(a.has_edge(u, v) == b.has_edge((*mapping)[u], (*mapping)[v]));
  }
  CHECK(!find_isomorphism(shrikhande(), rook4x4()).has_value());
}
