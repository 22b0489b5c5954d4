#include "specjoin/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace specjoin {

namespace {

// One round of colour refinement applied jointly to both graphs so the colour
// ids stay comparable. Returns false if the colour histograms diverge (which
// proves non-isomorphism).
bool refine_colours(const Graph& a, const Graph& b, std::vector<int>& ca,
                    std::vector<int>& cb, int& colour_count) {
  using Signature = std::pair<int, std::vector<int>>;
  const int n = a.vertex_count();
  std::map<Signature, int> ids;
  std::vector<int> na(n), nb(n);
  auto signature = [](const Graph& g, const std::vector<int>& c, int v) {
    std::vector<int> around;
    around.reserve(g.degree(v));
    for (int w : g.neighbors(v)) around.push_back(c[w]);
    std::sort(around.begin(), around.end());
    return Signature(c[v], std::move(around));
  };
  std::map<int, int> hist_a, hist_b;
  for (int v = 0; v < n; ++v) {
    auto [it, _] = ids.emplace(signature(a, ca, v), static_cast<int>(ids.size()));
    na[v] = it->second;
    ++hist_a[na[v]];
  }
  for (int v = 0; v < n; ++v) {
    auto it = ids.find(signature(b, cb, v));
    if (it == ids.end()) return false;
    nb[v] = it->second;
    ++hist_b[nb[v]];
  }
  if (hist_a != hist_b) return false;
  ca = std::move(na);
  cb = std::move(nb);
  colour_count = static_cast<int>(ids.size());
  return true;
}

struct Backtracker {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  int n;
  std::vector<int> image;     // a -> b, -1 when unmatched
  std::vector<int> preimage;  // b -> a, -1 when unmatched
  std::vector<int> matched;   // vertices of a in assignment order

  Backtracker(const Graph& a_, const Graph& b_, const std::vector<int>& ca_,
              const std::vector<int>& cb_)
      : a(a_), b(b_), ca(ca_), cb(cb_), n(a_.vertex_count()) {
    image.assign(n, -1);
    preimage.assign(n, -1);
    matched.reserve(n);
  }

  bool consistent(int v, int u) const {
    for (int w : matched)
      if (a.has_edge(v, w) != b.has_edge(u, image[w])) return false;
    return true;
  }

  bool extend() {
    if (static_cast<int>(matched.size()) == n) return true;
    // Most-constrained unmatched vertex: fewest colour- and adjacency-
    // consistent images under the current partial map. A vertex with no
    // candidate image fails the whole branch at once, which keeps
    // independent blocks of a join from being assigned unconstrained.
    int pick = -1;
    std::vector<int> best, cands;
    for (int v = 0; v < n; ++v) {
      if (image[v] != -1) continue;
      cands.clear();
      for (int u = 0; u < n; ++u)
        if (preimage[u] == -1 && cb[u] == ca[v] && consistent(v, u))
          cands.push_back(u);
      if (cands.empty()) return false;
      if (pick == -1 || cands.size() < best.size()) {
        pick = v;
        best = cands;
        if (best.size() == 1) break;
      }
    }
    for (int u : best) {
      image[pick] = u;
      preimage[u] = pick;
      matched.push_back(pick);
      if (extend()) return true;
      matched.pop_back();
      image[pick] = -1;
      preimage[u] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a,
                                                 const Graph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return std::nullopt;
  if (a.degree_sequence() != b.degree_sequence()) return std::nullopt;
  const int n = a.vertex_count();
  if (n == 0) return std::vector<int>{};

  std::vector<int> ca(n), cb(n);
  for (int v = 0; v < n; ++v) {
    ca[v] = a.degree(v);
    cb[v] = b.degree(v);
  }
  int colours = 0;
  for (int round = 0; round < n; ++round) {
    const int before = colours;
    if (!refine_colours(a, b, ca, cb, colours)) return std::nullopt;
    if (colours == before) break;
  }

  Backtracker bt(a, b, ca, cb);
  if (!bt.extend()) return std::nullopt;
  return bt.image;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace specjoin
