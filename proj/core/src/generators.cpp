#include "specjoin/generators.hpp"

#include <string>

#include "specjoin/error.hpp"

namespace specjoin {

namespace {

void require_params(Family family, const std::vector<int>& params, size_t want,
                    const char* name) {
  if (params.size() != want) {
    throw Error(ErrorKind::Argument,
                std::string(name) + " expects " + std::to_string(want) +
                    " parameter(s), got " + std::to_string(params.size()));
  }
  (void)family;
}

}  // namespace

Family family_from_string(std::string_view name) {
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "complete_bipartite") return Family::CompleteBipartite;
  if (name == "hypercube") return Family::Hypercube;
  if (name == "petersen") return Family::Petersen;
  if (name == "empty") return Family::Empty;
  if (name == "shrikhande") return Family::Shrikhande;
  if (name == "rook4x4") return Family::Rook4x4;
  throw Error(ErrorKind::Argument,
              "unknown graph family '" + std::string(name) + "'");
}

Graph generate(Family family, const std::vector<int>& params) {
  switch (family) {
    case Family::Cycle:
      require_params(family, params, 1, "cycle");
      return cycle(params[0]);
    case Family::Complete:
      require_params(family, params, 1, "complete");
      return complete(params[0]);
    case Family::CompleteBipartite:
      require_params(family, params, 2, "complete_bipartite");
      return complete_bipartite(params[0], params[1]);
    case Family::Hypercube:
      require_params(family, params, 1, "hypercube");
      return hypercube(params[0]);
    case Family::Petersen:
      require_params(family, params, 0, "petersen");
      return petersen();
    case Family::Empty:
      require_params(family, params, 1, "empty");
      return empty_graph(params[0]);
    case Family::Shrikhande:
      require_params(family, params, 0, "shrikhande");
      return shrikhande();
    case Family::Rook4x4:
      require_params(family, params, 0, "rook4x4");
      return rook4x4();
  }
  throw Error(ErrorKind::Argument, "unknown graph family");
}

Graph cycle(int n) {
  if (n < 3) {
    throw Error(ErrorKind::Argument, "cycle length must be >= 3, got " +
                                         std::to_string(n));
  }
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  if (n < 1) {
    throw Error(ErrorKind::Argument,
                "complete graph order must be >= 1, got " + std::to_string(n));
  }
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) {
    throw Error(ErrorKind::Argument,
                "complete bipartite sides must be >= 1, got " +
                    std::to_string(a) + " and " + std::to_string(b));
  }
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph hypercube(int d) {
  if (d < 1) {
    throw Error(ErrorKind::Argument,
                "hypercube dimension must be >= 1, got " + std::to_string(d));
  }
  if (d > 20) {
    throw Error(ErrorKind::Size,
                "hypercube dimension too large: " + std::to_string(d));
  }
  const int n = 1 << d;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b) {
      const int u = v ^ (1 << b);
      if (u > v) g.add_edge(v, u);
    }
  return g;
}

Graph petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

Graph empty_graph(int n) {
  if (n < 0) {
    throw Error(ErrorKind::Argument,
                "empty graph order must be >= 0, got " + std::to_string(n));
  }
  return Graph(n);
}

Graph shrikhande() {
  // Vertices are pairs (x, y) in Z4 x Z4, numbered 4*x + y; u ~ v iff their
  // difference lies in {±(1,0), ±(0,1), ±(1,1)}.
  Graph g(16);
  static const int diffs[][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (const auto& d : diffs) {
        const int u = 4 * x + y;
        const int v = 4 * ((x + d[0]) % 4) + (y + d[1]) % 4;
        if (v > u) g.add_edge(u, v);
      }
  return g;
}

Graph rook4x4() {
  // Cartesian product K4 □ K4: vertices (i, j), adjacent iff they share a row
  // or a column.
  Graph g(16);
  for (int i = 0; i < 16; ++i)
    for (int j = i + 1; j < 16; ++j)
      if (i / 4 == j / 4 || i % 4 == j % 4) g.add_edge(i, j);
  return g;
}

}  // namespace specjoin
