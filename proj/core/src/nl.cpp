#include "specjoin/nl.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specjoin/error.hpp"
#include "specjoin/jacobi.hpp"

namespace specjoin {

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.vertex_count());
  for (const auto& e : g.edges()) a.set(e.first, e.second, 1.0);
  return a;
}

SymMatrix normalized_laplacian(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      throw Error(ErrorKind::Domain,
                  "normalized Laplacian undefined: vertex " +
                      std::to_string(v) + " is isolated");
  SymMatrix l(n);
  for (int v = 0; v < n; ++v) l.set(v, v, 1.0);
  for (const auto& e : g.edges())
    l.set(e.first, e.second,
          -1.0 / std::sqrt(static_cast<double>(g.degree(e.first)) *
                           static_cast<double>(g.degree(e.second))));
  return l;
}

Spectrum nl_spectrum_direct(const Graph& g) {
  return make_spectrum(jacobi_eigenvalues(normalized_laplacian(g)));
}

Spectrum nl_spectrum_or_zeros(const Graph& g) {
  if (g.edge_count() == 0)
    return make_spectrum(std::vector<double>(g.vertex_count(), 0.0));
  return nl_spectrum_direct(g);
}

std::vector<double> line_graph_adjacency_spectrum(const RegularProfile& p,
                                                  const Spectrum& mu) {
  if (p.r < 2)
    throw Error(ErrorKind::Domain,
                "line-graph spectrum closed form requires degree >= 2, got " +
                    std::to_string(p.r));
  if (mu.size() != p.n)
    throw Error(ErrorKind::Argument,
                "expected " + std::to_string(p.n) + " eigenvalues, got " +
                    std::to_string(mu.size()));
  std::vector<double> out;
  out.reserve(p.m);
  for (double value : mu.values) out.push_back(2.0 * (p.r - 1) - p.r * value);
  out.insert(out.end(), p.m - p.n, -2.0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace specjoin
