#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "specjoin/graph.hpp"

namespace specjoin {

// Exact normalized-Laplacian cospectrality certificate: both monic rational
// characteristic polynomial coefficient lists (ascending by degree), their
// equality, and optionally the isomorphism verdict.
struct CospectralCertificate {
  std::vector<mpq_class> poly_a;
  std::vector<mpq_class> poly_b;
  bool equal = false;
  std::optional<bool> isomorphic;
};

// Compares monic_rational_form(pencil_charpoly) of both graphs exactly.
// Guards: no isolated vertices (domain error), order ≤ max_order (size
// error). check_isomorphism additionally runs the exact isomorphism test.
CospectralCertificate exact_cospectral(const Graph& g, const Graph& h,
                                       bool check_isomorphism = false,
                                       int max_order = 64);

enum class JoinKind { SV, SE };

struct CospectralJoinPair {
  Graph a;
  Graph b;
  CospectralCertificate certificate;
};

// Theorem-style factory: given two certified regular cospectral pairs
// (g1, g2) and (h1, h2), builds join(g1, h1) and join(g2, h2) of the given
// kind and certifies the results. Precondition failures (non-regular or
// non-cospectral inputs) raise errors naming the offending pair.
CospectralJoinPair build_cospectral_join_pair(const Graph& g1, const Graph& g2,
                                              const Graph& h1, const Graph& h2,
                                              JoinKind kind,
                                              bool check_isomorphism = false);

std::string certificate_json(const CospectralCertificate& c);

}  // namespace specjoin
