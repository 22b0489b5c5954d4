#pragma once

#include <gmpxx.h>

#include <vector>

#include "specjoin/graph.hpp"
#include "specjoin/matrix.hpp"

namespace specjoin {

// Integer polynomial; coeffs[k] multiplies x^k and the highest-index
// coefficient is nonzero unless the polynomial is zero.
struct IntPolynomial {
  std::vector<mpz_class> coeffs;

  void normalize();
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  mpz_class eval(const mpz_class& x) const;
  bool operator==(const IntPolynomial& other) const = default;
};

// p(x) = det(x·D(g) − A(g)) together with det(D); roots of p are 1 − λ over
// the normalized Laplacian eigenvalues λ, so equality of p/detD between two
// graphs certifies normalized-Laplacian cospectrality exactly.
struct ExactCharPoly {
  IntPolynomial poly;
  mpz_class det_d;
};

// Exact determinant by Bareiss fraction-free elimination.
mpz_class bareiss_det(IntMatrix m);

// Exact pencil characteristic polynomial via bareiss_det at x = 0..n and
// Lagrange interpolation over rationals. Requires no isolated vertices
// (domain error) and order ≤ max_order (size error).
ExactCharPoly pencil_charpoly(const Graph& g, int max_order = 64);

// Exact adjacency characteristic polynomial det(xI − A), same evaluation
// scheme; monic, defined for every graph of order ≤ max_order.
IntPolynomial adjacency_charpoly(const Graph& g, int max_order = 64);

// Coefficients of p(x)/detD as exact rationals, ascending by degree. Two
// graphs are normalized-Laplacian cospectral iff these lists are equal.
std::vector<mpq_class> monic_rational_form(const ExactCharPoly& p);

// Exact value of Π_{i≥2} (a + b·μ_i) over the normalized Laplacian spectrum
// of g with the single μ₁ = 0 factor dropped (one factor per extra component
// stays in, matching the ascending-index convention). b = 0 short-circuits to
// a^{n−1} and is the only form allowed for edgeless graphs.
mpq_class exact_eigen_product(const Graph& g, const mpz_class& a,
                              const mpz_class& b);

}  // namespace specjoin
