#pragma once

#include <gmpxx.h>

#include <string>

#include "specjoin/graph.hpp"
#include "specjoin/spectrum.hpp"

namespace specjoin {

// Exact spanning-tree count: bareiss_det of a principal (n−1)-minor of the
// integer combinatorial Laplacian D − A. 0 for disconnected graphs.
mpz_class spanning_trees_matrix_tree(const Graph& g);

// Spectral spanning-tree count t(G) = (1/2m)·Π dᵢ·Π_{j≥2} λⱼ over the direct
// normalized Laplacian spectrum. Disconnected input (λ₂ < 1e−9) raises
// ErrorKind::Domain.
double spanning_trees_spectral(const Graph& g);

// Closed-form spanning-tree counts for the joins of regular graphs
// (Theorem-style products), evaluated in extended floating precision and
// rounded to the nearest integer. The *_product variants expose the
// pre-rounding value; the *_exact variants evaluate the same product in exact
// rational arithmetic from the graphs themselves and are the authoritative
// integer answers.
mpz_class sv_join_trees_closed(const RegularProfile& p1, const Spectrum& mu,
                               const RegularProfile& p2, const Spectrum& nu);
mpz_class se_join_trees_closed(const RegularProfile& p1, const Spectrum& mu,
                               const RegularProfile& p2, const Spectrum& nu);
long double sv_join_trees_product(const RegularProfile& p1, const Spectrum& mu,
                                  const RegularProfile& p2,
                                  const Spectrum& nu);
long double se_join_trees_product(const RegularProfile& p1, const Spectrum& mu,
                                  const RegularProfile& p2,
                                  const Spectrum& nu);
mpz_class sv_join_trees_exact(const Graph& g1, const Graph& g2);
mpz_class se_join_trees_exact(const Graph& g1, const Graph& g2);

// Kf*(G) = 2m·Σ_{i≥2} 1/λᵢ over the direct spectrum; connected input only.
double degree_kirchhoff_spectral(const Graph& g);

// Kf*(G) = Σ_{i<j} dᵢdⱼ·r_{ij} with resistance distances obtained from the
// combinatorial Laplacian pseudoinverse (solving (L + J/n)X = I − J/n).
double degree_kirchhoff_resistance(const Graph& g);

// Closed-form degree-Kirchhoff indices of the joins of regular graphs.
double sv_join_kirchhoff_closed(const RegularProfile& p1, const Spectrum& mu,
                                const RegularProfile& p2, const Spectrum& nu);
double se_join_kirchhoff_closed(const RegularProfile& p1, const Spectrum& mu,
                                const RegularProfile& p2, const Spectrum& nu);

struct InvariantReport {
  std::string graph6;
  mpz_class spanning_trees;
  double kirchhoff = 0.0;
  std::string spanning_trees_method;
  std::string kirchhoff_method;
};

// Report for a connected graph: matrix-tree spanning trees, spectral Kf*.
// Disconnected input raises ErrorKind::Domain (Kf* undefined there).
InvariantReport invariant_report(const Graph& g);

std::string invariant_report_json(const InvariantReport& r);

}  // namespace specjoin
