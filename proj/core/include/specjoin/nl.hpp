#pragma once

#include <vector>

#include "specjoin/graph.hpp"
#include "specjoin/matrix.hpp"
#include "specjoin/spectrum.hpp"

namespace specjoin {

SymMatrix adjacency_matrix(const Graph& g);

// 𝓛(G) = I − D^{−1/2} A D^{−1/2}: unit diagonal, −1/√(dᵢdⱼ) on edges.
// Isolated vertices raise ErrorKind::Domain.
SymMatrix normalized_laplacian(const Graph& g);

// Direct normalized Laplacian spectrum via the Jacobi eigensolver.
Spectrum nl_spectrum_direct(const Graph& g);

// Spectrum used when a graph feeds the closed forms: edgeless graphs take the
// all-zeros convention (each K₁ component contributes 0); anything else goes
// through nl_spectrum_direct.
Spectrum nl_spectrum_or_zeros(const Graph& g);

// Lemma-style closed adjacency spectrum of the line graph of an r-regular
// graph: {2(r−1) − r·μᵢ} ∪ {−2 repeated m−n times}, ascending. Requires
// r ≥ 2 (domain error) and |mu| = n (argument error).
std::vector<double> line_graph_adjacency_spectrum(const RegularProfile& p,
                                                  const Spectrum& mu);

}  // namespace specjoin
