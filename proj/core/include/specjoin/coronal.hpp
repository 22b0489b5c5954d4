#pragma once

#include <utility>

#include "specjoin/matrix.hpp"

namespace specjoin {

// Generalized M-coronal Γ_M(x, α): sum of the entries of
// (xI − M∘B)⁻¹ with B = αJ + (1−α)I, i.e. the diagonal of M is kept and the
// off-diagonal entries are scaled by α. Computed by one linear solve against
// the all-ones vector; a singular system raises ErrorKind::Singular.
double coronal(const SymMatrix& m, double x, double alpha);

// Closed form for the normalized Laplacian of any regular graph of order n:
// Γ(x, α) = n / (x + α − 1). The pole raises ErrorKind::Singular.
double coronal_regular_closed(int n, double x, double alpha);

// Both sides of the rank-one determinant identity
//   det(xI − A − αJ) = (1 − α·Γ_A(x, 1)) · det(xI − A),
// returned as (lhs, rhs). Requires xI − A invertible.
std::pair<double, double> det_rank_one_identity(const SymMatrix& a,
                                                double alpha, double x);

}  // namespace specjoin
