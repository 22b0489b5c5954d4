#pragma once

#include <vector>

#include "specjoin/matrix.hpp"

namespace specjoin {

// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi sweeps.
// Convergence: off-diagonal Frobenius norm ≤ 1e−13 · order · max|entry|,
// capped at 100 sweeps; the cap raises ErrorKind::Numeric with the residual.
std::vector<double> jacobi_eigenvalues(const SymMatrix& m);

}  // namespace specjoin
