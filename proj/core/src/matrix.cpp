#include "specjoin/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specjoin/error.hpp"

namespace specjoin {

SymMatrix::SymMatrix(int order) : n_(order) {
  if (order < 0) throw Error(ErrorKind::Argument, "matrix order must be >= 0");
  a_.assign(static_cast<size_t>(order) * order, 0.0);
}

void SymMatrix::set(int i, int j, double value) {
  if (!std::isfinite(value))
    throw Error(ErrorKind::Argument, "matrix entries must be finite");
  a_[static_cast<size_t>(i) * n_ + j] = value;
  a_[static_cast<size_t>(j) * n_ + i] = value;
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::fabs(v));
  return m;
}

SymMatrix SymMatrix::identity(int order) {
  SymMatrix m(order);
  for (int i = 0; i < order; ++i) m.set(i, i, 1.0);
  return m;
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw Error(ErrorKind::Argument, "matrix dimensions must be >= 0");
  a_.assign(static_cast<size_t>(rows) * cols, mpz_class(0));
}

IntMatrix IntMatrix::identity(int order) {
  IntMatrix m(order, order);
  for (int i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

// In-place LU factorization with partial pivoting on the row-major matrix.
// Returns the permutation sign, or 0 when a pivot column is exactly empty.
// When `pivot_floor` > 0, pivots smaller than pivot_floor trigger a
// singularity error instead.
int lu_factor(std::vector<double>& a, int n, std::vector<int>& perm,
              double pivot_floor) {
  perm.resize(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int best = k;
    double best_abs = std::fabs(a[static_cast<size_t>(perm[k]) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      const double v = std::fabs(a[static_cast<size_t>(perm[i]) * n + k]);
      if (v > best_abs) {
        best = i;
        best_abs = v;
      }
    }
    if (pivot_floor > 0.0 && best_abs < pivot_floor)
      throw Error(ErrorKind::Singular,
                  "singular linear system: pivot " + std::to_string(best_abs) +
                      " below floor " + std::to_string(pivot_floor));
    if (best_abs == 0.0) return 0;
    if (best != k) {
      std::swap(perm[k], perm[best]);
      sign = -sign;
    }
    const size_t rk = static_cast<size_t>(perm[k]) * n;
    for (int i = k + 1; i < n; ++i) {
      const size_t ri = static_cast<size_t>(perm[i]) * n;
      const double f = a[ri + k] / a[rk + k];
      a[ri + k] = f;
      for (int j = k + 1; j < n; ++j) a[ri + j] -= f * a[rk + j];
    }
  }
  return sign;
}

}  // namespace

std::vector<double> solve_dense_multi(std::vector<double> a,
                                      std::vector<double> b, int n, int k) {
  if (static_cast<int>(a.size()) != n * n ||
      static_cast<int>(b.size()) != n * k)
    throw Error(ErrorKind::Argument, "solve_dense: dimension mismatch");
  if (n == 0) return {};
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::fabs(v));
  const double floor = 1e-12 * std::max(scale, 1.0);
  std::vector<int> perm;
  lu_factor(a, n, perm, floor);
  std::vector<double> x(static_cast<size_t>(n) * k);
  for (int col = 0; col < k; ++col) {
    // Forward substitution on the permuted rows, then back substitution.
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
      double s = b[static_cast<size_t>(perm[i]) * k + col];
      const size_t ri = static_cast<size_t>(perm[i]) * n;
      for (int j = 0; j < i; ++j) s -= a[ri + j] * y[j];
      y[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
      const size_t ri = static_cast<size_t>(perm[i]) * n;
      double s = y[i];
      for (int j = i + 1; j < n; ++j)
        s -= a[ri + j] * x[static_cast<size_t>(j) * k + col];
      x[static_cast<size_t>(i) * k + col] = s / a[ri + i];
    }
  }
  return x;
}

std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b,
                                int n) {
  return solve_dense_multi(std::move(a), std::move(b), n, 1);
}

double dense_determinant(std::vector<double> a, int n) {
  if (static_cast<int>(a.size()) != n * n)
    throw Error(ErrorKind::Argument, "determinant: dimension mismatch");
  if (n == 0) return 1.0;
  std::vector<int> perm;
  const int sign = lu_factor(a, n, perm, 0.0);
  if (sign == 0) return 0.0;
  double det = sign;
  for (int k = 0; k < n; ++k) det *= a[static_cast<size_t>(perm[k]) * n + k];
  return det;
}

}  // namespace specjoin
