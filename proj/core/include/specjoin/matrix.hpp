#pragma once

#include <gmpxx.h>

#include <vector>

namespace specjoin {

// Dense symmetric real matrix with full row-major storage; set() keeps the
// two mirrored entries in sync.
class SymMatrix {
 public:
  explicit SymMatrix(int order);

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, double value);
  const std::vector<double>& data() const { return a_; }
  double max_abs() const;

  static SymMatrix identity(int order);

 private:
  int n_;
  std::vector<double> a_;
};

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  static IntMatrix identity(int order);

 private:
  int rows_, cols_;
  std::vector<mpz_class> a_;
};

// Solves a·x = b for a dense row-major n×n system by Gaussian elimination
// with partial pivoting. Throws ErrorKind::Singular when the best available
// pivot drops below 1e−12 · max|entry of a|.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b,
                                int n);

// Same factorization, multiple right-hand sides (columns of b, n×k).
std::vector<double> solve_dense_multi(std::vector<double> a,
                                      std::vector<double> b, int n, int k);

// Determinant of a dense row-major n×n matrix by LU with partial pivoting;
// returns 0 for (numerically) singular input instead of throwing.
double dense_determinant(std::vector<double> a, int n);

}  // namespace specjoin
