#include "specjoin/coronal.hpp"

#include <cmath>
#include <vector>

#include "specjoin/error.hpp"

namespace specjoin {

namespace {

// Row-major xI − M∘(αJ + (1−α)I): diagonal x − mᵢᵢ, off-diagonal −α·mᵢⱼ.
std::vector<double> shifted_hadamard(const SymMatrix& m, double x,
                                     double alpha) {
  const int n = m.order();
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<size_t>(i) * n + j] =
          i == j ? x - m(i, i) : -alpha * m(i, j);
  return a;
}

}  // namespace

double coronal(const SymMatrix& m, double x, double alpha) {
  const int n = m.order();
  if (n < 1) throw Error(ErrorKind::Argument, "coronal requires order >= 1");
  std::vector<double> ones(n, 1.0);
  const std::vector<double> y =
      solve_dense(shifted_hadamard(m, x, alpha), std::move(ones), n);
  double sum = 0.0;
  for (double v : y) sum += v;
  return sum;
}

double coronal_regular_closed(int n, double x, double alpha) {
  const double denom = x + alpha - 1.0;
  if (std::fabs(denom) < 1e-12)
    throw Error(ErrorKind::Singular,
                "coronal closed form has a pole at x + alpha = 1");
  return n / denom;
}

std::pair<double, double> det_rank_one_identity(const SymMatrix& a,
                                                double alpha, double x) {
  const int n = a.order();
  if (n < 1) throw Error(ErrorKind::Argument, "identity requires order >= 1");
  std::vector<double> shifted(static_cast<size_t>(n) * n);
  std::vector<double> shifted_rank_one(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double base = (i == j ? x : 0.0) - a(i, j);
      shifted[static_cast<size_t>(i) * n + j] = base;
      shifted_rank_one[static_cast<size_t>(i) * n + j] = base - alpha;
    }
  const double lhs = dense_determinant(std::move(shifted_rank_one), n);
  const double gamma = coronal(a, x, 1.0);  // throws if xI − A is singular
  const double det0 = dense_determinant(std::move(shifted), n);
  return {lhs, (1.0 - alpha * gamma) * det0};
}

}  // namespace specjoin
