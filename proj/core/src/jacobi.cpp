#include "specjoin/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specjoin/error.hpp"

namespace specjoin {

namespace {

double offdiag_frobenius(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      const double v = a[static_cast<size_t>(p) * n + q];
      s += v * v;
    }
  return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const SymMatrix& m) {
  const int n = m.order();
  if (n == 0) return {};
  std::vector<double> a = m.data();
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<size_t>(i) * n + j];
  };
  const double scale = m.max_abs();
  const double threshold = 1e-13 * n * scale;

  const int kMaxSweeps = 100;
  int sweep = 0;
  while (offdiag_frobenius(a, n) > threshold) {
    if (sweep++ >= kMaxSweeps)
      throw Error(ErrorKind::Numeric,
                  "jacobi did not converge in " + std::to_string(kMaxSweeps) +
                      " sweeps; off-diagonal residual " +
                      std::to_string(offdiag_frobenius(a, n)));
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0 ? 1.0 : -1.0) /
            (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = at(p, p);
        const double aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = at(i, p);
          const double aiq = at(i, q);
          at(i, p) = aip - s * (aiq + tau * aip);
          at(p, i) = at(i, p);
          at(i, q) = aiq + s * (aip - tau * aiq);
          at(q, i) = at(i, q);
        }
      }
  }

  std::vector<double> eigenvalues(n);
  for (int i = 0; i < n; ++i) eigenvalues[i] = at(i, i);
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

}  // namespace specjoin
