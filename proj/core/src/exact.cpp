#include "specjoin/exact.hpp"

#include <string>
#include <utility>

#include "specjoin/error.hpp"
#include "specjoin/parallel.hpp"

namespace specjoin {

void IntPolynomial::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

mpz_class bareiss_det(IntMatrix m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::Argument, "determinant requires a square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (m.at(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot == -1) return 0;
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

// Interpolates det(x·diag − A) from exact evaluations at x = 0..n, where
// diag is the degree vector (pencil) or all ones (adjacency).
IntPolynomial interpolate_charpoly(const Graph& g, bool use_degrees) {
  const int n = g.vertex_count();
  if (n == 0) return IntPolynomial{{mpz_class(1)}};

  std::vector<mpz_class> values(n + 1);
  parallel_for(n + 1, [&](int k) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      m.at(i, i) = mpz_class(k) * (use_degrees ? g.degree(i) : 1);
    for (const auto& e : g.edges()) {
      m.at(e.first, e.second) = -1;
      m.at(e.second, e.first) = -1;
    }
    values[k] = bareiss_det(std::move(m));
  });

  // full(x) = Π_{j=0..n} (x − j), degree n+1.
  std::vector<mpz_class> full{1};
  for (int j = 0; j <= n; ++j) {
    std::vector<mpz_class> next(full.size() + 1, mpz_class(0));
    for (size_t i = 0; i < full.size(); ++i) {
      next[i + 1] += full[i];
      next[i] -= mpz_class(j) * full[i];
    }
    full = std::move(next);
  }

  std::vector<mpq_class> acc(n + 1, mpq_class(0));
  std::vector<mpz_class> basis(n + 1);
  for (int k = 0; k <= n; ++k) {
    // Synthetic division: basis = full / (x − k).
    basis[n] = full[n + 1];
    for (int i = n; i >= 1; --i) basis[i - 1] = full[i] + k * basis[i];
    if (full[0] + k * basis[0] != 0)
      throw Error(ErrorKind::Consistency,
                  "interpolation basis division left a remainder");
    mpz_class denom = 1;
    for (int j = 0; j <= n; ++j)
      if (j != k) denom *= mpz_class(k - j);
    for (int i = 0; i <= n; ++i) {
      // mpq arithmetic requires canonical operands (positive denominator,
      // reduced); denom alternates in sign with n − k.
      mpq_class term(mpz_class(values[k] * basis[i]), denom);
      term.canonicalize();
      acc[i] += term;
    }
  }

  IntPolynomial p;
  p.coeffs.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    acc[i].canonicalize();
    if (acc[i].get_den() != 1)
      throw Error(ErrorKind::Consistency,
                  "characteristic polynomial interpolation produced a "
                  "non-integer coefficient");
    p.coeffs[i] = acc[i].get_num();
  }
  return p;
}

void check_order_guard(const Graph& g, int max_order) {
  if (g.vertex_count() > max_order)
    throw Error(ErrorKind::Size,
                "graph order " + std::to_string(g.vertex_count()) +
                    " exceeds the exact-arithmetic guard of " +
                    std::to_string(max_order));
}

}  // namespace

ExactCharPoly pencil_charpoly(const Graph& g, int max_order) {
  check_order_guard(g, max_order);
  if (g.vertex_count() > 0 && g.min_degree() == 0)
    throw Error(ErrorKind::Domain,
                "pencil characteristic polynomial requires no isolated "
                "vertices (degree matrix must be invertible)");
  mpz_class det_d = 1;
  for (int v = 0; v < g.vertex_count(); ++v) det_d *= g.degree(v);
  ExactCharPoly result{interpolate_charpoly(g, /*use_degrees=*/true), det_d};
  if (result.poly.coeffs.back() != det_d)
    throw Error(ErrorKind::Consistency,
                "pencil polynomial leading coefficient does not equal det(D)");
  return result;
}

IntPolynomial adjacency_charpoly(const Graph& g, int max_order) {
  check_order_guard(g, max_order);
  return interpolate_charpoly(g, /*use_degrees=*/false);
}

std::vector<mpq_class> monic_rational_form(const ExactCharPoly& p) {
  std::vector<mpq_class> out(p.poly.coeffs.size());
  for (size_t i = 0; i < p.poly.coeffs.size(); ++i) {
    out[i] = mpq_class(p.poly.coeffs[i], p.det_d);
    out[i].canonicalize();
  }
  return out;
}

mpq_class exact_eigen_product(const Graph& g, const mpz_class& a,
                              const mpz_class& b) {
  const int n = g.vertex_count();
  if (n < 1)
    throw Error(ErrorKind::Argument,
                "eigenvalue product requires at least one vertex");
  if (b == 0) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), a.get_mpz_t(),
               static_cast<unsigned long>(n - 1));
    return {power};
  }
  const ExactCharPoly p = pencil_charpoly(g);
  // q = p / (x − 1); the root at 1 exists exactly because det(D − A) = 0.
  std::vector<mpz_class> q(n);
  q[n - 1] = p.poly.coeffs[n];
  for (int i = n - 1; i >= 1; --i) q[i - 1] = p.poly.coeffs[i] + q[i];
  if (p.poly.coeffs[0] + q[0] != 0)
    throw Error(ErrorKind::Consistency,
                "pencil polynomial is not divisible by (x - 1)");
  // Π_{i≥2}(a + b·μ_i) = Σ_k q_k (a+b)^k b^{n−1−k} / det(D).
  mpz_class num = 0;
  mpz_class apb_pow = 1;  // (a+b)^k
  std::vector<mpz_class> b_pow(n);
  b_pow[0] = 1;
  for (int k = 1; k < n; ++k) b_pow[k] = b_pow[k - 1] * b;
  for (int k = 0; k < n; ++k) {
    num += q[k] * apb_pow * b_pow[n - 1 - k];
    apb_pow *= (a + b);
  }
  mpq_class result(num, p.det_d);
  result.canonicalize();
  return result;
}

}  // namespace specjoin
