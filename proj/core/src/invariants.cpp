#include "specjoin/invariants.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "specjoin/error.hpp"
#include "specjoin/exact.hpp"
#include "specjoin/graph6.hpp"
#include "specjoin/matrix.hpp"
#include "specjoin/nl.hpp"

namespace specjoin {

namespace {

void check_join_closed_form_inputs(const RegularProfile& p1,
                                   const Spectrum& mu,
                                   const RegularProfile& p2,
                                   const Spectrum& nu) {
  if (p1.r < 2)
    throw Error(ErrorKind::Domain, "closed form requires r1 >= 2, got r1 = " +
                                       std::to_string(p1.r));
  if (p2.n < 1)
    throw Error(ErrorKind::Domain, "closed form requires n2 >= 1");
  if (mu.size() != p1.n || nu.size() != p2.n)
    throw Error(ErrorKind::Domain,
                "spectra sizes must match the regular profiles");
  if (std::fabs(mu.values.front()) > 1e-8 ||
      std::fabs(nu.values.front()) > 1e-8)
    throw Error(ErrorKind::Domain,
                "input spectra must start at the eigenvalue 0");
}

void require_connected(const Graph& g, const char* what) {
  if (!g.is_connected())
    throw Error(ErrorKind::Domain,
                std::string(what) + " is undefined for disconnected graphs");
}

mpz_class round_to_mpz(long double value) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.0Lf", value);
  return mpz_class(buf);
}

mpz_class to_exact_integer(const mpq_class& value, const char* what) {
  mpq_class v = value;
  v.canonicalize();
  if (v.get_den() != 1)
    throw Error(ErrorKind::Consistency,
                std::string(what) + " evaluated to the non-integer " +
                    v.get_str());
  return v.get_num();
}

}  // namespace

mpz_class spanning_trees_matrix_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1)
    throw Error(ErrorKind::Argument,
                "spanning-tree count requires at least one vertex");
  IntMatrix minor(n - 1, n - 1);
  for (int i = 1; i < n; ++i) {
    minor.at(i - 1, i - 1) = g.degree(i);
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(i, j)) {
        minor.at(i - 1, j - 1) = -1;
        minor.at(j - 1, i - 1) = -1;
      }
  }
  return bareiss_det(std::move(minor));
}

double spanning_trees_spectral(const Graph& g) {
  if (g.vertex_count() < 1)
    throw Error(ErrorKind::Argument,
                "spanning-tree count requires at least one vertex");
  if (g.vertex_count() >= 2 && g.min_degree() == 0)
    throw Error(ErrorKind::Domain,
                "spectral spanning-tree count requires minimum degree >= 1");
  if (g.vertex_count() == 1) return 1.0;
  const Spectrum s = nl_spectrum_direct(g);
  if (s.values[1] < 1e-9)
    throw Error(ErrorKind::Domain,
                "spectral spanning-tree count requires a connected graph "
                "(second eigenvalue is " +
                    std::to_string(s.values[1]) + ")");
  long double t = 1.0L / (2.0L * g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v) t *= g.degree(v);
  for (size_t i = 1; i < s.values.size(); ++i) t *= s.values[i];
  return static_cast<double>(t);
}

long double sv_join_trees_product(const RegularProfile& p1, const Spectrum& mu,
                                  const RegularProfile& p2,
                                  const Spectrum& nu) {
  check_join_closed_form_inputs(p1, mu, p2, nu);
  long double t = std::pow(2.0L, p1.m - p1.n + 1);
  for (int i = 1; i < p1.n; ++i)
    t *= 2.0L * p2.n + static_cast<long double>(p1.r) * mu.values[i];
  for (int j = 1; j < p2.n; ++j)
    t *= static_cast<long double>(p1.n) +
         static_cast<long double>(p2.r) * nu.values[j];
  return t;
}

long double se_join_trees_product(const RegularProfile& p1, const Spectrum& mu,
                                  const RegularProfile& p2,
                                  const Spectrum& nu) {
  check_join_closed_form_inputs(p1, mu, p2, nu);
  long double t = std::pow(static_cast<long double>(p1.r), p1.n) *
                  std::pow(2.0L + p2.n, p1.m - p1.n);
  for (int i = 1; i < p1.n; ++i)
    t *= static_cast<long double>(p2.n) + mu.values[i];
  for (int j = 1; j < p2.n; ++j)
    t *= static_cast<long double>(p1.m) +
         static_cast<long double>(p2.r) * nu.values[j];
  return t;
}

mpz_class sv_join_trees_closed(const RegularProfile& p1, const Spectrum& mu,
                               const RegularProfile& p2, const Spectrum& nu) {
  return round_to_mpz(sv_join_trees_product(p1, mu, p2, nu));
}

mpz_class se_join_trees_closed(const RegularProfile& p1, const Spectrum& mu,
                               const RegularProfile& p2, const Spectrum& nu) {
  return round_to_mpz(se_join_trees_product(p1, mu, p2, nu));
}

mpz_class sv_join_trees_exact(const Graph& g1, const Graph& g2) {
  const RegularProfile p1 = regular_profile(g1);
  const RegularProfile p2 = regular_profile(g2);
  if (p1.r < 2)
    throw Error(ErrorKind::Domain, "closed form requires r1 >= 2");
  mpz_class lead;
  mpz_ui_pow_ui(lead.get_mpz_t(), 2,
                static_cast<unsigned long>(p1.m - p1.n + 1));
  const mpq_class value = mpq_class(lead) *
                          exact_eigen_product(g1, 2 * p2.n, p1.r) *
                          exact_eigen_product(g2, p1.n, p2.r);
  return to_exact_integer(value, "sv-join spanning-tree product");
}

mpz_class se_join_trees_exact(const Graph& g1, const Graph& g2) {
  const RegularProfile p1 = regular_profile(g1);
  const RegularProfile p2 = regular_profile(g2);
  if (p1.r < 2)
    throw Error(ErrorKind::Domain, "closed form requires r1 >= 2");
  mpz_class lead_r, lead_n2;
  mpz_ui_pow_ui(lead_r.get_mpz_t(), static_cast<unsigned long>(p1.r),
                static_cast<unsigned long>(p1.n));
  mpz_ui_pow_ui(lead_n2.get_mpz_t(), static_cast<unsigned long>(2 + p2.n),
                static_cast<unsigned long>(p1.m - p1.n));
  const mpq_class value = mpq_class(lead_r * lead_n2) *
                          exact_eigen_product(g1, p2.n, 1) *
                          exact_eigen_product(g2, p1.m, p2.r);
  return to_exact_integer(value, "se-join spanning-tree product");
}

double degree_kirchhoff_spectral(const Graph& g) {
  require_connected(g, "degree-Kirchhoff index");
  if (g.vertex_count() == 1) return 0.0;
  const Spectrum s = nl_spectrum_direct(g);
  double sum = 0.0;
  for (size_t i = 1; i < s.values.size(); ++i) sum += 1.0 / s.values[i];
  return 2.0 * g.edge_count() * sum;
}

double degree_kirchhoff_resistance(const Graph& g) {
  require_connected(g, "degree-Kirchhoff index");
  const int n = g.vertex_count();
  if (n == 1) return 0.0;
  std::vector<double> system(static_cast<size_t>(n) * n, 0.0);
  std::vector<double> rhs(static_cast<size_t>(n) * n, 0.0);
  const double inv_n = 1.0 / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double l = i == j ? static_cast<double>(g.degree(i))
                        : (g.has_edge(i, j) ? -1.0 : 0.0);
      system[static_cast<size_t>(i) * n + j] = l + inv_n;
      rhs[static_cast<size_t>(i) * n + j] = (i == j ? 1.0 : 0.0) - inv_n;
    }
  const std::vector<double> pinv = solve_dense_multi(system, rhs, n, n);
  double kf = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double r = pinv[static_cast<size_t>(i) * n + i] +
                       pinv[static_cast<size_t>(j) * n + j] -
                       2.0 * pinv[static_cast<size_t>(i) * n + j];
      kf += static_cast<double>(g.degree(i)) * g.degree(j) * r;
    }
  return kf;
}

double sv_join_kirchhoff_closed(const RegularProfile& p1, const Spectrum& mu,
                                const RegularProfile& p2, const Spectrum& nu) {
  check_join_closed_form_inputs(p1, mu, p2, nu);
  const double n1 = p1.n, m1 = p1.m, r1 = p1.r;
  const double n2 = p2.n, r2 = p2.r;
  double sum = m1 - n1;
  sum += (r1 + n2) * (2.0 * r2 + 3.0 * n1) /
         (2.0 * n1 * r1 + 2.0 * n1 * n2 + n2 * r2);
  for (int i = 1; i < p1.n; ++i)
    sum += 4.0 * (r1 + n2) / (2.0 * n2 + r1 * mu.values[i]);
  for (int j = 1; j < p2.n; ++j)
    sum += (r2 + n1) / (n1 + r2 * nu.values[j]);
  return (n1 * r1 + n2 * r2 + 2.0 * n1 * n2 + 2.0 * m1) * sum;
}

double se_join_kirchhoff_closed(const RegularProfile& p1, const Spectrum& mu,
                                const RegularProfile& p2, const Spectrum& nu) {
  check_join_closed_form_inputs(p1, mu, p2, nu);
  const double n1 = p1.n, m1 = p1.m;
  const double n2 = p2.n, r2 = p2.r;
  double sum = m1 - n1;
  sum += (2.0 + n2) * (2.0 * r2 + 3.0 * m1) /
         (4.0 * m1 + 2.0 * m1 * n2 + n2 * r2);
  for (int i = 1; i < p1.n; ++i)
    sum += (4.0 + 2.0 * n2) / (n2 + mu.values[i]);
  for (int j = 1; j < p2.n; ++j)
    sum += (r2 + m1) / (m1 + r2 * nu.values[j]);
  return (n1 * p1.r + n2 * r2 + 2.0 * m1 * n2 + 2.0 * m1) * sum;
}

InvariantReport invariant_report(const Graph& g) {
  require_connected(g, "degree-Kirchhoff index");
  InvariantReport r;
  r.graph6 = write_graph6(g);
  r.spanning_trees = spanning_trees_matrix_tree(g);
  r.spanning_trees_method = "matrix-tree";
  r.kirchhoff = degree_kirchhoff_spectral(g);
  r.kirchhoff_method = "spectral";
  return r;
}

std::string invariant_report_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["graph"] = r.graph6;
  j["spanning_trees"] = r.spanning_trees.get_str();
  j["kirchhoff"] = r.kirchhoff;
  j["methods"] = {{"spanning_trees", r.spanning_trees_method},
                  {"kirchhoff", r.kirchhoff_method}};
  return j.dump(2) + "\n";
}

}  // namespace specjoin
