#include "specjoin/closed_form.hpp"

#include <cmath>
#include <string>

#include "specjoin/error.hpp"

namespace specjoin {

namespace {

void check_closed_form_inputs(const RegularProfile& p1, const Spectrum& mu,
                              const RegularProfile& p2, const Spectrum& nu) {
  if (p1.r < 2)
    throw Error(ErrorKind::Domain,
                "closed form requires r1 >= 2, got r1 = " +
                    std::to_string(p1.r));
  if (p2.n < 1)
    throw Error(ErrorKind::Domain, "closed form requires n2 >= 1");
  if (mu.size() != p1.n)
    throw Error(ErrorKind::Domain,
                "mu must carry n1 = " + std::to_string(p1.n) +
                    " eigenvalues, got " + std::to_string(mu.size()));
  if (nu.size() != p2.n)
    throw Error(ErrorKind::Domain,
                "nu must carry n2 = " + std::to_string(p2.n) +
                    " eigenvalues, got " + std::to_string(nu.size()));
  if (std::fabs(mu.values.front()) > 1e-8)
    throw Error(ErrorKind::Domain,
                "mu is not a normalized Laplacian spectrum: smallest "
                "eigenvalue is " +
                    std::to_string(mu.values.front()) + ", expected 0");
  if (std::fabs(nu.values.front()) > 1e-8)
    throw Error(ErrorKind::Domain,
                "nu is not a normalized Laplacian spectrum: smallest "
                "eigenvalue is " +
                    std::to_string(nu.values.front()) + ", expected 0");
}

}  // namespace

ClosedFormSpectrum sv_join_spectrum_closed(const RegularProfile& p1,
                                           const Spectrum& mu,
                                           const RegularProfile& p2,
                                           const Spectrum& nu) {
  check_closed_form_inputs(p1, mu, p2, nu);
  const double n1 = p1.n, r1 = p1.r;
  const double n2 = p2.n, r2 = p2.r;
  ClosedFormSpectrum cf;
  cf.ones = p1.m - p1.n;
  for (int j = 1; j < p2.n; ++j)
    cf.linear_part.push_back((n1 + r2 * nu.values[j]) / (r2 + n1));
  for (int i = 1; i < p1.n; ++i)
    cf.quadratic_part.push_back(Quadratic{
        -2.0, 1.0 - r1 * (2.0 - mu.values[i]) / (2.0 * (r1 + n2))});
  cf.special_quadratic =
      Quadratic{-(2.0 + n1 / (r2 + n1)),
                2.0 * n1 / (r2 + n1) + n2 * r2 / ((r1 + n2) * (r2 + n1))};
  return cf;
}

ClosedFormSpectrum se_join_spectrum_closed(const RegularProfile& p1,
                                           const Spectrum& mu,
                                           const RegularProfile& p2,
                                           const Spectrum& nu) {
  check_closed_form_inputs(p1, mu, p2, nu);
  const double m1 = p1.m;
  const double n2 = p2.n, r2 = p2.r;
  ClosedFormSpectrum cf;
  cf.ones = p1.m - p1.n;
  for (int j = 1; j < p2.n; ++j)
    cf.linear_part.push_back((m1 + r2 * nu.values[j]) / (r2 + m1));
  for (int i = 1; i < p1.n; ++i)
    cf.quadratic_part.push_back(
        Quadratic{-2.0, 1.0 - (2.0 - mu.values[i]) / (2.0 + n2)});
  cf.special_quadratic =
      Quadratic{-(2.0 + m1 / (r2 + m1)),
                2.0 * m1 / (r2 + m1) + n2 * r2 / ((2.0 + n2) * (r2 + m1))};
  return cf;
}

namespace {

void push_roots(const Quadratic& q, std::vector<double>& out) {
  double disc = q.b * q.b - 4.0 * q.c;
  if (disc < 0.0) {
    if (disc < -1e-12)
      throw Error(ErrorKind::Consistency,
                  "closed-form quadratic has negative discriminant " +
                      std::to_string(disc));
    disc = 0.0;
  }
  if (q.b == 0.0 && q.c == 0.0) {
    out.insert(out.end(), {0.0, 0.0});
    return;
  }
  // Larger-magnitude root first, partner from the product, avoiding
  // cancellation between −b and √disc.
  const double sq = std::sqrt(disc);
  const double big = (q.b >= 0.0 ? -(q.b + sq) : -(q.b - sq)) / 2.0;
  out.push_back(big);
  out.push_back(big == 0.0 ? 0.0 : q.c / big);
}

}  // namespace

Spectrum flatten(const ClosedFormSpectrum& cf) {
  std::vector<double> values;
  values.reserve(cf.total());
  values.push_back(0.0);
  values.insert(values.end(), cf.ones, 1.0);
  values.insert(values.end(), cf.linear_part.begin(), cf.linear_part.end());
  for (const auto& q : cf.quadratic_part) push_roots(q, values);
  push_roots(cf.special_quadratic, values);
  return make_spectrum(std::move(values));
}

}  // namespace specjoin
