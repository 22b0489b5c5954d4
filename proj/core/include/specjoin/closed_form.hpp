#pragma once

#include <vector>

#include "specjoin/graph.hpp"
#include "specjoin/spectrum.hpp"

namespace specjoin {

// Monic quadratic x² + b·x + c contributing both of its roots.
struct Quadratic {
  double b = 0.0;
  double c = 0.0;
};

// Closed-form join spectrum before flattening: the eigenvalue 0 (always
// multiplicity 1), the multiplicity of eigenvalue 1, a linear family, a
// quadratic family, and the one special quadratic.
struct ClosedFormSpectrum {
  int ones = 0;
  std::vector<double> linear_part;
  std::vector<Quadratic> quadratic_part;
  Quadratic special_quadratic;

  int total() const {
    return 1 + ones + static_cast<int>(linear_part.size()) +
           2 * static_cast<int>(quadratic_part.size()) + 2;
  }
};

// Closed-form normalized Laplacian spectrum of the subdivision-vertex join of
// an r₁-regular G₁ (r₁ ≥ 2, spectrum mu, μ₁ = 0) and an r₂-regular G₂ of
// order ≥ 1 (spectrum nu, ν₁ = 0). Precondition violations raise
// ErrorKind::Domain.
ClosedFormSpectrum sv_join_spectrum_closed(const RegularProfile& p1,
                                           const Spectrum& mu,
                                           const RegularProfile& p2,
                                           const Spectrum& nu);

// Same for the subdivision-edge join.
ClosedFormSpectrum se_join_spectrum_closed(const RegularProfile& p1,
                                           const Spectrum& mu,
                                           const RegularProfile& p2,
                                           const Spectrum& nu);

// Sorted multiset of all parts; quadratic roots use the numerically stable
// formula and discriminants in [−1e−12, 0) are clamped to zero. A genuinely
// negative discriminant raises ErrorKind::Consistency.
Spectrum flatten(const ClosedFormSpectrum& cf);

}  // namespace specjoin
