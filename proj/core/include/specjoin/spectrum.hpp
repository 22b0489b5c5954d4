#pragma once

#include <string>
#include <utility>
#include <vector>

namespace specjoin {

// Sorted real eigenvalue multiset with multiplicity grouping.
struct Spectrum {
  std::vector<double> values;  // ascending
  double group_tol = 1e-7;

  int size() const { return static_cast<int>(values.size()); }
  double sum() const;
  // Runs of values within group_tol of the run's first element, reported as
  // (mean of run, multiplicity).
  std::vector<std::pair<double, int>> grouped() const;
};

// Sorts the values and wraps them in a Spectrum.
Spectrum make_spectrum(std::vector<double> values, double group_tol = 1e-7);

// True iff the spectra have the same length and, position by position,
// |aᵢ − bᵢ| ≤ tol·max(1, |aᵢ|).
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol = 1e-9);

// JSON per the published schema: {"n", "eigenvalues": [{"value",
// "multiplicity"}...], "method", "tolerance"}.
std::string spectrum_json(const Spectrum& s, const std::string& method);

// CSV with a "value,multiplicity" header line.
std::string spectrum_csv(const Spectrum& s);

}  // namespace specjoin
