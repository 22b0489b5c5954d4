#include "specjoin/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace specjoin {

double Spectrum::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

std::vector<std::pair<double, int>> Spectrum::grouped() const {
  std::vector<std::pair<double, int>> groups;
  size_t i = 0;
  while (i < values.size()) {
    size_t j = i;
    double acc = 0.0;
    while (j < values.size() && values[j] - values[i] <= group_tol)
      acc += values[j++];
    groups.emplace_back(acc / static_cast<double>(j - i),
                        static_cast<int>(j - i));
    i = j;
  }
  return groups;
}

Spectrum make_spectrum(std::vector<double> values, double group_tol) {
  std::sort(values.begin(), values.end());
  return Spectrum{std::move(values), group_tol};
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.values.size() != b.values.size()) return false;
  for (size_t i = 0; i < a.values.size(); ++i)
    if (std::fabs(a.values[i] - b.values[i]) >
        tol * std::max(1.0, std::fabs(a.values[i])))
      return false;
  return true;
}

std::string spectrum_json(const Spectrum& s, const std::string& method) {
  nlohmann::ordered_json j;
  j["n"] = s.size();
  j["eigenvalues"] = nlohmann::ordered_json::array();
  for (const auto& [value, multiplicity] : s.grouped())
    j["eigenvalues"].push_back(
        {{"value", value}, {"multiplicity", multiplicity}});
  j["method"] = method;
  j["tolerance"] = s.group_tol;
  return j.dump(2) + "\n";
}

std::string spectrum_csv(const Spectrum& s) {
  std::string out = "value,multiplicity\n";
  char buf[64];
  for (const auto& [value, multiplicity] : s.grouped()) {
    std::snprintf(buf, sizeof(buf), "%.17g,%d\n", value, multiplicity);
    out += buf;
  }
  return out;
}

}  // namespace specjoin
