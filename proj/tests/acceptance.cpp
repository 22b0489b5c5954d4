// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Criteria mirror the project-level checklist and run the closed
// forms against their independent oracles at the stated tolerances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "battery.hpp"
#include "specjoin/closed_form.hpp"
#include "specjoin/constructions.hpp"
#include "specjoin/coronal.hpp"
#include "specjoin/cospectral.hpp"
#include "specjoin/error.hpp"
#include "specjoin/exact.hpp"
#include "specjoin/generators.hpp"
#include "specjoin/graph6.hpp"
#include "specjoin/invariants.hpp"
#include "specjoin/isomorphism.hpp"
#include "specjoin/jacobi.hpp"
#include "specjoin/matrix.hpp"
#include "specjoin/nl.hpp"
#include "specjoin/spectrum.hpp"
#include "specjoin/switching.hpp"

using namespace specjoin;
using specjoin::testing::battery_g1;
using specjoin::testing::battery_g2;
using specjoin::testing::NamedGraph;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass,
            const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

Spectrum closed_join_spectrum(const Graph& g1, const Graph& g2, bool sv) {
  const RegularProfile p1 = regular_profile(g1);
  const RegularProfile p2 = regular_profile(g2);
  const Spectrum mu = nl_spectrum_or_zeros(g1);
  const Spectrum nu = nl_spectrum_or_zeros(g2);
  return flatten(sv ? sv_join_spectrum_closed(p1, mu, p2, nu)
                    : se_join_spectrum_closed(p1, mu, p2, nu));
}

// Criteria 1 and 2: closed-form join spectra vs. the direct eigensolver on
// all 42 battery pairs, per-eigenvalue relative tolerance 1e-9, under 30 s.
void spectrum_criterion(int criterion, bool sv) {
  const auto start = std::chrono::steady_clock::now();
  int pairs = 0;
  bool ok = true;
  std::string first_fail;
  for (const auto& [n1, g1] : battery_g1())
    for (const auto& [n2, g2] : battery_g2()) {
      const Spectrum closed = closed_join_spectrum(g1, g2, sv);
      const Graph join = (sv ? sv_join(g1, g2) : se_join(g1, g2)).graph;
      const Spectrum direct = nl_spectrum_direct(join);
      ++pairs;
      if (!spectra_equal(closed, direct, 1e-9) && first_fail.empty()) {
        ok = false;
        first_fail = n1 + " x " + n2;
      }
    }
  const double elapsed = seconds_since(start);
  ok = ok && pairs == 42 && elapsed < 30.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%d pairs, tol 1e-9, %.2f s%s%s", pairs, elapsed,
                first_fail.empty() ? "" : ", first failure ",
                first_fail.c_str());
  report(criterion,
         sv ? "subdivision-vertex join spectra closed form vs. eigensolver"
            : "subdivision-edge join spectra closed form vs. eigensolver",
         ok, detail);
}

void criterion3_example32() {
  const auto start = std::chrono::steady_clock::now();
  const Graph q4 = hypercube(4);
  const Graph k2 = complete(2);
  bool ok = true;
  std::string step = "all steps";

  // Full sweep of the 12,870 size-8 subsets plus the smaller even sizes;
  // the first productive switching set appears at size 4.
  std::vector<int> found;
  for (const int size : {2, 4, 6, 8}) {
    const auto sets = gm_search(q4, size);
    if (!sets.empty() && found.empty()) found = sets.front().vertices;
  }
  if (found != std::vector<int>{0, 3, 5, 9}) {
    ok = false;
    step = "switching-set search";
  }

  Graph switched = q4;
  if (ok) {
    switched = gm_switch(q4, SwitchingSet{found});
    const bool adjacency_equal =
        adjacency_charpoly(q4) == adjacency_charpoly(switched);
    const CospectralCertificate base = exact_cospectral(q4, switched, true);
    if (!(adjacency_equal && base.equal && base.isomorphic.has_value() &&
          !*base.isomorphic)) {
      ok = false;
      step = "base pair certification";
    }
  }

  if (ok) {
    for (const JoinKind kind : {JoinKind::SV, JoinKind::SE}) {
      const CospectralJoinPair pair =
          build_cospectral_join_pair(q4, switched, k2, k2, kind);
      if (!(pair.a.vertex_count() == 50 && pair.certificate.equal)) {
        ok = false;
        step = kind == JoinKind::SV ? "sv join pair" : "se join pair";
        break;
      }
      std::vector<int> expected;
      if (kind == JoinKind::SV) {
        expected.insert(expected.end(), 2, 17);
        expected.insert(expected.end(), 16, 6);
        expected.insert(expected.end(), 32, 2);
      } else {
        expected.insert(expected.end(), 2, 33);
        expected.insert(expected.end(), 48, 4);
      }
      if (pair.a.degree_sequence() != expected ||
          pair.b.degree_sequence() != expected) {
        ok = false;
        step = "degree sequences";
        break;
      }
    }
  }

  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 60.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "switching set {0,3,5,9}, 12870 size-8 subsets swept, %.2f s, "
                "%s", elapsed, step.c_str());
  report(3, "hypercube example end-to-end with exact certificates", ok,
         detail);
}

void criterion4_trees() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = sv_join_trees_exact(complete(3), complete(2)) == 490 &&
            sv_join_trees_exact(cycle(4), complete(1)) == 192 &&
            se_join_trees_exact(cycle(3), complete(1)) == 50;
  std::string first_fail = ok ? "" : "frozen constants 490/192/50";
  double worst_dev = 0.0;
  for (const auto& [n1, g1] : battery_g1())
    for (const auto& [n2, g2] : battery_g2()) {
      const RegularProfile p1 = regular_profile(g1);
      const RegularProfile p2 = regular_profile(g2);
      const Spectrum mu = nl_spectrum_or_zeros(g1);
      const Spectrum nu = nl_spectrum_or_zeros(g2);
      for (const bool sv : {true, false}) {
        const mpz_class exact =
            sv ? sv_join_trees_exact(g1, g2) : se_join_trees_exact(g1, g2);
        const Graph join = (sv ? sv_join(g1, g2) : se_join(g1, g2)).graph;
        const mpz_class oracle = spanning_trees_matrix_tree(join);
        const long double product =
            sv ? sv_join_trees_product(p1, mu, p2, nu)
               : se_join_trees_product(p1, mu, p2, nu);
        const long double exact_ld =
            static_cast<long double>(mpq_class(exact).get_d());
        const double dev =
            std::fabs(static_cast<double>((product - exact_ld) / exact_ld));
        worst_dev = std::max(worst_dev, dev);
        if ((exact != oracle || dev > 1e-6) && first_fail.empty()) {
          ok = false;
          first_fail = n1 + (sv ? " sv " : " se ") + n2;
        }
      }
    }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "84 closed counts == matrix-tree oracle, worst pre-rounding "
                "deviation %.2e, %.2f s%s%s",
                worst_dev, seconds_since(start),
                first_fail.empty() ? "" : ", first failure ",
                first_fail.c_str());
  report(4, "join spanning-tree counts, exact vs. matrix-tree", ok, detail);
}

void criterion5_kirchhoff() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = std::fabs(degree_kirchhoff_spectral(complete(2)) - 1.0) <= 1e-12 &&
            std::fabs(degree_kirchhoff_spectral(complete(3)) - 8.0) <= 1e-12 &&
            std::fabs(degree_kirchhoff_spectral(cycle(4)) - 20.0) <= 1e-12;
  std::string first_fail = ok ? "" : "fixed points 1/8/20";
  for (const auto& [n1, g1] : battery_g1())
    for (const auto& [n2, g2] : battery_g2()) {
      const RegularProfile p1 = regular_profile(g1);
      const RegularProfile p2 = regular_profile(g2);
      const Spectrum mu = nl_spectrum_or_zeros(g1);
      const Spectrum nu = nl_spectrum_or_zeros(g2);
      for (const bool sv : {true, false}) {
        const double closed = sv ? sv_join_kirchhoff_closed(p1, mu, p2, nu)
                                 : se_join_kirchhoff_closed(p1, mu, p2, nu);
        const Graph join = (sv ? sv_join(g1, g2) : se_join(g1, g2)).graph;
        const double spectral = degree_kirchhoff_spectral(join);
        const double resistance = degree_kirchhoff_resistance(join);
        const bool pair_ok =
            std::fabs(closed - spectral) <= 1e-9 * std::fabs(spectral) &&
            std::fabs(closed - resistance) <= 1e-6 * std::fabs(resistance);
        if (!pair_ok && first_fail.empty()) {
          ok = false;
          first_fail = n1 + (sv ? " sv " : " se ") + n2;
        }
      }
    }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "84 closed indices vs. spectral 1e-9 and resistance 1e-6, "
                "%.2f s%s%s", seconds_since(start),
                first_fail.empty() ? "" : ", first failure ",
                first_fail.c_str());
  report(5, "join degree-Kirchhoff closed forms vs. two oracles", ok, detail);
}

std::vector<NamedGraph> regular_battery_graphs(int min_r) {
  std::vector<NamedGraph> all;
  for (const auto& ng : battery_g1()) all.push_back(ng);
  for (const auto& ng : battery_g2()) all.push_back(ng);
  std::vector<NamedGraph> out;
  for (const auto& ng : all)
    if (ng.graph.vertex_count() > 0 &&
        regular_profile(ng.graph).r >= min_r)
      out.push_back(ng);
  return out;
}

void criterion6_coronal() {
  std::mt19937 rng(20240615u);
  std::uniform_real_distribution<double> dx(2.5, 6.0);
  std::uniform_real_distribution<double> da(0.0, 1.0);
  bool ok = true;
  double worst = 0.0;
  int graphs = 0;
  for (const auto& [name, g] : regular_battery_graphs(1)) {
    const RegularProfile p = regular_profile(g);
    const SymMatrix l = normalized_laplacian(g);
    ++graphs;
    for (int t = 0; t < 20; ++t) {
      const double x = dx(rng);
      const double alpha = da(rng);
      const double dev =
          std::fabs(coronal(l, x, alpha) -
                    coronal_regular_closed(p.n, x, alpha));
      worst = std::max(worst, dev / p.n);
      if (dev > 1e-10 * p.n) ok = false;
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail),
                "%d regular graphs x 20 samples, worst |dev|/n %.2e vs. bound "
                "1e-10", graphs, worst);
  report(6, "coronal of regular normalized Laplacians equals n/(x+a-1)", ok,
         detail);
}

void criterion7_line_graph() {
  bool ok = true;
  double worst = 0.0;
  int graphs = 0;
  for (const auto& [name, g] : regular_battery_graphs(2)) {
    const RegularProfile p = regular_profile(g);
    const std::vector<double> closed =
        line_graph_adjacency_spectrum(p, nl_spectrum_direct(g));
    const std::vector<double> direct =
        jacobi_eigenvalues(adjacency_matrix(line_graph(g)));
    ++graphs;
    if (closed.size() != direct.size()) {
      ok = false;
      continue;
    }
    for (size_t i = 0; i < closed.size(); ++i) {
      const double dev = std::fabs(closed[i] - direct[i]) /
                         std::max(1.0, std::fabs(closed[i]));
      worst = std::max(worst, dev);
      if (dev > 1e-9) ok = false;
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail),
                "%d regular graphs, worst relative deviation %.2e vs. 1e-9",
                graphs, worst);
  report(7, "line-graph adjacency spectra closed form vs. eigensolver", ok,
         detail);
}

void criterion8_rank_one() {
  std::mt19937 rng(133331u);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  std::uniform_real_distribution<double> da(-1.0, 1.0);
  bool ok = true;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, entry(rng));
    const double x = 1.0 + n * m.max_abs();
    const auto [lhs, rhs] = det_rank_one_identity(m, da(rng), x);
    const double dev = std::fabs(lhs - rhs) / std::max(1.0, std::fabs(lhs));
    worst = std::max(worst, dev);
    if (dev > 1e-8) ok = false;
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail),
                "100 random symmetric matrices orders 2-8, worst relative "
                "deviation %.2e vs. 1e-8", worst);
  report(8, "rank-one determinant identity", ok, detail);
}

void criterion9_graph6() {
  std::mt19937 rng(424242u);
  std::uniform_int_distribution<int> order(0, 62);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  bool ok = true;
  for (int t = 0; t < 1000 && ok; ++t) {
    const int n = order(rng);
    const double p = unit(rng);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (unit(rng) < p) g.add_edge(i, j);
    const std::string enc = write_graph6(g);
    if (!(parse_graph6(enc) == g)) ok = false;
  }

  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> byte(0, 255);
  int structured = 0, parsed = 0;
  for (int t = 0; t < 10000; ++t) {
    std::string s;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) s.push_back(static_cast<char>(byte(rng)));
    try {
      (void)parse_graph6(s);
      ++parsed;
    } catch (const ParseError&) {
      ++structured;
    } catch (...) {
      ok = false;
    }
  }
  char detail[140];
  std::snprintf(detail, sizeof(detail),
                "1000 round-trips, 10000 fuzz inputs: %d structured parse "
                "errors, %d parsed, 0 crashes", structured, parsed);
  report(9, "graph6 round-trip and malformed-input fuzz", ok, detail);
}

}  // namespace

int main() {
  spectrum_criterion(1, /*sv=*/true);
  spectrum_criterion(2, /*sv=*/false);
  criterion3_example32();
  criterion4_trees();
  criterion5_kirchhoff();
  criterion6_coronal();
  criterion7_line_graph();
  criterion8_rank_one();
  criterion9_graph6();
  if (failures == 0)
    std::printf("all 9 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
