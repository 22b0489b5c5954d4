#include <doctest.h>

#include <cmath>
#include <string>

#include "battery.hpp"
#include "specjoin/constructions.hpp"
#include "specjoin/error.hpp"
#include "specjoin/generators.hpp"
#include "specjoin/graph.hpp"
#include "specjoin/invariants.hpp"
#include "specjoin/nl.hpp"

using namespace specjoin;
using specjoin::testing::module_battery_g1;
using specjoin::testing::module_battery_g2;

TEST_CASE("matrix-tree counts on classical graphs") {
  CHECK(spanning_trees_matrix_tree(complete(1)) == 1);
  CHECK(spanning_trees_matrix_tree(complete(2)) == 1);
  CHECK(spanning_trees_matrix_tree(cycle(5)) == 5);
  CHECK(spanning_trees_matrix_tree(complete(4)) == 16);    // 4^2
  CHECK(spanning_trees_matrix_tree(complete(5)) == 125);   // 5^3
  CHECK(spanning_trees_matrix_tree(complete(10)) == 100000000);  // 10^8
  CHECK(spanning_trees_matrix_tree(complete_bipartite(3, 3)) == 81);
  CHECK(spanning_trees_matrix_tree(petersen()) == 2000);
  CHECK(spanning_trees_matrix_tree(hypercube(3)) == 384);
  CHECK(spanning_trees_matrix_tree(hypercube(4)) == 42467328);
  CHECK(spanning_trees_matrix_tree(empty_graph(3)) == 0);  // disconnected
  CHECK_THROWS_AS(spanning_trees_matrix_tree(Graph()), Error);
}

TEST_CASE("spectral tree counts agree with the matrix-tree theorem") {
  for (const auto& [name, g] : module_battery_g1()) {
    CAPTURE(name);
    const double spectral = spanning_trees_spectral(g);
    const double exact = mpq_class(spanning_trees_matrix_tree(g)).get_d();
    CHECK(std::fabs(spectral - exact) <= 1e-9 * exact);
  }
  CHECK(spanning_trees_spectral(complete(1)) == 1.0);
  CHECK_THROWS_AS(spanning_trees_spectral(empty_graph(2)), Error);
}

TEST_CASE("join spanning-tree closed forms: oracle-confirmed constants") {
  // Candidates confirmed by the matrix-tree oracle before being frozen here.
  CHECK(sv_join_trees_exact(complete(3), complete(2)) == 490);
  CHECK(sv_join_trees_exact(cycle(4), complete(1)) == 192);
  CHECK(se_join_trees_exact(cycle(3), complete(1)) == 50);
  CHECK(spanning_trees_matrix_tree(sv_join(complete(3), complete(2)).graph) ==
        490);
  CHECK(spanning_trees_matrix_tree(sv_join(cycle(4), complete(1)).graph) ==
        192);
  CHECK(spanning_trees_matrix_tree(se_join(cycle(3), complete(1)).graph) ==
        50);
}

TEST_CASE("join spanning-tree closed forms across the battery") {
  for (const auto& [n1, g1] : module_battery_g1()) {
    for (const auto& [n2, g2] : module_battery_g2()) {
      CAPTURE(n1);
      CAPTURE(n2);
      const RegularProfile p1 = regular_profile(g1);
      const RegularProfile p2 = regular_profile(g2);
      const Spectrum mu = nl_spectrum_or_zeros(g1);
      const Spectrum nu = nl_spectrum_or_zeros(g2);
      for (const bool sv : {true, false}) {
        CAPTURE(sv);
        const mpz_class exact =
            sv ? sv_join_trees_exact(g1, g2) : se_join_trees_exact(g1, g2);
        const Graph join = (sv ? sv_join(g1, g2) : se_join(g1, g2)).graph;
        CHECK(exact == spanning_trees_matrix_tree(join));

        const long double product = sv
                                        ? sv_join_trees_product(p1, mu, p2, nu)
                                        : se_join_trees_product(p1, mu, p2, nu);
        const long double exact_ld = mpq_class(exact).get_d();
        CHECK(std::fabs(static_cast<double>((product - exact_ld) / exact_ld)) <=
              1e-6);

        // The rounded floating product reproduces the exact integer whenever
        // the count fits the accumulated precision; beyond that only the
        // exact-rational evaluation is authoritative.
        const mpz_class rounded = sv ? sv_join_trees_closed(p1, mu, p2, nu)
                                     : se_join_trees_closed(p1, mu, p2, nu);
        if (mpz_sizeinbase(exact.get_mpz_t(), 2) <= 52) {
          CHECK(rounded == exact);
        } else {
          const mpz_class diff = rounded > exact ? rounded - exact : exact - rounded;
          CHECK(diff * mpz_class(1000000000000L) <= exact);  // 1e-12 relative
        }
      }
    }
  }
}

TEST_CASE("degree-Kirchhoff fixed points") {
  CHECK(std::fabs(degree_kirchhoff_spectral(complete(2)) - 1.0) <= 1e-12);
  CHECK(std::fabs(degree_kirchhoff_spectral(complete(3)) - 8.0) <= 1e-12);
  CHECK(std::fabs(degree_kirchhoff_spectral(cycle(4)) - 20.0) <= 1e-12);
  CHECK(std::fabs(degree_kirchhoff_resistance(complete(2)) - 1.0) <= 1e-12);
  CHECK(std::fabs(degree_kirchhoff_resistance(complete(3)) - 8.0) <= 1e-12);
  CHECK(std::fabs(degree_kirchhoff_resistance(cycle(4)) - 20.0) <= 1e-12);
  CHECK(degree_kirchhoff_spectral(complete(1)) == 0.0);
  CHECK_THROWS_AS(degree_kirchhoff_spectral(empty_graph(2)), Error);
  CHECK_THROWS_AS(degree_kirchhoff_resistance(empty_graph(2)), Error);
}

TEST_CASE("spectral and resistance Kirchhoff agree on singles") {
  for (const auto& [name, g] : module_battery_g1()) {
    CAPTURE(name);
    const double a = degree_kirchhoff_spectral(g);
    const double b = degree_kirchhoff_resistance(g);
    CHECK(std::fabs(a - b) <= 1e-9 * std::fabs(a));
  }
}

TEST_CASE("join degree-Kirchhoff closed forms across the battery") {
  for (const auto& [n1, g1] : module_battery_g1()) {
    for (const auto& [n2, g2] : module_battery_g2()) {
      CAPTURE(n1);
      CAPTURE(n2);
      const RegularProfile p1 = regular_profile(g1);
      const RegularProfile p2 = regular_profile(g2);
      const Spectrum mu = nl_spectrum_or_zeros(g1);
      const Spectrum nu = nl_spectrum_or_zeros(g2);
      for (const bool sv : {true, false}) {
        CAPTURE(sv);
        const double closed = sv ? sv_join_kirchhoff_closed(p1, mu, p2, nu)
                                 : se_join_kirchhoff_closed(p1, mu, p2, nu);
        const Graph join = (sv ? sv_join(g1, g2) : se_join(g1, g2)).graph;
        const double spectral = degree_kirchhoff_spectral(join);
        const double resistance = degree_kirchhoff_resistance(join);
        CHECK(std::fabs(closed - spectral) <= 1e-9 * std::fabs(spectral));
        CHECK(std::fabs(closed - resistance) <= 1e-6 * std::fabs(resistance));
      }
    }
  }
}

TEST_CASE("invariant reports") {
  const InvariantReport r = invariant_report(petersen());
  CHECK(r.spanning_trees == 2000);
  CHECK(std::fabs(r.kirchhoff - 297.0) <= 1e-9 * 297.0);
  const std::string json = invariant_report_json(r);
  CHECK(json.find("\"graph\": \"IheA@GUAo\"") != std::string::npos);
  CHECK(json.find("\"spanning_trees\": \"2000\"") != std::string::npos);
  CHECK(json.find("\"matrix-tree\"") != std::string::npos);
  CHECK(json.find("\"spectral\"") != std::string::npos);
  CHECK_THROWS_AS(invariant_report(empty_graph(2)), Error);
}
