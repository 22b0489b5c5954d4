#include <benchmark/benchmark.h>

#include <random>

#include "specjoin/closed_form.hpp"
#include "specjoin/constructions.hpp"
#include "specjoin/exact.hpp"
#include "specjoin/generators.hpp"
#include "specjoin/graph6.hpp"
#include "specjoin/invariants.hpp"
#include "specjoin/jacobi.hpp"
#include "specjoin/nl.hpp"
#include "specjoin/switching.hpp"

namespace {

using namespace specjoin;

// Random graph on a spanning cycle, so no vertex is isolated and the
// normalized Laplacian and pencil routines are always defined.
Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit(rng) < p) g.add_edge(i, j);
  return g;
}

void bm_jacobi_nl(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.4, 7u);
  const SymMatrix l = normalized_laplacian(g);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigenvalues(l));
  state.SetComplexityN(n);
}
BENCHMARK(bm_jacobi_nl)->Arg(16)->Arg(32)->Arg(50)->Complexity();

void bm_pencil_charpoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.4, 11u);
  for (auto _ : state) benchmark::DoNotOptimize(pencil_charpoly(g));
  state.SetComplexityN(n);
}
BENCHMARK(bm_pencil_charpoly)->Arg(8)->Arg(16)->Arg(24)->Complexity();

void bm_graph6_round_trip(benchmark::State& state) {
  const Graph g = random_graph(62, 0.5, 13u);
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(write_graph6(g)));
}
BENCHMARK(bm_graph6_round_trip);

void bm_gm_search_q4(benchmark::State& state) {
  const Graph q4 = hypercube(4);
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gm_search(q4, size));
}
BENCHMARK(bm_gm_search_q4)->Arg(4)->Arg(8);

void bm_closed_spectrum_sv(benchmark::State& state) {
  const Graph g1 = petersen();
  const Graph g2 = cycle(5);
  const RegularProfile p1 = regular_profile(g1);
  const RegularProfile p2 = regular_profile(g2);
  const Spectrum mu = nl_spectrum_direct(g1);
  const Spectrum nu = nl_spectrum_direct(g2);
  for (auto _ : state)
    benchmark::DoNotOptimize(sv_join_spectrum_closed(p1, mu, p2, nu));
}
BENCHMARK(bm_closed_spectrum_sv);

void bm_direct_spectrum_sv(benchmark::State& state) {
  const Graph join = sv_join(petersen(), cycle(5)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(nl_spectrum_direct(join));
}
BENCHMARK(bm_direct_spectrum_sv);

void bm_trees_exact_sv(benchmark::State& state) {
  const Graph g1 = petersen();
  const Graph g2 = cycle(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(sv_join_trees_exact(g1, g2));
}
BENCHMARK(bm_trees_exact_sv);

void bm_trees_matrix_tree_sv(benchmark::State& state) {
  const Graph join = sv_join(petersen(), cycle(5)).graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(spanning_trees_matrix_tree(join));
}
BENCHMARK(bm_trees_matrix_tree_sv);

}  // namespace

BENCHMARK_MAIN();
