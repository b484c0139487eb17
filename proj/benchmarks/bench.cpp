#include <benchmark/benchmark.h>

#include "signo/coherence.hpp"
#include "signo/crosspoly.hpp"
#include "signo/flipdyn.hpp"
#include "signo/mppcore.hpp"
#include "signo/pathspace.hpp"
#include "signo/signlattice.hpp"
#include "signo/verify.hpp"

using namespace signo;

static void path_enumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto paths = enumerate_paths(n);
    benchmark::DoNotOptimize(paths);
  }
}
BENCHMARK(path_enumeration)->DenseRange(4, 7);

static void string_enumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto strings = enumerate_strings(n);
    benchmark::DoNotOptimize(strings);
  }
}
BENCHMARK(string_enumeration)->DenseRange(3, 5);

// LP-based coherence test over the full path population at dimension n.
static void coherence_lp_all_paths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto o = Orientation::canonical(n);
  const auto paths = enumerate_paths(n);
  for (auto _ : state) {
    int coherent = 0;
    for (const auto& p : paths)
      if (is_coherent_lp(p, o)) ++coherent;
    benchmark::DoNotOptimize(coherent);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(paths.size()));
}
BENCHMARK(coherence_lp_all_paths)->DenseRange(3, 5);

static void vertex_construction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto o = Orientation::canonical(n);
  for (auto _ : state) {
    auto verts = mpp_vertices(o);
    benchmark::DoNotOptimize(verts);
  }
}
BENCHMARK(vertex_construction)->DenseRange(4, 7);

static void facet_construction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto o = Orientation::canonical(n);
  for (auto _ : state) {
    auto facets = mpp_facets(o);
    benchmark::DoNotOptimize(facets);
  }
}
BENCHMARK(facet_construction)->DenseRange(4, 7);

// Enumerate all section averages and filter to hull vertices by exact LP.
static void brute_hull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto o = Orientation::canonical(n);
  for (auto _ : state) {
    auto verts = brute_mpp(o);
    benchmark::DoNotOptimize(verts);
  }
}
BENCHMARK(brute_hull)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void face_enumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int64_t total = 0;
    for (int m = 0; m <= n - 2; ++m) total += static_cast<int64_t>(faces(n, m).size());
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(face_enumeration)->DenseRange(4, 7);

static void skeleton_diameter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int d = mpp_diameter(n);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(skeleton_diameter)->DenseRange(3, 7);

static void flip_graph_diameter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int d = flip_diameter(n);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(flip_graph_diameter)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
