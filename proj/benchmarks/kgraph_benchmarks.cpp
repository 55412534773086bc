#include <benchmark/benchmark.h>

#include <random>

#include "kgraph/algebra.hpp"
#include "kgraph/boundary.hpp"
#include "kgraph/groupoid.hpp"
#include "kgraph/paths.hpp"

using namespace kgraph;

namespace {

// A single vertex with one loop per color, all squares commuting.
Skeleton commuting_loops(int k) {
  std::vector<EdgeSpec> edges;
  std::vector<SquareSpec> squares;
  for (int c = 0; c < k; ++c) edges.push_back({"l" + std::to_string(c), c + 1, "u", "u"});
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const auto a = "l" + std::to_string(i);
      const auto b = "l" + std::to_string(j);
      squares.push_back({a, b, b, a});
    }
  }
  return Skeleton(k, {"u"}, edges, squares);
}

// Directed line v0 <- v1 <- ... <- vn.
Skeleton line(int n) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    edges.push_back({"f" + std::to_string(i), 1, vertices[static_cast<std::size_t>(i)],
                     vertices[static_cast<std::size_t>(i + 1)]});
  }
  return Skeleton(1, vertices, edges, {});
}

}  // namespace

// Normal form of a reverse-sorted word of length k * n: the worst case for bubble sorting.
static void BM_Normalize(benchmark::State& state) {
  const int k = 3;
  const int n = static_cast<int>(state.range(0));
  const Skeleton s = commuting_loops(k);
  std::vector<EdgeIndex> word;
  for (int c = k - 1; c >= 0; --c) {
    for (int i = 0; i < n; ++i) word.push_back(*s.find_edge("l" + std::to_string(c)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(normalize(s, VertexIndex{0}, word));
  state.SetComplexityN(k * n);
}
BENCHMARK(BM_Normalize)->RangeMultiplier(2)->Range(2, 32)->Complexity();

static void BM_BuildGroupoid(benchmark::State& state) {
  const auto g = omega(2, Degree{static_cast<std::int32_t>(state.range(0)), static_cast<std::int32_t>(state.range(0))});
  auto space = std::make_shared<const FinitePathSpace>(enumerate_path_space(g.skeleton, Mode::exact()));
  for (auto _ : state) benchmark::DoNotOptimize(build_path_groupoid(space));
  state.counters["elements"] = static_cast<double>(build_path_groupoid(space).size());
}
BENCHMARK(BM_BuildGroupoid)->DenseRange(1, 3);

static void BM_BoundaryPaths(benchmark::State& state) {
  const Skeleton s = line(static_cast<int>(state.range(0)));
  const auto space = enumerate_path_space(s, Mode::exact());
  for (auto _ : state) benchmark::DoNotOptimize(boundary_paths(space));
}
BENCHMARK(BM_BoundaryPaths)->DenseRange(2, 8, 2);

static void BM_Convolve(benchmark::State& state) {
  auto space = std::make_shared<const FinitePathSpace>(
      enumerate_path_space(line(static_cast<int>(state.range(0))), Mode::exact()));
  const GroupoidPtr G = std::make_shared<const FiniteGroupoid>(build_path_groupoid(space));
  SampleSource rng(kDefaultSeed);
  const auto f = rng.element(G);
  const auto g = rng.element(G);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, g));
  state.counters["elements"] = static_cast<double>(G->size());
}
BENCHMARK(BM_Convolve)->DenseRange(2, 10, 4);

BENCHMARK_MAIN();
