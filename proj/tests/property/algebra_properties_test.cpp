#include <gtest/gtest.h>

#include "generators.hpp"
#include "kgraph/algebra.hpp"

using namespace kgraph;
using kgraph::testing::Engine;

namespace {

constexpr int kInstances = 12;
constexpr int kSamples = 20;

struct Pair {
  GroupoidPtr full;
  GroupoidPtr boundary;
};

Pair make(const Skeleton& s) {
  auto space = std::make_shared<const FinitePathSpace>(enumerate_path_space(s, Mode::exact()));
  return {std::make_shared<const FiniteGroupoid>(build_path_groupoid(space)),
          std::make_shared<const FiniteGroupoid>(build_boundary_groupoid(space))};
}

void expect_all_pass(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.identity << " deviation " << r.max_deviation;
}

}  // namespace

TEST(AlgebraProperty, StarAlgebraLawsOnProducts) {
  Engine rng(401);
  for (int t = 0; t < kInstances; ++t) {
    const auto g = make(kgraph::testing::product(
        {kgraph::testing::random_dag(rng, 2, 2), kgraph::testing::random_dag(rng, 3, 2)}));
    expect_all_pass(verify_algebra_properties(g.full, kSamples, kDefaultTolerance, rng()));
    expect_all_pass(verify_gauge(g.full, kSamples, kDefaultTolerance, rng()));
    EXPECT_TRUE(verify_quotient(g.full, g.boundary, kSamples, rng()).passed);
  }
}

TEST(AlgebraProperty, RelationsOnRandomOneGraphs) {
  Engine rng(402);
  for (int t = 0; t < kInstances; ++t) {
    const auto g = make(kgraph::testing::random_dag(rng, 4, 5));
    const auto seed = rng();
    expect_all_pass(verify_algebra_properties(g.full, kSamples, kDefaultTolerance, seed));
    expect_all_pass(verify_gauge(g.boundary, kSamples, kDefaultTolerance, seed));
    const auto [i, ii] = verify_toeplitz_pair(g.full, kSamples, kDefaultTolerance, seed);
    EXPECT_TRUE(i.passed);
    EXPECT_TRUE(ii.passed);
    EXPECT_TRUE(verify_ck_pair(g.boundary, kSamples, kDefaultTolerance, seed).passed);
    EXPECT_TRUE(generation_check(g.boundary).passed());
  }
}

TEST(AlgebraProperty, INormBoundsTheRegularRepresentation) {
  Engine rng(403);
  for (int t = 0; t < kInstances; ++t) {
    const auto g = make(kgraph::testing::random_acyclic(rng));
    RegularRepresentation pi(g.full);
    SampleSource source(rng());
    for (int n = 0; n < kSamples; ++n) {
      const auto f = source.element(g.full);
      for (auto u : g.full->objects()) {
        const double op = pi(f, u).operatorNorm();
        EXPECT_LE(op, i_norm(f) + 1e-9);
      }
    }
  }
}

TEST(AlgebraProperty, RankOneDecompositionIsExact) {
  Engine rng(404);
  for (int t = 0; t < kInstances; ++t) {
    const Skeleton s = kgraph::testing::random_dag(rng, 4, 6);
    SampleSource source(rng());
    const auto f = source.vertex_function(s);
    const auto check = check_rank_one_properties(s, f, rank_one_decomposition(s, f).pairs);
    EXPECT_TRUE(check.exact());
  }
}

TEST(AlgebraProperty, PsiZeroIsAStarHomomorphism) {
  Engine rng(405);
  for (int t = 0; t < kInstances; ++t) {
    const Skeleton s = kgraph::testing::random_acyclic(rng);
    const auto g = make(s);
    SampleSource source(rng());
    const auto f = source.vertex_function(s);
    const auto h = source.vertex_function(s);
    VertexFunction fh;
    for (std::uint32_t v = 0; v < s.vertices().size(); ++v) fh.set(VertexIndex{v}, f(VertexIndex{v}) * h(VertexIndex{v}));
    EXPECT_LE(max_deviation(convolve(psi0(f, g.full), psi0(h, g.full)), psi0(fh, g.full)), 1e-12);
    VertexFunction fbar;
    for (const auto& [v, c] : f.values()) fbar.set(v, std::conj(c));
    EXPECT_EQ(max_deviation(involution(psi0(f, g.full)), psi0(fbar, g.full)), 0.0);
  }
}
