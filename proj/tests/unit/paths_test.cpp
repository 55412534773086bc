#include <gtest/gtest.h>

#include "instances.hpp"
#include "kgraph/error.hpp"
#include "kgraph/paths.hpp"

using namespace kgraph;
using kgraph::testing::instance;

namespace {

Path P(const Skeleton& s, const std::string& text) { return parse_path(s, text); }

}  // namespace

TEST(AllPaths, CommutingLoopsHaveOnePathPerDegree) {
  const Skeleton s = instance("A");
  const auto paths = all_paths(s, Degree{2, 1});
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(path_to_string(s, paths[0]), "b.b.r");
  EXPECT_EQ(paths[0].degree(), (Degree{2, 1}));
}

TEST(AllPaths, DegreeZeroGivesVertices) {
  const Skeleton s = instance("E");
  const auto paths = all_paths(s, Degree{0});
  ASSERT_EQ(paths.size(), 3u);
  for (const auto& p : paths) EXPECT_TRUE(p.is_vertex());
}

TEST(AllPaths, NoLongPathsOnSingleEdge) {
  EXPECT_TRUE(all_paths(instance("B"), Degree{2}).empty());
}

TEST(AllPaths, NormalFormsAreColorSorted) {
  const Skeleton s = instance("C");
  for (const auto& p : all_paths(s, Degree{1, 2, 1})) {
    const auto blocks = p.blocks();
    ASSERT_EQ(blocks.size(), 3u);
    EXPECT_EQ(blocks[0].size(), 1u);
    EXPECT_EQ(blocks[1].size(), 2u);
    EXPECT_EQ(blocks[2].size(), 1u);
  }
}

TEST(Compose, SquareReordersColors) {
  const Skeleton s = instance("A");
  const Path rb = compose(s, P(s, "r"), P(s, "b"));
  EXPECT_EQ(path_to_string(s, rb), "b.r");
  EXPECT_EQ(rb.degree(), (Degree{1, 1}));
}

TEST(Compose, VerticesAreIdentities) {
  const Skeleton s = instance("B");
  EXPECT_EQ(compose(s, P(s, "e"), P(s, "w")), P(s, "e"));
  EXPECT_EQ(compose(s, P(s, "v"), P(s, "e")), P(s, "e"));
}

TEST(Compose, RejectsNonComposable) {
  const Skeleton s = instance("B");
  EXPECT_THROW(compose(s, P(s, "e"), P(s, "v")), DomainError);
}

TEST(Factorize, PrefixOfTheOtherColor) {
  const Skeleton s = instance("A");
  const auto [xi, eta] = factorize(s, P(s, "b.r"), Degree{0, 1});
  EXPECT_EQ(path_to_string(s, xi), "r");
  EXPECT_EQ(path_to_string(s, eta), "b");
}

TEST(Factorize, TrivialEnds) {
  const Skeleton s = instance("E");
  const Path f = P(s, "f2.f3");
  EXPECT_EQ(factorize(s, f, Degree{0}), std::make_pair(P(s, "v1"), f));
  EXPECT_EQ(factorize(s, f, Degree{2}), std::make_pair(f, P(s, "v3")));
  EXPECT_THROW(factorize(s, f, Degree{3}), DomainError);
}

TEST(Segment, MiddleFactor) {
  const Skeleton s = instance("A");
  const Path bbr = P(s, "b.b.r");
  EXPECT_EQ(path_to_string(s, segment(s, bbr, Degree{1, 0}, Degree{2, 1})), "b.r");
  EXPECT_TRUE(segment(s, bbr, Degree{1, 0}, Degree{1, 0}).is_vertex());
  EXPECT_EQ(segment(s, bbr, Degree{0, 0}, Degree{2, 1}), bbr);
  EXPECT_EQ(segment(s, bbr, Degree{0, 0}, Degree{1, 1}), factorize(s, bbr, Degree{1, 1}).first);
  EXPECT_THROW(segment(s, bbr, Degree{1, 1}, Degree{1, 0}), DomainError);
}

TEST(LambdaMin, CommutingLoops) {
  const Skeleton s = instance("A");
  const auto pairs = lambda_min(s, P(s, "b"), P(s, "r"));
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(path_to_string(s, pairs[0].alpha), "r");
  EXPECT_EQ(path_to_string(s, pairs[0].beta), "b");
}

TEST(LambdaMin, PathWithItself) {
  const Skeleton s = instance("E");
  const Path f = P(s, "f2");
  const auto pairs = lambda_min(s, f, f);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].alpha, P(s, "v2"));
  EXPECT_EQ(pairs[0].beta, P(s, "v2"));
}

TEST(LambdaMin, VertexAgainstEdge) {
  const Skeleton s = instance("B");
  const auto pairs = lambda_min(s, P(s, "v"), P(s, "e"));
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].alpha, P(s, "e"));
  EXPECT_EQ(pairs[0].beta, P(s, "w"));
}

TEST(LambdaMin, DifferentRangesGiveNothing) {
  const Skeleton s = instance("B");
  EXPECT_TRUE(lambda_min(s, P(s, "v"), P(s, "w")).empty());
}

TEST(MinCommonExtensions, Examples) {
  const Skeleton a = instance("A");
  const auto br = min_common_extensions(a, {P(a, "b")}, {P(a, "r")});
  ASSERT_EQ(br.size(), 1u);
  EXPECT_EQ(path_to_string(a, br[0]), "b.r");
  EXPECT_EQ(min_common_extensions(a, {P(a, "b")}, {P(a, "b")}), std::vector<Path>{P(a, "b")});

  const Skeleton b = instance("B");
  EXPECT_EQ(min_common_extensions(b, {P(b, "v")}, {P(b, "e")}), std::vector<Path>{P(b, "e")});
  EXPECT_THROW(min_common_extensions(b, {P(b, "v"), P(b, "e")}, {P(b, "e")}), DomainError);
}

TEST(Alignment, MaxSizeOne) {
  const Skeleton b = instance("B");
  const auto rb = alignment_report(b, Degree{1});
  EXPECT_EQ(rb.max_size, 1u);
  EXPECT_EQ(rb.pairs_checked, 5u);
  EXPECT_TRUE(rb.passed(1));
  EXPECT_EQ(alignment_report(instance("A"), Degree{1, 1}).max_size, 1u);
  EXPECT_EQ(alignment_report(instance("E"), Degree{0}).max_size, 1u);
}

TEST(Omega, CountsMorphisms) {
  const auto line = omega(1, Degree{2});
  EXPECT_EQ(line.skeleton.vertices().size(), 3u);
  EXPECT_EQ(line.skeleton.edges().size(), 2u);
  EXPECT_EQ(line.morphisms.size(), 6u);

  const auto square = omega(2, Degree{1, 1});
  EXPECT_EQ(square.skeleton.vertices().size(), 4u);
  EXPECT_EQ(square.skeleton.edges().size(), 4u);
  EXPECT_EQ(square.morphisms.size(), 9u);
  EXPECT_TRUE(validate_squares(square.skeleton).passed());

  const auto point = omega(3, Degree{0, 0, 0});
  EXPECT_EQ(point.skeleton.vertices().size(), 1u);
  EXPECT_TRUE(point.skeleton.edges().empty());
  EXPECT_THROW(omega(0, Degree{}), DomainError);
}

TEST(Omega, OnePathOfEachDegreeFromEachAdmissibleVertex) {
  const Degree m{2, 1};
  const auto g = omega(2, m);
  for (const auto& n : degrees_up_to(m)) {
    // One path of degree n starts (ranges) at each p with p + n <= m.
    std::size_t expected = 0;
    for (const auto& p : degrees_up_to(m)) expected += (p + n <= m) ? 1 : 0;
    EXPECT_EQ(all_paths(g.skeleton, n).size(), expected) << n.to_string();
  }
}

TEST(PathText, RoundTripsAndAcceptsAnyComposableOrder) {
  const Skeleton s = instance("A");
  EXPECT_EQ(path_to_string(s, P(s, "r.b")), "b.r");
  EXPECT_EQ(path_to_string(s, P(s, "u")), "u");
  EXPECT_THROW(P(s, "x"), DomainError);
}
