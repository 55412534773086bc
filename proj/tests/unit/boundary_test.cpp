#include <gtest/gtest.h>

#include <algorithm>

#include "instances.hpp"
#include "kgraph/boundary.hpp"
#include "kgraph/error.hpp"

using namespace kgraph;
using kgraph::testing::instance;

namespace {

Path P(const Skeleton& s, const std::string& text) { return parse_path(s, text); }
VertexIndex V(const Skeleton& s, const std::string& id) { return *s.find_vertex(id); }

std::vector<std::string> names(const Skeleton& s, const std::vector<Path>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(path_to_string(s, p));
  return out;
}

Skeleton edgeless() { return Skeleton(2, {"u"}, {}, {}); }

}  // namespace

TEST(Classify, SingleEdge) {
  const Skeleton s = instance("B");
  const auto c = classify_vertices(s);
  EXPECT_EQ(c.sce, std::vector<VertexIndex>{V(s, "w")});
  EXPECT_EQ(c.rg, std::vector<VertexIndex>{V(s, "v")});
  EXPECT_EQ(c.fin.size(), 2u);
}

TEST(Classify, LoopsAndEdgeless) {
  const auto a = classify_vertices(instance("A"));
  EXPECT_TRUE(a.sce.empty());
  EXPECT_EQ(a.rg.size(), 1u);
  const auto e = classify_vertices(edgeless());
  EXPECT_TRUE(e.rg.empty());
  EXPECT_EQ(e.sce.size(), 1u);
}

TEST(Exhaustive, Examples) {
  const Skeleton s = instance("B");
  EXPECT_EQ(is_exhaustive(s, V(s, "v"), {P(s, "e")}, Mode::exact()).verdict,
            Exhaustivity::exhaustive);
  EXPECT_EQ(is_exhaustive(s, V(s, "v"), {P(s, "v")}, Mode::exact()).verdict,
            Exhaustivity::exhaustive);
  const auto empty = is_exhaustive(s, V(s, "w"), {}, Mode::exact());
  EXPECT_EQ(empty.verdict, Exhaustivity::not_exhaustive);
  ASSERT_TRUE(empty.witness);
  EXPECT_EQ(*empty.witness, P(s, "w"));
}

TEST(Exhaustive, RejectsForeignMembers) {
  const Skeleton s = instance("B");
  EXPECT_THROW(is_exhaustive(s, V(s, "w"), {P(s, "e")}, Mode::exact()), DomainError);
}

TEST(Exhaustive, BoundedPassIsUnknownAndFailureIsCertain) {
  const Skeleton s = instance("A");
  const auto u = V(s, "u");
  EXPECT_THROW(is_exhaustive(s, u, {P(s, "b")}, Mode::exact()), UnsupportedMode);
  EXPECT_EQ(is_exhaustive(s, u, {P(s, "b")}, Mode::truncated(Degree{2, 2})).verdict,
            Exhaustivity::unknown);
  EXPECT_EQ(is_exhaustive(s, u, {}, Mode::truncated(Degree{1, 1})).verdict,
            Exhaustivity::not_exhaustive);
}

TEST(MinimalExhaustive, SingleEdge) {
  const Skeleton s = instance("B");
  const auto at_v = minimal_exhaustive_sets(s, V(s, "v"));
  ASSERT_EQ(at_v.size(), 2u);
  EXPECT_EQ(names(s, at_v[0].members), std::vector<std::string>{"v"});
  EXPECT_EQ(names(s, at_v[1].members), std::vector<std::string>{"e"});
  const auto at_w = minimal_exhaustive_sets(s, V(s, "w"));
  ASSERT_EQ(at_w.size(), 1u);
  EXPECT_EQ(names(s, at_w[0].members), std::vector<std::string>{"w"});
}

TEST(MinimalExhaustive, CyclicSkeletonIsRejected) {
  const Skeleton s = instance("A");
  EXPECT_THROW(minimal_exhaustive_sets(s, V(s, "u")), UnsupportedMode);
}

TEST(PathSpace, ExactSingleEdge) {
  const Skeleton s = instance("B");
  const auto space = enumerate_path_space(s, Mode::exact());
  EXPECT_EQ(space.size(), 3u);
  EXPECT_TRUE(space.find(P(s, "e")).has_value());
  const auto truncated = enumerate_path_space(instance("A"), Mode::truncated(Degree{1, 0}));
  EXPECT_THROW(truncated.index_of(P(instance("A"), "r")), DomainError);
}

TEST(PathSpace, EdgelessIsItsVertices) {
  const auto space = enumerate_path_space(edgeless(), Mode::exact());
  ASSERT_EQ(space.size(), 1u);
  EXPECT_TRUE(space[0].path.is_vertex());
  EXPECT_EQ(boundary_paths(space), std::vector<std::size_t>{0});
}

TEST(PathSpace, TruncatedLoopsAreMarkedUnbounded) {
  const Skeleton s = instance("A");
  EXPECT_THROW(enumerate_path_space(s, Mode::exact()), UnsupportedMode);
  const auto space = enumerate_path_space(s, Mode::truncated(Degree{1, 1}));
  ASSERT_EQ(space.size(), 4u);
  for (const auto& x : space.elements()) {
    EXPECT_TRUE(x.truncated);
    EXPECT_FALSE(x.degree().is_finite());
    EXPECT_EQ(x.degree().coords, (std::vector<std::optional<std::int32_t>>{std::nullopt, std::nullopt}));
  }
}

TEST(PathSpace, PrefixTable) {
  const Skeleton s = instance("A");
  const PathSpaceElement x{P(s, "b.r"), {false, false}, false};
  const auto table = x.prefix_table(s);
  EXPECT_EQ(table.size(), 4u);
  EXPECT_EQ(path_to_string(s, table.at({0, 1})), "r");
  EXPECT_EQ(x.vertex_at(s, Degree{1, 0}), V(s, "u"));
}

TEST(Shift, Examples) {
  const Skeleton s = instance("B");
  const PathSpaceElement e{P(s, "e"), {false}, false};
  EXPECT_EQ(shift(s, e, Degree{1}).path, P(s, "w"));
  EXPECT_EQ(shift(s, e, Degree{0}).path, e.path);
  EXPECT_THROW(shift(s, e, Degree{2}), DomainError);
}

TEST(Shift, TruncatedClass) {
  const Skeleton s = instance("A");
  const auto space = enumerate_path_space(s, Mode::truncated(Degree{1, 1}));
  const auto& top = space[space.index_of(P(s, "b.r"))];
  const auto shifted = shift(s, top, Degree{1, 0});
  EXPECT_EQ(shifted.path.degree(), (Degree{0, 1}));
  EXPECT_TRUE(shifted.truncated);
  EXPECT_THROW(shift(s, top, Degree{2, 0}), UnsupportedMode);
}

TEST(Prepend, Examples) {
  const Skeleton b = instance("B");
  const PathSpaceElement w{P(b, "w"), {false}, false};
  EXPECT_EQ(prepend(b, P(b, "e"), w).path, P(b, "e"));
  EXPECT_EQ(prepend(b, P(b, "w"), w).path, w.path);
  EXPECT_THROW(prepend(b, P(b, "e"), PathSpaceElement{P(b, "e"), {false}, false}), DomainError);

  const Skeleton a = instance("A");
  const PathSpaceElement r{P(a, "r"), {true, true}, true};
  const auto br = prepend(a, P(a, "b"), r);
  EXPECT_EQ(path_to_string(a, br.path), "b.r");
  EXPECT_EQ(br.path.degree(), (Degree{1, 1}));
  EXPECT_EQ(shift(a, br, Degree{1, 0}).path, r.path);
}

TEST(Boundary, SingleEdge) {
  const Skeleton s = instance("B");
  const auto space = enumerate_path_space(s, Mode::exact());
  auto elem = [&](const std::string& t) { return space[space.index_of(P(s, t))]; };

  EXPECT_TRUE(is_boundary(space, elem("e")).is_boundary());
  EXPECT_TRUE(is_boundary(space, elem("w")).is_boundary());

  const auto v = is_boundary(space, elem("v"));
  EXPECT_EQ(v.status, BoundaryVerdict::Status::not_boundary);
  const auto failing = std::find_if(v.entries.begin(), v.entries.end(),
                                    [](const CertificateEntry& c) { return !c.witness; });
  ASSERT_NE(failing, v.entries.end());
  EXPECT_TRUE(failing->m.is_zero());
  EXPECT_EQ(names(s, failing->set), std::vector<std::string>{"e"});

  std::vector<std::string> found;
  for (auto i : boundary_paths(space)) found.push_back(path_to_string(s, space[i].path));
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, (std::vector<std::string>{"e", "w"}));
}

TEST(Boundary, TwoEdgeLine) {
  const Skeleton s = instance("E");
  const auto space = enumerate_path_space(s, Mode::exact());
  std::vector<std::string> found;
  for (auto i : boundary_paths(space)) found.push_back(path_to_string(s, space[i].path));
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, (std::vector<std::string>{"f2.f3", "f3", "v3"}));
}

TEST(Boundary, TruncatedIsUndecided) {
  const Skeleton s = instance("A");
  const auto space = enumerate_path_space(s, Mode::truncated(Degree{1, 1}));
  EXPECT_EQ(is_boundary(space, space[0]).status, BoundaryVerdict::Status::undecided);
  EXPECT_THROW(boundary_paths(space), UnsupportedMode);
}
