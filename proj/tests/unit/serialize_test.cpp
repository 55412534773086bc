#include <gtest/gtest.h>

#include "instances.hpp"
#include "kgraph/serialize.hpp"

using namespace kgraph;
using kgraph::testing::build;
using kgraph::testing::element;
using kgraph::testing::instance;
using nlohmann::json;

TEST(Serialize, PathCarriesBlocks) {
  const Skeleton s = instance("A");
  const json j = serial::path(s, parse_path(s, "r.b"));
  EXPECT_EQ(j["path"], "b.r");
  EXPECT_EQ(j["range"], "u");
  EXPECT_EQ(j["degree"], json::parse("[1,1]"));
  EXPECT_EQ(j["blocks"], json::parse(R"([["b"],["r"]])"));
}

TEST(Serialize, ValidationNamesTheOffendingEdges) {
  const json j = serial::validation(validate_squares(instance("D")));
  EXPECT_FALSE(j["passed"].get<bool>());
  ASSERT_FALSE(j["issues"].empty());
  EXPECT_EQ(j["issues"][0]["edges"], json::parse(R"(["b2","r"])"));
}

TEST(Serialize, ClassificationAndExhaustive) {
  const Skeleton s = instance("B");
  EXPECT_EQ(serial::classification(s, classify_vertices(s)),
            json::parse(R"({"sce":["w"],"fin":["v","w"],"rg":["v"]})"));
  const json ex = serial::exhaustive(s, is_exhaustive(s, *s.find_vertex("w"), {}, Mode::exact()));
  EXPECT_EQ(ex, json::parse(R"({"verdict":"not_exhaustive","witness":"w"})"));
}

TEST(Serialize, TruncatedElementShowsInfinity) {
  const Skeleton s = instance("A");
  const auto space = enumerate_path_space(s, Mode::truncated(Degree{1, 1}));
  EXPECT_EQ(serial::space_element(s, space[0])["degree"], "(inf,inf)");
}

TEST(Serialize, BoundaryCertificate) {
  const auto b = build(instance("B"));
  const Skeleton& s = b.space->skeleton();
  const auto& v = (*b.space)[b.space->index_of(parse_path(s, "v"))];
  const json j = serial::boundary_verdict(s, v, is_boundary(*b.space, v));
  EXPECT_EQ(j["status"], "not_boundary");
  bool saw_failure = false;
  for (const auto& entry : j["certificate"]) {
    if (entry["witness"].is_null()) {
      saw_failure = true;
      EXPECT_EQ(entry["set"], json::parse(R"(["e"])"));
    }
  }
  EXPECT_TRUE(saw_failure);
}

TEST(Serialize, GroupoidSummary) {
  const auto b = build(instance("B"));
  const json j = serial::groupoid(*b.boundary);
  EXPECT_EQ(j["size"], 4);
  EXPECT_EQ(j["units"], 2);
  EXPECT_FALSE(j["incomplete"].get<bool>());
  EXPECT_EQ(j["orbits"].size(), 1u);
  for (const auto& g : j["elements"]) EXPECT_EQ(g["orbit"], 0);
}

TEST(Serialize, AlgebraElementAndRelation) {
  const auto b = build(instance("B"));
  const auto i = element(*b.full, "e", Offset{1}, "w");
  const json f = serial::algebra_element(AlgebraElement::delta(b.full, i, Scalar{2.0, -1.0}));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0][1], json::parse("[1]"));
  EXPECT_EQ(f[0][3], 2.0);
  EXPECT_EQ(f[0][4], -1.0);

  const json r = serial::relation(RelationReport{"x", 3, 4, 0.5, 0.1, false});
  EXPECT_EQ(r["verdict"], "fail");
  EXPECT_EQ(r["seed"], 4);
}

TEST(Serialize, DumpsAreStable) {
  const auto first = serial::groupoid(*build(instance("E")).full).dump();
  const auto second = serial::groupoid(*build(instance("E")).full).dump();
  EXPECT_EQ(first, second);
}
