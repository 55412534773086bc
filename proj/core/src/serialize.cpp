#include "kgraph/serialize.hpp"

namespace kgraph::serial {

namespace {

std::string status_name(BoundaryVerdict::Status s) {
  switch (s) {
    case BoundaryVerdict::Status::boundary: return "boundary";
    case BoundaryVerdict::Status::not_boundary: return "not_boundary";
    case BoundaryVerdict::Status::undecided: return "undecided";
  }
  return "undecided";
}

std::string exhaustivity_name(Exhaustivity e) {
  switch (e) {
    case Exhaustivity::exhaustive: return "exhaustive";
    case Exhaustivity::not_exhaustive: return "not_exhaustive";
    case Exhaustivity::unknown: return "unknown";
  }
  return "unknown";
}

json vertex_ids(const Skeleton& s, const std::vector<VertexIndex>& vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(s.vertex(v).id);
  return out;
}

json path_string(const Skeleton& s, const std::optional<Path>& p) {
  return p ? json(path_to_string(s, *p)) : json(nullptr);
}

}  // namespace

json degree(const Degree& d) { return d.coords(); }

json offset(const Offset& m) { return m.coords(); }

json path(const Skeleton& s, const Path& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks()) {
    json ids = json::array();
    for (auto e : block) ids.push_back(s.edge(e).id);
    blocks.push_back(std::move(ids));
  }
  return {{"path", path_to_string(s, p)},
          {"range", s.vertex(p.range()).id},
          {"source", s.vertex(p.source()).id},
          {"degree", degree(p.degree())},
          {"blocks", std::move(blocks)}};
}

json paths(const Skeleton& s, const std::vector<Path>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(path(s, p));
  return out;
}

json validation(const ValidationReport& r) {
  json issues = json::array();
  for (const auto& i : r.issues) {
    issues.push_back({{"kind", i.kind}, {"edges", i.edges}, {"detail", i.detail}});
  }
  return {{"check", r.check}, {"passed", r.passed()}, {"issues", std::move(issues)}};
}

json classification(const Skeleton& s, const VertexClassification& c) {
  return {{"sce", vertex_ids(s, c.sce)}, {"fin", vertex_ids(s, c.fin)}, {"rg", vertex_ids(s, c.rg)}};
}

json exhaustive(const Skeleton& s, const ExhaustiveResult& r) {
  return {{"verdict", exhaustivity_name(r.verdict)}, {"witness", path_string(s, r.witness)}};
}

json exhaustive_sets(const Skeleton& s, const std::vector<ExhaustiveSet>& sets) {
  json out = json::array();
  for (const auto& set : sets) {
    json members = json::array();
    for (const auto& p : set.members) members.push_back(path_to_string(s, p));
    out.push_back({{"vertex", s.vertex(set.vertex).id}, {"members", std::move(members)}});
  }
  return out;
}

json lambda_min(const Skeleton& s, const std::vector<MinimalExtensionPair>& pairs) {
  json out = json::array();
  for (const auto& [alpha, beta] : pairs) {
    out.push_back({{"alpha", path_to_string(s, alpha)}, {"beta", path_to_string(s, beta)}});
  }
  return out;
}

json alignment(const Skeleton& s, const AlignmentReport& r) {
  json argmax = nullptr;
  if (r.argmax) argmax = {path_to_string(s, r.argmax->first), path_to_string(s, r.argmax->second)};
  return {{"bound", degree(r.bound)},
          {"pairs_checked", r.pairs_checked},
          {"max_size", r.max_size},
          {"argmax", std::move(argmax)},
          {"at_most_one", r.at_most_one},
          {"finitely_aligned", r.finitely_aligned},
          {"passed", r.passed(s.rank())}};
}

json space_element(const Skeleton& s, const PathSpaceElement& x) {
  return {{"path", path_to_string(s, x.path)},
          {"degree", x.degree().to_string()},
          {"truncated", x.truncated}};
}

json boundary_verdict(const Skeleton& s, const PathSpaceElement& x, const BoundaryVerdict& v) {
  json certificate = json::array();
  for (const auto& entry : v.entries) {
    json set = json::array();
    for (const auto& p : entry.set) set.push_back(path_to_string(s, p));
    certificate.push_back({{"m", degree(entry.m)},
                           {"vertex", s.vertex(entry.vertex).id},
                           {"set", std::move(set)},
                           {"witness", path_string(s, entry.witness)}});
  }
  return {{"path", path_to_string(s, x.path)},
          {"status", status_name(v.status)},
          {"certificate", std::move(certificate)}};
}

json groupoid(const FiniteGroupoid& G) {
  const Skeleton& s = G.skeleton();
  const auto orbit_list = orbits(G);
  std::map<std::size_t, std::size_t> orbit_of;
  json orbit_json = json::array();
  for (std::size_t o = 0; o < orbit_list.size(); ++o) {
    json members = json::array();
    for (auto x : orbit_list[o]) {
      orbit_of[x] = o;
      members.push_back(path_to_string(s, G.space()[x].path));
    }
    orbit_json.push_back(std::move(members));
  }
  json objects = json::array();
  for (auto x : G.objects()) objects.push_back(path_to_string(s, G.space()[x].path));
  json elements = json::array();
  std::size_t units = 0;
  for (const auto& g : G.elements()) {
    units += g.is_unit() ? 1 : 0;
    elements.push_back({{"x", path_to_string(s, G.space()[g.x].path)},
                        {"m", offset(g.m)},
                        {"y", path_to_string(s, G.space()[g.y].path)},
                        {"unit", g.is_unit()},
                        {"orbit", orbit_of.count(g.x) ? json(orbit_of[g.x]) : json(nullptr)}});
  }
  return {{"size", G.size()},
          {"units", units},
          {"incomplete", G.incomplete()},
          {"objects", std::move(objects)},
          {"orbits", std::move(orbit_json)},
          {"elements", std::move(elements)}};
}

json structure(const StructureReport& r) {
  return {{"check", r.check},
          {"items_checked", r.items_checked},
          {"failure_count", r.failure_count},
          {"failures", r.failures},
          {"passed", r.passed()}};
}

json algebra_element(const AlgebraElement& f) {
  json out = json::array();
  for (const auto& [i, c] : f.coefficients()) {
    const auto& g = f.groupoid()[i];
    out.push_back({g.x, offset(g.m), g.y, c.real(), c.imag()});
  }
  return out;
}

json relation(const RelationReport& r) {
  return {{"identity", r.identity},
          {"samples", r.samples},
          {"seed", r.seed},
          {"max_deviation", r.max_deviation},
          {"tolerance", r.tolerance},
          {"verdict", r.passed ? "pass" : "fail"}};
}

json generation(const GenerationReport& r) {
  return {{"generated_dimension", r.generated_dimension},
          {"full_dimension", r.full_dimension},
          {"passed", r.passed()}};
}

}  // namespace kgraph::serial
