#include "kgraph/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

constexpr std::size_t kMaxReportedFailures = 20;

void record(StructureReport& report, std::string failure) {
  ++report.failure_count;
  if (report.failures.size() < kMaxReportedFailures) report.failures.push_back(std::move(failure));
}

const std::vector<std::size_t> kNone;

std::string describe(const FiniteGroupoid& G, const ElementKey& k) {
  const Skeleton& s = G.skeleton();
  return "(" + path_to_string(s, G.space()[k.x].path) + ", " + k.m.to_string() + ", " +
         path_to_string(s, G.space()[k.y].path) + ")";
}

}  // namespace

FiniteGroupoid FiniteGroupoid::from_elements(std::shared_ptr<const FinitePathSpace> space,
                                             std::vector<std::size_t> objects,
                                             std::vector<GroupoidElement> elements,
                                             bool incomplete) {
  if (!space) throw DomainError("groupoid needs a path space");
  FiniteGroupoid G;
  G.space_ = std::move(space);
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  G.objects_ = std::move(objects);
  std::sort(elements.begin(), elements.end(),
            [](const GroupoidElement& a, const GroupoidElement& b) { return a.key() < b.key(); });
  G.elements_ = std::move(elements);
  for (std::size_t i = 0; i < G.elements_.size(); ++i) {
    const auto& g = G.elements_[i];
    if (!G.index_.emplace(g.key(), i).second) {
      throw DomainError("duplicate groupoid element " + describe(G, g.key()));
    }
    G.by_range_[g.x].push_back(i);
    G.by_source_[g.y].push_back(i);
  }
  G.incomplete_ = incomplete;
  return G;
}

bool FiniteGroupoid::has_object(std::size_t x) const {
  return std::binary_search(objects_.begin(), objects_.end(), x);
}

std::optional<std::size_t> FiniteGroupoid::find(const ElementKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteGroupoid::unit(std::size_t x) const {
  return find({x, Offset::zero(rank()), x});
}

const std::vector<std::size_t>& FiniteGroupoid::with_range(std::size_t x) const {
  auto it = by_range_.find(x);
  return it == by_range_.end() ? kNone : it->second;
}

const std::vector<std::size_t>& FiniteGroupoid::with_source(std::size_t x) const {
  auto it = by_source_.find(x);
  return it == by_source_.end() ? kNone : it->second;
}

GroupoidElement FiniteGroupoid::compose(const GroupoidElement& a, const GroupoidElement& b) const {
  if (a.y != b.x) {
    throw DomainError("non-composable pair " + describe(*this, a.key()) + ", " +
                      describe(*this, b.key()));
  }
  ElementKey key{a.x, a.m + b.m, b.y};
  if (auto i = find(key)) return elements_[*i];
  // sigma^t y with t = q_a v p_b is reachable from both witnesses.
  const Degree t = join(a.q, b.p);
  return {key.x, key.m, key.y, a.p + (t - a.q), b.q + (t - b.p)};
}

GroupoidElement FiniteGroupoid::invert(const GroupoidElement& g) const {
  ElementKey key{g.y, -g.m, g.x};
  if (auto i = find(key)) return elements_[*i];
  return {key.x, key.m, key.y, g.q, g.p};
}

namespace {

FiniteGroupoid build_over(std::shared_ptr<const FinitePathSpace> space,
                          std::vector<std::size_t> objects) {
  const Skeleton& s = space->skeleton();
  // Bucket (x, p) by the tail sigma^p x; elements are pairs within a bucket.
  std::map<Path, std::vector<std::pair<std::size_t, Degree>>> by_tail;
  for (auto x : objects) {
    const Path& path = (*space)[x].path;
    for (const auto& p : degrees_up_to(path.degree())) {
      by_tail[factorize(s, path, p).second].emplace_back(x, p);
    }
  }
  std::map<ElementKey, GroupoidElement> found;
  for (const auto& [tail, starts] : by_tail) {
    for (const auto& [x, p] : starts) {
      for (const auto& [y, q] : starts) {
        GroupoidElement g{x, Offset::difference(p, q), y, p, q};
        auto [it, fresh] = found.try_emplace(g.key(), g);
        if (!fresh && p.coords() < it->second.p.coords()) it->second = g;
      }
    }
  }
  std::vector<GroupoidElement> elements;
  elements.reserve(found.size());
  for (auto& [key, g] : found) elements.push_back(std::move(g));
  const bool incomplete = !space->is_exact();
  return FiniteGroupoid::from_elements(std::move(space), std::move(objects), std::move(elements),
                                       incomplete);
}

}  // namespace

FiniteGroupoid build_path_groupoid(std::shared_ptr<const FinitePathSpace> space) {
  std::vector<std::size_t> objects(space->size());
  std::iota(objects.begin(), objects.end(), 0);
  return build_over(std::move(space), std::move(objects));
}

FiniteGroupoid build_boundary_groupoid(std::shared_ptr<const FinitePathSpace> space) {
  if (!space->is_exact()) {
    throw UnsupportedMode("boundary groupoid needs an exact-mode path space");
  }
  auto objects = boundary_paths(*space);
  return build_over(std::move(space), std::move(objects));
}

GroupoidElement compose_g(const FiniteGroupoid& G, const GroupoidElement& a,
                          const GroupoidElement& b) {
  return G.compose(a, b);
}

GroupoidElement invert_g(const FiniteGroupoid& G, const GroupoidElement& g) {
  return G.invert(g);
}

StructureReport verify_groupoid_axioms(const FiniteGroupoid& G) {
  StructureReport report{"groupoid_axioms", 0, 0, {}};
  const Skeleton& s = G.skeleton();
  const auto& space = G.space();

  for (const auto& g : G.elements()) {
    ++report.items_checked;
    if (!G.has_object(g.x) || !G.has_object(g.y)) {
      record(report, "endpoint outside the unit space: " + describe(G, g.key()));
      continue;
    }
    const Path& x = space[g.x].path;
    const Path& y = space[g.y].path;
    bool witness_ok = g.p <= x.degree() && g.q <= y.degree() &&
                      Offset::difference(g.p, g.q) == g.m &&
                      factorize(s, x, g.p).second == factorize(s, y, g.q).second;
    if (!witness_ok) record(report, "invalid witness for " + describe(G, g.key()));
  }

  for (auto x : G.objects()) {
    ++report.items_checked;
    if (!G.unit(x)) record(report, "missing unit at " + path_to_string(s, space[x].path));
  }

  for (const auto& g : G.elements()) {
    const auto inv = G.invert(g);
    if (!G.find(inv.key())) {
      record(report, "inverse of " + describe(G, g.key()) + " is not an element");
      continue;
    }
    auto ru = G.unit(g.x);
    auto su = G.unit(g.y);
    if (!ru || !su) continue;
    const auto& r_unit = G[*ru];
    const auto& s_unit = G[*su];
    if (!(G.compose(g, inv) == r_unit) || !(G.compose(inv, g) == s_unit)) {
      record(report, "inverse law fails at " + describe(G, g.key()));
    }
    if (!(G.compose(r_unit, g) == g) || !(G.compose(g, s_unit) == g)) {
      record(report, "unit law fails at " + describe(G, g.key()));
    }
  }

  for (const auto& g : G.elements()) {
    for (auto hi : G.with_range(g.y)) {
      const auto& h = G[hi];
      ++report.items_checked;
      const auto gh = G.compose(g, h);
      if (!G.find(gh.key())) {
        record(report, "product " + describe(G, gh.key()) + " is not an element");
        continue;
      }
      for (auto ki : G.with_range(h.y)) {
        const auto& k = G[ki];
        if (!(G.compose(gh, k) == G.compose(g, G.compose(h, k)))) {
          record(report, "associativity fails at " + describe(G, g.key()));
        }
      }
    }
  }
  return report;
}

CylinderSet cylinder(const FiniteGroupoid& G, const Path& lambda, const Path& mu) {
  const Skeleton& s = G.skeleton();
  if (lambda.source() != mu.source()) {
    throw DomainError("cylinder needs s(lambda) = s(mu)");
  }
  if (!G.space().is_exact()) throw UnsupportedMode("cylinder sets need an exact-mode groupoid");
  CylinderSet out{lambda, mu, {}};
  const Offset m = Offset::difference(lambda.degree(), mu.degree());
  for (auto x : G.objects()) {
    const Path& tail = G.space()[x].path;
    if (tail.range() != lambda.source()) continue;
    auto lx = G.space().find(compose(s, lambda, tail));
    auto ux = G.space().find(compose(s, mu, tail));
    if (!lx || !ux) continue;
    if (auto g = G.find({*lx, m, *ux})) out.members.push_back(*g);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

StructureReport verify_etale(const FiniteGroupoid& G) {
  StructureReport report{"etale", 0, 0, {}};
  const Skeleton& s = G.skeleton();
  const auto& space = G.space();

  std::set<std::pair<Path, Path>> bisections;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const auto& g = G[i];
    ++report.items_checked;
    Path lambda = space[g.x].prefix(s, g.p);
    Path mu = space[g.y].prefix(s, g.q);
    const auto z = cylinder(G, lambda, mu);
    if (!std::binary_search(z.members.begin(), z.members.end(), i)) {
      record(report, describe(G, g.key()) + " is not covered by its witness cylinder");
    }
    bisections.emplace(std::move(lambda), std::move(mu));
  }

  for (const auto& [lambda, mu] : bisections) {
    ++report.items_checked;
    const auto z = cylinder(G, lambda, mu);
    std::set<std::size_t> ranges;
    std::set<std::size_t> sources;
    for (auto i : z.members) {
      ranges.insert(G[i].x);
      sources.insert(G[i].y);
    }
    if (ranges.size() != z.members.size() || sources.size() != z.members.size()) {
      record(report, "r or s is not injective on Z(" + path_to_string(s, lambda) + ", " +
                         path_to_string(s, mu) + ")");
    }
  }

  std::set<std::size_t> from_vertices;
  for (std::uint32_t v = 0; v < s.vertices().size(); ++v) {
    const Path vp = Path::vertex(s, VertexIndex{v});
    for (auto i : cylinder(G, vp, vp).members) from_vertices.insert(i);
  }
  std::set<std::size_t> units;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_unit()) units.insert(i);
  }
  ++report.items_checked;
  if (units != from_vertices) record(report, "unit space differs from the union of Z(v, v)");
  return report;
}

std::vector<std::vector<std::size_t>> orbits(const FiniteGroupoid& G) {
  std::map<std::size_t, std::size_t> parent;
  for (auto x : G.objects()) parent[x] = x;
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : G.elements()) {
    if (!parent.count(g.x) || !parent.count(g.y)) continue;
    auto a = root(g.x);
    auto b = root(g.y);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (auto x : G.objects()) groups[root(x)].push_back(x);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<std::size_t> isotropy(const FiniteGroupoid& G, std::size_t x) {
  std::vector<std::size_t> out;
  for (auto i : G.with_range(x)) {
    if (G[i].y == x) out.push_back(i);
  }
  return out;
}

}  // namespace kgraph
