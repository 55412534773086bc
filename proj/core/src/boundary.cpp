#include "kgraph/boundary.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

#include "kgraph/error.hpp"

namespace kgraph {

VertexClassification classify_vertices(const Skeleton& s) {
  VertexClassification out;
  for (std::uint32_t v = 0; v < s.vertices().size(); ++v) {
    const VertexIndex vi{v};
    out.fin.push_back(vi);
    if (s.edges_into(vi).empty()) {
      out.sce.push_back(vi);
    } else {
      out.rg.push_back(vi);
    }
  }
  return out;
}

namespace {

bool compatible(const Skeleton& s, const Path& lambda, const Path& mu) {
  return !lambda_min(s, lambda, mu).empty();
}

void require_members_at(const Skeleton& s, VertexIndex v, const std::vector<Path>& E) {
  for (const auto& mu : E) {
    if (mu.range() != v) {
      throw DomainError("member " + path_to_string(s, mu) + " does not range at " +
                        s.vertex(v).id);
    }
  }
}

}  // namespace

ExhaustiveResult is_exhaustive(const Skeleton& s, VertexIndex v, const std::vector<Path>& E,
                               const Mode& mode) {
  require_members_at(s, v, E);
  const auto universe = mode.is_exact() ? all_paths_at(s, v) : paths_up_to(s, mode.bound, v);
  for (const auto& lambda : universe) {
    bool hit = std::any_of(E.begin(), E.end(),
                           [&](const Path& mu) { return compatible(s, lambda, mu); });
    if (!hit) return {Exhaustivity::not_exhaustive, lambda};
  }
  return {mode.is_exact() ? Exhaustivity::exhaustive : Exhaustivity::unknown, std::nullopt};
}

std::vector<ExhaustiveSet> minimal_exhaustive_sets(const Skeleton& s, VertexIndex v) {
  const auto universe = all_paths_at(s, v);
  const std::size_t n = universe.size();
  if (n > kMaxExhaustiveUniverse) {
    throw DomainError("vertex " + s.vertex(v).id + " has " + std::to_string(n) +
                      " paths; minimal exhaustive sets are limited to " +
                      std::to_string(kMaxExhaustiveUniverse));
  }
  // covers[j] = bitmask of lambdas compatible with universe[j].
  std::vector<std::uint32_t> covers(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (compatible(s, universe[i], universe[j])) covers[j] |= (1u << i);
    }
  }
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);

  std::vector<std::uint32_t> minimal;
  for (std::size_t size = 1; size <= n; ++size) {
    // Combinations of `size` indices in lexicographic order.
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint32_t mask = 0;
      std::uint32_t covered = 0;
      for (auto j : pick) {
        mask |= (1u << j);
        covered |= covers[j];
      }
      bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                   [&](std::uint32_t m) { return (m & mask) == m; });
      if (!dominated && covered == all) minimal.push_back(mask);

      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  std::vector<ExhaustiveSet> out;
  for (auto mask : minimal) {
    ExhaustiveSet set{v, {}};
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) set.members.push_back(universe[j]);
    }
    out.push_back(std::move(set));
  }
  return out;
}

ExtendedDegree PathSpaceElement::degree() const {
  ExtendedDegree out;
  for (int c = 0; c < path.degree().rank(); ++c) {
    const bool inf = truncated && unbounded[static_cast<std::size_t>(c)];
    out.coords.push_back(inf ? std::nullopt : std::optional<std::int32_t>(path.degree()[c]));
  }
  return out;
}

Path PathSpaceElement::prefix(const Skeleton& s, const Degree& p) const {
  return factorize(s, path, p).first;
}

VertexIndex PathSpaceElement::vertex_at(const Skeleton& s, const Degree& m) const {
  return prefix(s, m).source();
}

std::map<std::vector<std::int32_t>, Path> PathSpaceElement::prefix_table(const Skeleton& s) const {
  std::map<std::vector<std::int32_t>, Path> table;
  for (const auto& p : degrees_up_to(path.degree())) table.emplace(p.coords(), prefix(s, p));
  return table;
}

FinitePathSpace::FinitePathSpace(Skeleton skeleton, Mode mode,
                                 std::vector<PathSpaceElement> elements)
    : skeleton_(std::move(skeleton)), mode_(std::move(mode)), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i].path, i).second) {
      throw DomainError("duplicate path space element");
    }
  }
}

std::optional<std::size_t> FinitePathSpace::find(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinitePathSpace::index_of(const Path& p) const {
  auto found = find(p);
  if (!found) throw DomainError(path_to_string(skeleton_, p) + " is not in the path space");
  return *found;
}

namespace {

// unbounded[v][c]: some cycle through a color-c edge is reachable from v (range -> source).
std::vector<std::vector<bool>> infinite_extension_colors(const Skeleton& s) {
  const std::size_t nv = s.vertices().size();
  auto reachable_from = [&](VertexIndex start) {
    std::vector<bool> seen(nv, false);
    std::deque<VertexIndex> queue{start};
    seen[start.value] = true;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (EdgeIndex e : s.edges_into(v)) {
        auto w = s.edge(e).source;
        if (!seen[w.value]) {
          seen[w.value] = true;
          queue.push_back(w);
        }
      }
    }
    return seen;
  };
  std::vector<std::vector<bool>> reach(nv);
  for (std::uint32_t v = 0; v < nv; ++v) reach[v] = reachable_from(VertexIndex{v});

  std::vector<std::vector<bool>> out(nv, std::vector<bool>(static_cast<std::size_t>(s.rank()), false));
  for (const auto& e : s.edges()) {
    // e lies on a cycle iff its range is reachable from its source.
    if (!reach[e.source.value][e.range.value]) continue;
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (reach[v][e.range.value]) out[v][static_cast<std::size_t>(e.color)] = true;
    }
  }
  return out;
}

}  // namespace

FinitePathSpace enumerate_path_space(const Skeleton& s, const Mode& mode) {
  std::vector<PathSpaceElement> elements;
  if (mode.is_exact()) {
    if (!is_acyclic(s)) {
      throw UnsupportedMode("cyclic skeleton: exact path space is infinite, use a truncation bound");
    }
    for (auto& p : all_paths_finite(s)) {
      elements.push_back({std::move(p), std::vector<bool>(static_cast<std::size_t>(s.rank()), false), false});
    }
  } else {
    if (mode.bound.rank() != s.rank()) throw DomainError("truncation bound has the wrong rank");
    const auto unbounded = infinite_extension_colors(s);
    for (auto& p : paths_up_to(s, mode.bound)) {
      auto flags = unbounded[p.source().value];
      elements.push_back({std::move(p), std::move(flags), true});
    }
  }
  return FinitePathSpace(s, mode, std::move(elements));
}

PathSpaceElement shift(const Skeleton& s, const PathSpaceElement& x, const Degree& m) {
  if (!(m <= x.path.degree())) {
    bool beyond_truncation = false;
    if (x.truncated) {
      for (int c = 0; c < m.rank(); ++c) {
        if (m[c] > x.path.degree()[c] && x.unbounded[static_cast<std::size_t>(c)]) {
          beyond_truncation = true;
        }
      }
    }
    if (beyond_truncation) {
      throw UnsupportedMode("shift by " + m.to_string() + " exceeds the truncation bound");
    }
    throw DomainError("shift by " + m.to_string() + " exceeds d(x) = " + x.degree().to_string());
  }
  return {factorize(s, x.path, m).second, x.unbounded, x.truncated};
}

PathSpaceElement prepend(const Skeleton& s, const Path& lambda, const PathSpaceElement& x) {
  if (lambda.source() != x.range()) {
    throw DomainError("cannot prepend " + path_to_string(s, lambda) + ": s(lambda) != r(x)");
  }
  return {compose(s, lambda, x.path), x.unbounded, x.truncated};
}

BoundaryAnalyzer::BoundaryAnalyzer(const FinitePathSpace& space) : space_(space) {
  if (!space.is_exact()) {
    throw UnsupportedMode("boundary analysis needs an exact-mode path space");
  }
  const Skeleton& s = space.skeleton();
  minimal_sets_.reserve(s.vertices().size());
  for (std::uint32_t v = 0; v < s.vertices().size(); ++v) {
    minimal_sets_.push_back(minimal_exhaustive_sets(s, VertexIndex{v}));
  }
}

BoundaryVerdict BoundaryAnalyzer::check(const PathSpaceElement& x) const {
  const Skeleton& s = space_.skeleton();
  BoundaryVerdict verdict{BoundaryVerdict::Status::boundary, {}};
  const Degree& dx = x.path.degree();
  for (const auto& m : degrees_up_to(dx)) {
    const Path tail = factorize(s, x.path, m).second;  // sigma^m x
    const VertexIndex at = tail.range();
    for (const auto& set : minimal_sets_[at.value]) {
      CertificateEntry entry{m, at, set.members, std::nullopt};
      for (const auto& lambda : set.members) {
        if (!(lambda.degree() <= tail.degree())) continue;
        if (factorize(s, tail, lambda.degree()).first == lambda) {
          entry.witness = lambda;
          break;
        }
      }
      if (!entry.witness) verdict.status = BoundaryVerdict::Status::not_boundary;
      verdict.entries.push_back(std::move(entry));
    }
  }
  return verdict;
}

BoundaryVerdict is_boundary(const FinitePathSpace& space, const PathSpaceElement& x) {
  if (!space.is_exact()) return {BoundaryVerdict::Status::undecided, {}};
  return BoundaryAnalyzer(space).check(x);
}

std::vector<std::size_t> boundary_paths(const FinitePathSpace& space) {
  BoundaryAnalyzer analyzer(space);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (analyzer.check(space[i]).is_boundary()) out.push_back(i);
  }
  return out;
}

}  // namespace kgraph
