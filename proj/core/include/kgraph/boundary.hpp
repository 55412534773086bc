#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/paths.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

/// Scope of an enumeration: everything (exact) or degrees <= bound (truncated/bounded).
struct Mode {
  enum class Kind { exact, truncated };
  Kind kind{Kind::exact};
  Degree bound;

  static Mode exact() { return Mode{Kind::exact, {}}; }
  static Mode truncated(Degree bound) { return Mode{Kind::truncated, std::move(bound)}; }
  bool is_exact() const { return kind == Kind::exact; }
};

struct VertexClassification {
  std::vector<VertexIndex> sce;  ///< receive no edge
  std::vector<VertexIndex> fin;  ///< receive finitely many edges (all, for finite skeletons)
  std::vector<VertexIndex> rg;   ///< fin minus sce
};

VertexClassification classify_vertices(const Skeleton& s);

enum class Exhaustivity { exhaustive, not_exhaustive, unknown };

struct ExhaustiveResult {
  Exhaustivity verdict{};
  /// Path at v compatible with no member; set iff verdict == not_exhaustive.
  std::optional<Path> witness;
};

/// Whether every lambda in vLambda has Lambda^min(lambda, mu) nonempty for some mu in E.
/// Exact mode needs finite vLambda (UnsupportedMode otherwise). Truncated mode only checks
/// d(lambda) <= bound, so a pass there is reported as `unknown`.
ExhaustiveResult is_exhaustive(const Skeleton& s, VertexIndex v, const std::vector<Path>& E,
                               const Mode& mode);

struct ExhaustiveSet {
  VertexIndex vertex;
  std::vector<Path> members;
};

/// Inclusion-minimal exhaustive subsets of vLambda, by size then lexicographically.
/// Requires finite vLambda with at most `kMaxExhaustiveUniverse` paths.
std::vector<ExhaustiveSet> minimal_exhaustive_sets(const Skeleton& s, VertexIndex v);

inline constexpr std::size_t kMaxExhaustiveUniverse = 20;

/// A point of X_Lambda. In exact mode it is a finite path. In truncated mode `path` is the
/// prefix up to the bound and `unbounded[c]` marks colors along which an infinite
/// extension exists.
struct PathSpaceElement {
  Path path;
  std::vector<bool> unbounded;
  bool truncated{false};

  VertexIndex range() const { return path.range(); }
  ExtendedDegree degree() const;
  /// x(0, p).
  Path prefix(const Skeleton& s, const Degree& p) const;
  /// x(m) = s(x(0, m)).
  VertexIndex vertex_at(const Skeleton& s, const Degree& m) const;
  /// Prefix table {p -> x(0, p)} over every p <= known degree.
  std::map<std::vector<std::int32_t>, Path> prefix_table(const Skeleton& s) const;
};

class FinitePathSpace {
 public:
  FinitePathSpace(Skeleton skeleton, Mode mode, std::vector<PathSpaceElement> elements);

  const Skeleton& skeleton() const { return skeleton_; }
  const Mode& mode() const { return mode_; }
  bool is_exact() const { return mode_.is_exact(); }
  const std::vector<PathSpaceElement>& elements() const { return elements_; }
  const PathSpaceElement& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t size() const { return elements_.size(); }

  std::optional<std::size_t> find(const Path& p) const;
  /// Throws DomainError when p is not an element.
  std::size_t index_of(const Path& p) const;

 private:
  Skeleton skeleton_;
  Mode mode_;
  std::vector<PathSpaceElement> elements_;
  std::map<Path, std::size_t> index_;
};

/// X_Lambda. Exact mode requires an acyclic skeleton (UnsupportedMode otherwise).
FinitePathSpace enumerate_path_space(const Skeleton& s, const Mode& mode);

/// sigma^m x. Requires m <= d(x).
PathSpaceElement shift(const Skeleton& s, const PathSpaceElement& x, const Degree& m);
/// lambda x. Requires s(lambda) = r(x).
PathSpaceElement prepend(const Skeleton& s, const Path& lambda, const PathSpaceElement& x);

struct CertificateEntry {
  Degree m;
  VertexIndex vertex;         ///< x(m)
  std::vector<Path> set;      ///< minimal exhaustive set at x(m)
  std::optional<Path> witness;  ///< lambda in set with x(m, m + d(lambda)) = lambda
};

struct BoundaryVerdict {
  enum class Status { boundary, not_boundary, undecided };
  Status status{};
  std::vector<CertificateEntry> entries;
  bool is_boundary() const { return status == Status::boundary; }
};

/// Precomputes minimal exhaustive sets per vertex of an exact-mode space.
class BoundaryAnalyzer {
 public:
  explicit BoundaryAnalyzer(const FinitePathSpace& space);

  const std::vector<ExhaustiveSet>& minimal_sets(VertexIndex v) const {
    return minimal_sets_[v.value];
  }
  BoundaryVerdict check(const PathSpaceElement& x) const;

 private:
  const FinitePathSpace& space_;
  std::vector<std::vector<ExhaustiveSet>> minimal_sets_;
};

/// Boundary test of x. Truncated spaces yield Status::undecided.
BoundaryVerdict is_boundary(const FinitePathSpace& space, const PathSpaceElement& x);

/// Indices (into the space) of the boundary paths, ascending. Exact mode only.
std::vector<std::size_t> boundary_paths(const FinitePathSpace& space);

}  // namespace kgraph
