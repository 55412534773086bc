#pragma once

// Brute-force reference implementations. They work on raw edge words and square moves
// only, never on the library's normal forms, so agreement is meaningful.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/paths.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph::oracle {

struct RawPath {
  VertexIndex range;
  std::vector<EdgeIndex> word;
  friend auto operator<=>(const RawPath&, const RawPath&) = default;
};

RawPath raw(const Path& p);

class Words {
 public:
  explicit Words(const Skeleton& s);

  const Skeleton& skeleton() const { return s_; }
  Degree degree(const RawPath& w) const;
  VertexIndex source(const RawPath& w) const;
  RawPath concat(const RawPath& a, const RawPath& b) const;

  /// Every composable word with color counts n; vertex paths when n = 0.
  std::vector<RawPath> words(const Degree& n) const;
  /// Closure of w under single square moves.
  std::set<RawPath> class_of(const RawPath& w) const;
  bool equivalent(const RawPath& a, const RawPath& b) const;
  /// Equivalence classes of degree n, each as its member set. Cached.
  const std::vector<std::set<RawPath>>& classes(const Degree& n);
  /// One representative (the smallest member) per class of degree n.
  std::vector<RawPath> representatives(const Degree& n);

  /// rest such that nu ~ lambda.rest, if lambda is a prefix of nu.
  std::optional<RawPath> strip_prefix(const RawPath& nu, const RawPath& lambda) const;

 private:
  const Skeleton& s_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<EdgeIndex, EdgeIndex>> swap_;
  std::map<std::vector<std::int32_t>, std::vector<std::set<RawPath>>> cache_;
};

/// All (xi, eta) among class representatives with d(xi) = m and xi.eta ~ lambda.
std::vector<std::pair<RawPath, RawPath>> factorizations(Words& w, const RawPath& lambda,
                                                        const Degree& m);

/// Lambda^min(lambda, mu) by factoring every common extension nu of degree
/// d(lambda) v d(mu); pairs are class representatives.
std::vector<std::pair<RawPath, RawPath>> lambda_min(Words& w, const RawPath& lambda,
                                                    const RawPath& mu);

/// vLambda of an acyclic skeleton as class representatives.
std::vector<RawPath> paths_at(Words& w, VertexIndex v);

bool compatible(Words& w, const RawPath& lambda, const RawPath& mu);

/// Exhaustive subsets of vLambda from the full subset lattice, as bitmasks over paths_at(v).
std::vector<std::uint32_t> exhaustive_masks(Words& w, VertexIndex v);
/// The inclusion-minimal members of exhaustive_masks, each as a set of representatives.
std::vector<std::set<RawPath>> minimal_exhaustive(Words& w, VertexIndex v);

/// Boundary test against every exhaustive subset (not only minimal ones).
bool is_boundary(Words& w, const RawPath& x);

/// Keys of G_Lambda over `objects` from the (lambda x, d(lambda) - d(mu), mu x) form,
/// with paths printed as strings.
using Key = std::tuple<std::string, std::vector<std::int32_t>, std::string>;
std::set<Key> groupoid_keys(const Skeleton& s, const std::vector<Path>& objects);

/// Both reduced rewrites of every ascending three-color word agree.
bool hexagons_consistent(const Skeleton& s);

}  // namespace kgraph::oracle
