#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

/// A morphism of the k-graph in color-ascending normal form.
///
/// The word is block_1 block_2 ... block_k read left to right, block c holding the
/// color-c edges; letters are composable (source of each letter = range of the next).
/// Normal forms are canonical, so equality is structural.
class Path {
 public:
  static Path vertex(const Skeleton& s, VertexIndex v);
  static Path edge(const Skeleton& s, EdgeIndex e);

  VertexIndex range() const { return range_; }
  VertexIndex source() const { return source_; }
  const Degree& degree() const { return degree_; }
  const std::vector<EdgeIndex>& word() const { return word_; }
  bool is_vertex() const { return word_.empty(); }

  /// The k color blocks; block c has degree()[c] letters.
  std::vector<std::vector<EdgeIndex>> blocks() const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.range_ == b.range_ && a.word_ == b.word_;
  }
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.range_ <=> b.range_; c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  Path(VertexIndex range, VertexIndex source, std::vector<EdgeIndex> word, Degree degree)
      : range_(range), source_(source), word_(std::move(word)), degree_(std::move(degree)) {}

  friend Path normalize(const Skeleton& s, VertexIndex range, std::vector<EdgeIndex> word);

  VertexIndex range_;
  VertexIndex source_;
  std::vector<EdgeIndex> word_;
  Degree degree_;
};

/// Normal form of a composable edge word ranging at `range` (`range` is only consulted
/// when the word is empty). Sorts colors by leftmost adjacent transpositions.
/// Throws DomainError for non-composable words or a missing square.
Path normalize(const Skeleton& s, VertexIndex range, std::vector<EdgeIndex> word);

/// Rewrites a composable word, by square moves, into the word whose color sequence is
/// `colors` (a permutation of the word's colors).
std::vector<EdgeIndex> rewrite_to_colors(const Skeleton& s, std::vector<EdgeIndex> word,
                                         const std::vector<int>& colors);

/// lambda*mu; requires s(lambda) = r(mu).
Path compose(const Skeleton& s, const Path& lambda, const Path& mu);

/// The unique (xi, eta) with lambda = xi*eta and d(xi) = m. Requires m <= d(lambda).
std::pair<Path, Path> factorize(const Skeleton& s, const Path& lambda, const Degree& m);

/// lambda(p, q) for 0 <= p <= q <= d(lambda).
Path segment(const Skeleton& s, const Path& lambda, const Degree& p, const Degree& q);

/// Lambda^n in (range, word) order.
std::vector<Path> all_paths(const Skeleton& s, const Degree& n);
/// v Lambda^n.
std::vector<Path> paths_at(const Skeleton& s, VertexIndex v, const Degree& n);
/// Every path with degree <= bound, optionally restricted to range v; sorted.
std::vector<Path> paths_up_to(const Skeleton& s, const Degree& bound,
                              std::optional<VertexIndex> range = std::nullopt);
/// The whole of v Lambda. Throws UnsupportedMode when it is infinite.
std::vector<Path> all_paths_at(const Skeleton& s, VertexIndex v);
/// Every path of an acyclic skeleton. Throws UnsupportedMode on cyclic skeletons.
std::vector<Path> all_paths_finite(const Skeleton& s);

struct MinimalExtensionPair {
  Path alpha;
  Path beta;
  friend bool operator==(const MinimalExtensionPair&, const MinimalExtensionPair&) = default;
  friend auto operator<=>(const MinimalExtensionPair&, const MinimalExtensionPair&) = default;
};

/// Lambda^min(lambda, mu): pairs (alpha, beta) with lambda*alpha = mu*beta of degree
/// d(lambda) v d(mu). Empty when the ranges differ.
std::vector<MinimalExtensionPair> lambda_min(const Skeleton& s, const Path& lambda,
                                             const Path& mu);

/// U v V for U within Lambda^p and V within Lambda^q. Throws DomainError on mixed degrees.
std::vector<Path> min_common_extensions(const Skeleton& s, const std::vector<Path>& U,
                                        const std::vector<Path>& V);

struct AlignmentReport {
  Degree bound;
  std::size_t pairs_checked{};
  std::size_t max_size{};
  std::optional<std::pair<Path, Path>> argmax;
  /// |Lambda^min| <= 1 on every pair; required of 1-graphs.
  bool at_most_one{true};
  /// Finite skeletons are finitely aligned by construction.
  bool finitely_aligned{true};
  bool passed(int rank) const { return finitely_aligned && (rank != 1 || at_most_one); }
};

AlignmentReport alignment_report(const Skeleton& s, const Degree& bound);

/// The model k-graph Omega_{k,m} together with its morphism table (p, q) -> path.
struct OmegaGraph {
  Skeleton skeleton;
  std::map<std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>>, Path> morphisms;
};

OmegaGraph omega(int k, const Degree& m);

/// Vertex id for degree-0 paths, otherwise edge ids joined by '.'.
std::string path_to_string(const Skeleton& s, const Path& p);
/// Inverse of path_to_string; edge words may be given in any composable order.
Path parse_path(const Skeleton& s, std::string_view text);

}  // namespace kgraph
