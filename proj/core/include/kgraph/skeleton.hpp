#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"

namespace kgraph {

template <class Tag>
struct Index {
  std::uint32_t value{};
  friend auto operator<=>(Index, Index) = default;
};

using VertexIndex = Index<struct VertexTag>;
using EdgeIndex = Index<struct EdgeTag>;

struct Vertex {
  std::string id;
};

struct Edge {
  std::string id;
  int color{};  ///< 0-based; the document format is 1-based
  VertexIndex range;
  VertexIndex source;
};

/// Factorization square first*second = swapped_first*swapped_second, stored with
/// color(first) < color(second), so the left side is the color-sorted word.
struct FactorizationRule {
  EdgeIndex first;
  EdgeIndex second;
  EdgeIndex swapped_first;
  EdgeIndex swapped_second;
  friend bool operator==(const FactorizationRule&, const FactorizationRule&) = default;
};

// Unresolved, string-keyed input records, as they appear in an instance document.
struct EdgeSpec {
  std::string id;
  int color{};  ///< 1-based
  std::string range;
  std::string source;
};

struct SquareSpec {
  std::string first;
  std::string second;
  std::string swapped_first;
  std::string swapped_second;
};

/// Finite presentation of a k-graph: a k-colored 1-skeleton plus factorization squares.
///
/// Vertices and edges are stored sorted by id, so index order is id order.
/// Construction checks referential integrity only; the k-graph axioms are checked by
/// validate_squares and validate_associativity.
class Skeleton {
 public:
  Skeleton(int rank, std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges,
           std::vector<SquareSpec> squares);

  int rank() const { return rank_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<FactorizationRule>& rules() const { return rules_; }

  const Vertex& vertex(VertexIndex v) const { return vertices_[v.value]; }
  const Edge& edge(EdgeIndex e) const { return edges_[e.value]; }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  /// Edges with the given range (resp. source), in id order.
  const std::vector<EdgeIndex>& edges_into(VertexIndex v) const { return into_[v.value]; }
  const std::vector<EdgeIndex>& edges_out_of(VertexIndex v) const { return out_of_[v.value]; }

  /// The other side of the square whose one side is the word a*b, if any.
  std::optional<std::pair<EdgeIndex, EdgeIndex>> exchange(EdgeIndex a, EdgeIndex b) const;

  Degree edge_degree(EdgeIndex e) const { return Degree::unit(rank_, edge(e).color); }

 private:
  int rank_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<FactorizationRule> rules_;
  std::vector<std::vector<EdgeIndex>> into_;
  std::vector<std::vector<EdgeIndex>> out_of_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<EdgeIndex, EdgeIndex>> exchange_;
};

/// Parses an instance document (JSON). Throws ParseError or InvalidSkeleton.
Skeleton load_skeleton(std::string_view document);
Skeleton load_skeleton_file(const std::filesystem::path& path);

struct ValidationIssue {
  std::string kind;
  std::vector<std::string> edges;  ///< offending edge ids
  std::string detail;
};

struct ValidationReport {
  std::string check;
  std::vector<ValidationIssue> issues;
  bool passed() const { return issues.empty(); }
};

/// Bijectivity of the factorization squares for every color pair.
ValidationReport validate_squares(const Skeleton& s);

/// Hexagon condition: every composable three-color edge triple reaches a unique word
/// for each of its six color orders.
ValidationReport validate_associativity(const Skeleton& s);

/// True iff the 1-skeleton has no directed cycle, i.e. the k-graph has finitely many paths.
bool is_acyclic(const Skeleton& s);

/// True iff vLambda is finite: no cycle is reachable from v by walking edges range -> source.
bool has_finitely_many_paths_at(const Skeleton& s, VertexIndex v);

/// Length of the longest path in an acyclic skeleton; throws UnsupportedMode otherwise.
std::int64_t longest_path_length(const Skeleton& s);

/// Graphviz rendering; edges drawn source -> range and labelled with their color.
std::string export_dot(const Skeleton& s);

}  // namespace kgraph

template <class Tag>
struct std::hash<kgraph::Index<Tag>> {
  std::size_t operator()(kgraph::Index<Tag> i) const noexcept {
    return std::hash<std::uint32_t>{}(i.value);
  }
};
