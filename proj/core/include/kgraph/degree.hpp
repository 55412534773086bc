#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kgraph {

/// Element of N^k: the shape of a path.
///
/// `<=` is the coordinatewise partial order. Containers that need a total
/// order use `DegreeLess` (lexicographic).
class Degree {
 public:
  Degree() = default;
  explicit Degree(std::vector<std::int32_t> coords);
  Degree(std::initializer_list<std::int32_t> coords);

  static Degree zero(int rank);
  /// Standard basis vector e_color (0-based color).
  static Degree unit(int rank, int color);

  int rank() const { return static_cast<int>(coords_.size()); }
  std::int32_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int32_t>& coords() const { return coords_; }

  /// Sum of the coordinates.
  std::int64_t length() const;
  bool is_zero() const;

  friend bool operator==(const Degree&, const Degree&) = default;

  /// Coordinatewise partial order.
  friend bool operator<=(const Degree& a, const Degree& b);

  friend Degree operator+(const Degree& a, const Degree& b);
  /// Defined only when b <= a; throws DomainError otherwise.
  friend Degree operator-(const Degree& a, const Degree& b);

  std::string to_string() const;

 private:
  std::vector<std::int32_t> coords_;
};

Degree join(const Degree& a, const Degree& b);
Degree meet(const Degree& a, const Degree& b);

/// Parses "1,0,2" (parentheses optional). Throws ParseError.
Degree parse_degree(std::string_view text);

/// Every degree n with 0 <= n <= bound, in lexicographic order.
std::vector<Degree> degrees_up_to(const Degree& bound);

struct DegreeLess {
  bool operator()(const Degree& a, const Degree& b) const { return a.coords() < b.coords(); }
};

/// Element of Z^k, used for groupoid offsets m = p - q.
class Offset {
 public:
  Offset() = default;
  explicit Offset(std::vector<std::int32_t> coords) : coords_(std::move(coords)) {}
  Offset(std::initializer_list<std::int32_t> coords) : coords_(coords) {}

  static Offset zero(int rank);
  /// p - q for arbitrary p, q in N^k.
  static Offset difference(const Degree& p, const Degree& q);

  int rank() const { return static_cast<int>(coords_.size()); }
  std::int32_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int32_t>& coords() const { return coords_; }
  bool is_zero() const;

  friend bool operator==(const Offset&, const Offset&) = default;
  friend auto operator<=>(const Offset& a, const Offset& b) { return a.coords_ <=> b.coords_; }

  friend Offset operator+(const Offset& a, const Offset& b);
  friend Offset operator-(const Offset& a);

  std::string to_string() const;

 private:
  std::vector<std::int32_t> coords_;
};

/// Degree with coordinates in N u {infinity}; nullopt encodes infinity.
struct ExtendedDegree {
  std::vector<std::optional<std::int32_t>> coords;

  bool is_finite() const;
  std::string to_string() const;
  friend bool operator==(const ExtendedDegree&, const ExtendedDegree&) = default;
};

}  // namespace kgraph
