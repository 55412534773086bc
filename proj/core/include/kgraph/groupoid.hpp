#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/boundary.hpp"
#include "kgraph/degree.hpp"
#include "kgraph/paths.hpp"

namespace kgraph {

/// Identity of a groupoid element: (x, m, y) with x, y indices into the path space.
struct ElementKey {
  std::size_t x{};
  Offset m;
  std::size_t y{};
  friend bool operator==(const ElementKey&, const ElementKey&) = default;
  friend auto operator<=>(const ElementKey&, const ElementKey&) = default;
};

/// (x, m, y) together with a shift witness: sigma^p x = sigma^q y and p - q = m.
/// Equality ignores the witness.
struct GroupoidElement {
  std::size_t x{};
  Offset m;
  std::size_t y{};
  Degree p;
  Degree q;

  ElementKey key() const { return {x, m, y}; }
  bool is_unit() const { return x == y && m.is_zero(); }
  friend bool operator==(const GroupoidElement& a, const GroupoidElement& b) {
    return a.key() == b.key();
  }
};

/// A finite groupoid whose unit space is a subset of a path space.
class FiniteGroupoid {
 public:
  /// Unchecked construction; verify_groupoid_axioms tells whether the result is a groupoid.
  static FiniteGroupoid from_elements(std::shared_ptr<const FinitePathSpace> space,
                                      std::vector<std::size_t> objects,
                                      std::vector<GroupoidElement> elements,
                                      bool incomplete = false);

  const FinitePathSpace& space() const { return *space_; }
  const std::shared_ptr<const FinitePathSpace>& space_ptr() const { return space_; }
  const Skeleton& skeleton() const { return space_->skeleton(); }
  int rank() const { return skeleton().rank(); }

  /// Unit space as ascending path-space indices.
  const std::vector<std::size_t>& objects() const { return objects_; }
  bool has_object(std::size_t x) const;

  const std::vector<GroupoidElement>& elements() const { return elements_; }
  const GroupoidElement& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t size() const { return elements_.size(); }

  std::optional<std::size_t> find(const ElementKey& key) const;
  /// Element index of the unit (x, 0, x).
  std::optional<std::size_t> unit(std::size_t x) const;

  /// Element indices with r(g) = x (resp. s(g) = x).
  const std::vector<std::size_t>& with_range(std::size_t x) const;
  const std::vector<std::size_t>& with_source(std::size_t x) const;

  /// Built from a truncated path space: an approximation, not the groupoid itself.
  bool incomplete() const { return incomplete_; }

  /// (x, m, y)(y, n, z) = (x, m + n, z). The witness is the stored one when the product
  /// is an element, otherwise one derived from the factors' witnesses.
  GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b) const;
  GroupoidElement invert(const GroupoidElement& g) const;

 private:
  FiniteGroupoid() = default;

  std::shared_ptr<const FinitePathSpace> space_;
  std::vector<std::size_t> objects_;
  std::vector<GroupoidElement> elements_;
  std::map<ElementKey, std::size_t> index_;
  std::map<std::size_t, std::vector<std::size_t>> by_range_;
  std::map<std::size_t, std::vector<std::size_t>> by_source_;
  bool incomplete_{false};
};

/// G_Lambda over every point of the space. A truncated space gives an incomplete groupoid.
FiniteGroupoid build_path_groupoid(std::shared_ptr<const FinitePathSpace> space);
/// The reduction of G_Lambda to the boundary paths. Exact mode only.
FiniteGroupoid build_boundary_groupoid(std::shared_ptr<const FinitePathSpace> space);

GroupoidElement compose_g(const FiniteGroupoid& G, const GroupoidElement& a,
                          const GroupoidElement& b);
GroupoidElement invert_g(const FiniteGroupoid& G, const GroupoidElement& g);

struct StructureReport {
  std::string check;
  std::size_t items_checked{};
  std::size_t failure_count{};
  std::vector<std::string> failures;  ///< first few failure descriptions
  bool passed() const { return failure_count == 0; }
};

/// Witness validity, units, inverses, closure, and associativity over all composable triples.
StructureReport verify_groupoid_axioms(const FiniteGroupoid& G);

struct CylinderSet {
  Path lambda;
  Path mu;
  std::vector<std::size_t> members;  ///< ascending element indices
};

/// Z(lambda, mu) = {(lambda x, d(lambda) - d(mu), mu x)}. Requires s(lambda) = s(mu).
CylinderSet cylinder(const FiniteGroupoid& G, const Path& lambda, const Path& mu);

/// Cylinders cover G, r and s are injective on each cylinder, and the unit space is the
/// union of the vertex cylinders Z(v, v).
StructureReport verify_etale(const FiniteGroupoid& G);

inline const Offset& cocycle(const GroupoidElement& g) { return g.m; }
/// Orbits of the unit space, each ascending, ordered by smallest member.
std::vector<std::vector<std::size_t>> orbits(const FiniteGroupoid& G);
/// Element indices of the isotropy group at unit x.
std::vector<std::size_t> isotropy(const FiniteGroupoid& G, std::size_t x);

}  // namespace kgraph
