#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "kgraph/groupoid.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

using Scalar = std::complex<double>;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// Finitely supported function on a groupoid, as a member of its convolution *-algebra.
/// Zero coefficients are never stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(GroupoidPtr G);
  AlgebraElement(GroupoidPtr G, const std::map<std::size_t, Scalar>& coefficients);

  /// c times the indicator of element i.
  static AlgebraElement delta(GroupoidPtr G, std::size_t i, Scalar c = 1.0);

  const FiniteGroupoid& groupoid() const { return *groupoid_; }
  const GroupoidPtr& groupoid_ptr() const { return groupoid_; }
  const std::map<std::size_t, Scalar>& coefficients() const { return coefficients_; }

  Scalar operator()(std::size_t i) const;
  Scalar at(const ElementKey& key) const;
  bool is_zero() const { return coefficients_.empty(); }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(Scalar c, const AlgebraElement& a);

 private:
  GroupoidPtr groupoid_;
  std::map<std::size_t, Scalar> coefficients_;
};

/// (f * g)(x, m, y) = sum over (x, n, z) of f(x, n, z) g(z, m - n, y).
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g);
/// f*(x, m, y) = conj f(y, -m, x).
AlgebraElement involution(const AlgebraElement& f);
/// Max over units of the larger fiberwise l1 sum.
double i_norm(const AlgebraElement& f);
/// Sup-norm distance; both operands must live on the same groupoid.
double max_deviation(const AlgebraElement& f, const AlgebraElement& g);

/// Left regular representation: pi_u(f) acts on span{g : s(g) = u} by convolution,
/// so pi_u(f)[g, h] = f(g h^{-1}).
class RegularRepresentation {
 public:
  explicit RegularRepresentation(GroupoidPtr G);

  const std::vector<std::size_t>& fiber(std::size_t unit_object) const;
  Eigen::MatrixXcd operator()(const AlgebraElement& f, std::size_t unit_object) const;

 private:
  GroupoidPtr groupoid_;
  std::map<std::size_t, std::vector<std::size_t>> fibers_;
};

/// Dimension of the smallest *-closed, product-closed subspace containing the generators.
std::size_t algebra_dimension(const std::vector<AlgebraElement>& generators);

/// Finitely supported function on vertices or edges. Zero values are not stored.
template <class IndexT>
class FiniteFunction {
 public:
  FiniteFunction() = default;

  Scalar operator()(IndexT i) const {
    auto it = values_.find(i);
    return it == values_.end() ? Scalar{} : it->second;
  }
  void set(IndexT i, Scalar value) {
    if (value == Scalar{}) {
      values_.erase(i);
    } else {
      values_[i] = value;
    }
  }
  const std::map<IndexT, Scalar>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  static FiniteFunction indicator(IndexT i, Scalar c = 1.0) {
    FiniteFunction f;
    f.set(i, c);
    return f;
  }

 private:
  std::map<IndexT, Scalar> values_;
};

using VertexFunction = FiniteFunction<VertexIndex>;
using EdgeFunction = FiniteFunction<EdgeIndex>;

/// Adjointable operator on the edge module, as a finitely supported matrix.
class BimoduleOperator {
 public:
  Scalar operator()(EdgeIndex row, EdgeIndex col) const;
  void add(EdgeIndex row, EdgeIndex col, Scalar value);
  const std::map<std::pair<EdgeIndex, EdgeIndex>, Scalar>& entries() const { return entries_; }

  /// (T zeta)(e) = sum over e' of T(e, e') zeta(e').
  EdgeFunction apply(const EdgeFunction& zeta) const;

  friend BimoduleOperator operator+(const BimoduleOperator& a, const BimoduleOperator& b);
  friend double max_deviation(const BimoduleOperator& a, const BimoduleOperator& b);

 private:
  std::map<std::pair<EdgeIndex, EdgeIndex>, Scalar> entries_;
};

/// <xi, eta>(v) = sum over edges e with s(e) = v of conj(xi(e)) eta(e).
VertexFunction inner_product(const Skeleton& s, const EdgeFunction& xi, const EdgeFunction& eta);
/// (f . xi)(e) = f(r(e)) xi(e).
EdgeFunction left_action(const Skeleton& s, const VertexFunction& f, const EdgeFunction& xi);
/// (xi . f)(e) = xi(e) f(s(e)).
EdgeFunction right_action(const Skeleton& s, const EdgeFunction& xi, const VertexFunction& f);

/// xi (x) eta*: zeta -> xi . <eta, zeta>.
BimoduleOperator rank_one(const Skeleton& s, const EdgeFunction& xi, const EdgeFunction& eta);
/// Left multiplication by f: the diagonal operator f(r(e)).
BimoduleOperator phi(const Skeleton& s, const VertexFunction& f);

using RankOnePairs = std::vector<std::pair<EdgeFunction, EdgeFunction>>;

/// Deviations of a decomposition (xi_i, eta_i) of phi(f) from its three defining
/// properties: f o r = sum xi_i conj(eta_i) pointwise; xi_i(e) conj(eta_i(e')) = 0 when
/// s(e) = s(e') and e != e'; phi(f) = sum xi_i (x) eta_i*.
struct RankOneCheck {
  double pointwise{};
  double orthogonality{};
  double operator_sum{};
  bool exact() const { return pointwise == 0.0 && orthogonality == 0.0 && operator_sum == 0.0; }
};

RankOneCheck check_rank_one_properties(const Skeleton& s, const VertexFunction& f,
                                       const RankOnePairs& pairs);

struct RankOneDecomposition {
  RankOnePairs pairs;
  /// supp(f) lies in the regular vertices, the domain of the Cuntz-Krieger relation.
  bool supported_on_regular{};
};

/// One pair per edge e with f(r(e)) != 0: (f(r(e)) delta_e, delta_e).
RankOneDecomposition rank_one_decomposition(const Skeleton& s, const VertexFunction& f);

/// Psi_0(f): the unit-supported element (x, 0, x) -> f(r(x)).
AlgebraElement psi0(const VertexFunction& f, const GroupoidPtr& G);
/// Psi_1(xi)(x, m, y) = [m = 1][sigma^1 x = y] xi(x(0, 1)). Rank-1 groupoids only.
AlgebraElement psi1(const EdgeFunction& xi, const GroupoidPtr& G);
/// Psi^(1)(sum xi_i (x) eta_i*) = sum Psi_1(xi_i) Psi_1(eta_i)*.
AlgebraElement psi_k(const RankOnePairs& pairs, const GroupoidPtr& G);

/// Restriction of a function on G_Lambda to the boundary groupoid built over the same space.
AlgebraElement quotient_restrict(const AlgebraElement& f, const GroupoidPtr& boundary);

/// beta_t(f)(x, m, y) = t^m f(x, m, y) with t on the k-torus. Throws DomainError if
/// some |t_i| != 1.
AlgebraElement gauge_automorphism(const AlgebraElement& f, const std::vector<Scalar>& t);
AlgebraElement gauge_automorphism(const AlgebraElement& f, Scalar t);

struct RelationReport {
  std::string identity;
  int samples{};
  std::uint64_t seed{};
  double max_deviation{};
  double tolerance{};
  bool passed{};
};

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Identities (i) Psi_1(xi)* Psi_1(eta) = Psi_0(<xi, eta>) and
/// (ii) Psi_0(f) Psi_1(xi) = Psi_1(phi(f) xi) on random inputs.
std::pair<RelationReport, RelationReport> verify_toeplitz_pair(const GroupoidPtr& G, int samples,
                                                               double tol,
                                                               std::uint64_t seed = kDefaultSeed);

/// True iff supp(f) lies in the regular vertices.
bool ck_input_admissible(const Skeleton& s, const VertexFunction& f);

/// Psi_0(f) = Psi^(1)(phi(f)) for random f supported on regular vertices, on a boundary
/// groupoid. The deviation also covers units with d(x) = 0, where both sides must vanish.
RelationReport verify_ck_pair(const GroupoidPtr& boundary, int samples, double tol,
                              std::uint64_t seed = kDefaultSeed);

/// Gauge automorphism, grading additivity, Psi_0 fixed, Psi_1 scaled by t (rank 1).
std::vector<RelationReport> verify_gauge(const GroupoidPtr& G, int samples, double tol,
                                         std::uint64_t seed = kDefaultSeed);

/// Associativity, involution laws, I-norm submultiplicativity and the regular
/// representation homomorphism on random elements; exhaustive delta associativity on
/// groupoids with at most 50 elements.
std::vector<RelationReport> verify_algebra_properties(const GroupoidPtr& G, int samples,
                                                      double tol,
                                                      std::uint64_t seed = kDefaultSeed);

/// Quotient map multiplicativity: restrict(f * g) = restrict(f) * restrict(g).
RelationReport verify_quotient(const GroupoidPtr& full, const GroupoidPtr& boundary, int samples,
                               std::uint64_t seed = kDefaultSeed);

struct GenerationReport {
  std::size_t generated_dimension{};
  std::size_t full_dimension{};
  bool passed() const { return generated_dimension == full_dimension; }
};

/// Dimension spanned by {Psi_0(delta_v)} and {Psi_1(delta_e)} against that of all delta_g.
GenerationReport generation_check(const GroupoidPtr& G);

/// Random elements used by the verification suites; standard-normal real and imaginary parts.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed);

  Scalar scalar();
  Scalar unit_scalar();
  /// Uniform index in [0, n).
  std::size_t index(std::size_t n);
  AlgebraElement element(const GroupoidPtr& G);
  /// Random coefficients on the elements with cocycle value m.
  AlgebraElement homogeneous(const GroupoidPtr& G, const Offset& m);
  VertexFunction vertex_function(const Skeleton& s);
  VertexFunction vertex_function_on(const std::vector<VertexIndex>& support);
  EdgeFunction edge_function(const Skeleton& s);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace kgraph
