#include "kgraph/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "kgraph/boundary.hpp"
#include "kgraph/error.hpp"

namespace kgraph {

AlgebraElement::AlgebraElement(GroupoidPtr G) : groupoid_(std::move(G)) {
  if (!groupoid_) throw DomainError("algebra element needs a groupoid");
}

AlgebraElement::AlgebraElement(GroupoidPtr G, const std::map<std::size_t, Scalar>& coefficients)
    : AlgebraElement(std::move(G)) {
  for (const auto& [i, c] : coefficients) {
    if (i >= groupoid_->size()) throw DomainError("coefficient outside the groupoid");
    if (c != Scalar{}) coefficients_.emplace(i, c);
  }
}

AlgebraElement AlgebraElement::delta(GroupoidPtr G, std::size_t i, Scalar c) {
  return AlgebraElement(std::move(G), {{i, c}});
}

Scalar AlgebraElement::operator()(std::size_t i) const {
  auto it = coefficients_.find(i);
  return it == coefficients_.end() ? Scalar{} : it->second;
}

Scalar AlgebraElement::at(const ElementKey& key) const {
  auto i = groupoid_->find(key);
  return i ? (*this)(*i) : Scalar{};
}

namespace {

void require_same_groupoid(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.groupoid_ptr() != b.groupoid_ptr()) {
    throw DomainError("algebra elements live on different groupoids");
  }
}

AlgebraElement combine(const AlgebraElement& a, const AlgebraElement& b, Scalar sign) {
  require_same_groupoid(a, b);
  std::map<std::size_t, Scalar> out = a.coefficients();
  for (const auto& [i, c] : b.coefficients()) out[i] += sign * c;
  return AlgebraElement(a.groupoid_ptr(), out);
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  return combine(a, b, 1.0);
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return combine(a, b, -1.0);
}

AlgebraElement operator*(Scalar c, const AlgebraElement& a) {
  std::map<std::size_t, Scalar> out;
  for (const auto& [i, v] : a.coefficients()) out.emplace(i, c * v);
  return AlgebraElement(a.groupoid_ptr(), out);
}

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) {
  require_same_groupoid(f, g);
  const FiniteGroupoid& G = f.groupoid();
  std::map<std::size_t, Scalar> out;
  for (const auto& [a, fa] : f.coefficients()) {
    const auto& alpha = G[a];
    for (auto b : G.with_range(alpha.y)) {
      auto it = g.coefficients().find(b);
      if (it == g.coefficients().end()) continue;
      const auto& beta = G[b];
      auto product = G.find({alpha.x, alpha.m + beta.m, beta.y});
      if (!product) throw Error("convolution product left the groupoid");
      out[*product] += fa * it->second;
    }
  }
  return AlgebraElement(f.groupoid_ptr(), out);
}

AlgebraElement involution(const AlgebraElement& f) {
  const FiniteGroupoid& G = f.groupoid();
  std::map<std::size_t, Scalar> out;
  for (const auto& [i, c] : f.coefficients()) {
    auto inv = G.find({G[i].y, -G[i].m, G[i].x});
    if (!inv) throw Error("groupoid is not closed under inversion");
    out.emplace(*inv, std::conj(c));
  }
  return AlgebraElement(f.groupoid_ptr(), out);
}

double i_norm(const AlgebraElement& f) {
  const FiniteGroupoid& G = f.groupoid();
  std::map<std::size_t, double> by_range;
  std::map<std::size_t, double> by_source;
  for (const auto& [i, c] : f.coefficients()) {
    by_range[G[i].x] += std::abs(c);
    by_source[G[i].y] += std::abs(c);
  }
  double norm = 0.0;
  for (const auto& [u, v] : by_range) norm = std::max(norm, v);
  for (const auto& [u, v] : by_source) norm = std::max(norm, v);
  return norm;
}

double max_deviation(const AlgebraElement& f, const AlgebraElement& g) {
  require_same_groupoid(f, g);
  double worst = 0.0;
  for (const auto& [i, c] : f.coefficients()) worst = std::max(worst, std::abs(c - g(i)));
  for (const auto& [i, c] : g.coefficients()) worst = std::max(worst, std::abs(c - f(i)));
  return worst;
}

RegularRepresentation::RegularRepresentation(GroupoidPtr G) : groupoid_(std::move(G)) {
  for (auto u : groupoid_->objects()) fibers_[u] = groupoid_->with_source(u);
}

const std::vector<std::size_t>& RegularRepresentation::fiber(std::size_t unit_object) const {
  auto it = fibers_.find(unit_object);
  if (it == fibers_.end()) throw DomainError("not a unit of the groupoid");
  return it->second;
}

Eigen::MatrixXcd RegularRepresentation::operator()(const AlgebraElement& f,
                                                   std::size_t unit_object) const {
  if (f.groupoid_ptr() != groupoid_) throw DomainError("element lives on another groupoid");
  const auto& basis = fiber(unit_object);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  const FiniteGroupoid& G = *groupoid_;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& gi = G[basis[static_cast<std::size_t>(i)]];
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& gj = G[basis[static_cast<std::size_t>(j)]];
      // g_i g_j^{-1} = (x_i, m_i - m_j, x_j)
      out(i, j) = f.at({gi.x, gi.m + (-gj.m), gj.x});
    }
  }
  return out;
}

namespace {

Eigen::VectorXcd dense(const AlgebraElement& f) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(f.groupoid().size()));
  for (const auto& [i, c] : f.coefficients()) v(static_cast<Eigen::Index>(i)) = c;
  return v;
}

AlgebraElement sparse(const GroupoidPtr& G, const Eigen::VectorXcd& v) {
  std::map<std::size_t, Scalar> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-14) out.emplace(static_cast<std::size_t>(i), v(i));
  }
  return AlgebraElement(G, out);
}

}  // namespace

std::size_t algebra_dimension(const std::vector<AlgebraElement>& generators) {
  if (generators.empty()) return 0;
  const GroupoidPtr& G = generators.front().groupoid_ptr();
  std::vector<Eigen::VectorXcd> basis;
  std::vector<AlgebraElement> elements;

  // Gram-Schmidt with one reorthogonalization pass.
  auto try_add = [&](const AlgebraElement& f) {
    if (f.groupoid_ptr() != G) throw DomainError("generators live on different groupoids");
    Eigen::VectorXcd v = dense(f);
    const double norm = v.norm();
    if (norm == 0.0) return;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) v -= q * q.dot(v);
    }
    const double residual = v.norm();
    if (residual <= 1e-9 * norm) return;
    v /= residual;
    basis.push_back(v);
    elements.push_back(sparse(G, v));
  };

  for (const auto& g : generators) try_add(g);
  for (std::size_t done = 0; done < elements.size(); ++done) {
    const AlgebraElement b = elements[done];
    try_add(involution(b));
    for (std::size_t j = 0; j <= done; ++j) {
      const AlgebraElement a = elements[j];
      try_add(convolve(a, b));
      try_add(convolve(b, a));
    }
  }
  return basis.size();
}

Scalar BimoduleOperator::operator()(EdgeIndex row, EdgeIndex col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar{} : it->second;
}

void BimoduleOperator::add(EdgeIndex row, EdgeIndex col, Scalar value) {
  auto& slot = entries_[{row, col}];
  slot += value;
  if (slot == Scalar{}) entries_.erase({row, col});
}

EdgeFunction BimoduleOperator::apply(const EdgeFunction& zeta) const {
  std::map<EdgeIndex, Scalar> acc;
  for (const auto& [pos, value] : entries_) acc[pos.first] += value * zeta(pos.second);
  EdgeFunction out;
  for (const auto& [e, v] : acc) out.set(e, v);
  return out;
}

BimoduleOperator operator+(const BimoduleOperator& a, const BimoduleOperator& b) {
  BimoduleOperator out = a;
  for (const auto& [pos, v] : b.entries_) out.add(pos.first, pos.second, v);
  return out;
}

double max_deviation(const BimoduleOperator& a, const BimoduleOperator& b) {
  double worst = 0.0;
  for (const auto& [pos, v] : a.entries_) worst = std::max(worst, std::abs(v - b(pos.first, pos.second)));
  for (const auto& [pos, v] : b.entries_) worst = std::max(worst, std::abs(v - a(pos.first, pos.second)));
  return worst;
}

VertexFunction inner_product(const Skeleton& s, const EdgeFunction& xi, const EdgeFunction& eta) {
  std::map<VertexIndex, Scalar> acc;
  for (const auto& [e, x] : xi.values()) acc[s.edge(e).source] += std::conj(x) * eta(e);
  VertexFunction out;
  for (const auto& [v, c] : acc) out.set(v, c);
  return out;
}

EdgeFunction left_action(const Skeleton& s, const VertexFunction& f, const EdgeFunction& xi) {
  EdgeFunction out;
  for (const auto& [e, x] : xi.values()) out.set(e, f(s.edge(e).range) * x);
  return out;
}

EdgeFunction right_action(const Skeleton& s, const EdgeFunction& xi, const VertexFunction& f) {
  EdgeFunction out;
  for (const auto& [e, x] : xi.values()) out.set(e, x * f(s.edge(e).source));
  return out;
}

BimoduleOperator rank_one(const Skeleton& s, const EdgeFunction& xi, const EdgeFunction& eta) {
  BimoduleOperator out;
  for (const auto& [e, x] : xi.values()) {
    for (const auto& [e2, y] : eta.values()) {
      if (s.edge(e).source == s.edge(e2).source) out.add(e, e2, x * std::conj(y));
    }
  }
  return out;
}

BimoduleOperator phi(const Skeleton& s, const VertexFunction& f) {
  BimoduleOperator out;
  for (std::uint32_t e = 0; e < s.edges().size(); ++e) {
    out.add(EdgeIndex{e}, EdgeIndex{e}, f(s.edges()[e].range));
  }
  return out;
}

RankOneCheck check_rank_one_properties(const Skeleton& s, const VertexFunction& f,
                                       const RankOnePairs& pairs) {
  RankOneCheck check;
  for (std::uint32_t ei = 0; ei < s.edges().size(); ++ei) {
    const EdgeIndex e{ei};
    Scalar sum{};
    for (const auto& [xi, eta] : pairs) sum += xi(e) * std::conj(eta(e));
    check.pointwise = std::max(check.pointwise, std::abs(sum - f(s.edge(e).range)));
  }
  for (const auto& [xi, eta] : pairs) {
    for (const auto& [e, x] : xi.values()) {
      for (const auto& [e2, y] : eta.values()) {
        if (e != e2 && s.edge(e).source == s.edge(e2).source) {
          check.orthogonality = std::max(check.orthogonality, std::abs(x * std::conj(y)));
        }
      }
    }
  }
  BimoduleOperator total;
  for (const auto& [xi, eta] : pairs) total = total + rank_one(s, xi, eta);
  check.operator_sum = max_deviation(total, phi(s, f));
  return check;
}

bool ck_input_admissible(const Skeleton& s, const VertexFunction& f) {
  const auto rg = classify_vertices(s).rg;
  return std::all_of(f.values().begin(), f.values().end(), [&](const auto& entry) {
    return std::binary_search(rg.begin(), rg.end(), entry.first);
  });
}

RankOneDecomposition rank_one_decomposition(const Skeleton& s, const VertexFunction& f) {
  RankOneDecomposition out;
  out.supported_on_regular = ck_input_admissible(s, f);
  for (std::uint32_t ei = 0; ei < s.edges().size(); ++ei) {
    const EdgeIndex e{ei};
    const Scalar value = f(s.edge(e).range);
    if (value == Scalar{}) continue;
    out.pairs.emplace_back(EdgeFunction::indicator(e, value), EdgeFunction::indicator(e));
  }
  if (!check_rank_one_properties(s, f, out.pairs).exact()) {
    throw Error("rank-one decomposition failed its own verification");
  }
  return out;
}

AlgebraElement psi0(const VertexFunction& f, const GroupoidPtr& G) {
  std::map<std::size_t, Scalar> out;
  for (auto x : G->objects()) {
    const Scalar value = f(G->space()[x].range());
    if (value == Scalar{}) continue;
    auto u = G->unit(x);
    if (!u) throw Error("groupoid has no unit at an object");
    out.emplace(*u, value);
  }
  return AlgebraElement(G, out);
}

AlgebraElement psi1(const EdgeFunction& xi, const GroupoidPtr& G) {
  if (G->rank() != 1) throw DomainError("psi1 is defined for 1-graphs only");
  const Skeleton& s = G->skeleton();
  const Degree one = Degree::unit(1, 0);
  std::map<std::size_t, Scalar> out;
  for (auto x : G->objects()) {
    const Path& path = G->space()[x].path;
    if (path.degree()[0] < 1) continue;
    const Scalar value = xi(path.word().front());
    if (value == Scalar{}) continue;
    auto tail = G->space().find(factorize(s, path, one).second);
    auto g = tail ? G->find({x, Offset{1}, *tail}) : std::nullopt;
    if (!g) throw Error("groupoid lacks (x, 1, sigma x) for an object x");
    out.emplace(*g, value);
  }
  return AlgebraElement(G, out);
}

AlgebraElement psi_k(const RankOnePairs& pairs, const GroupoidPtr& G) {
  AlgebraElement out(G);
  for (const auto& [xi, eta] : pairs) out = out + convolve(psi1(xi, G), involution(psi1(eta, G)));
  return out;
}

AlgebraElement quotient_restrict(const AlgebraElement& f, const GroupoidPtr& boundary) {
  if (f.groupoid().space_ptr() != boundary->space_ptr()) {
    throw DomainError("quotient needs both groupoids built over the same path space");
  }
  std::map<std::size_t, Scalar> out;
  for (const auto& [i, c] : f.coefficients()) {
    if (auto j = boundary->find(f.groupoid()[i].key())) out.emplace(*j, c);
  }
  return AlgebraElement(boundary, out);
}

namespace {

Scalar torus_power(const std::vector<Scalar>& t, const Offset& m) {
  Scalar out = 1.0;
  for (int i = 0; i < m.rank(); ++i) {
    const Scalar base = m[i] >= 0 ? t[static_cast<std::size_t>(i)]
                                  : std::conj(t[static_cast<std::size_t>(i)]);
    for (int n = 0; n < std::abs(m[i]); ++n) out *= base;
  }
  return out;
}

}  // namespace

AlgebraElement gauge_automorphism(const AlgebraElement& f, const std::vector<Scalar>& t) {
  if (static_cast<int>(t.size()) != f.groupoid().rank()) {
    throw DomainError("gauge parameter must have one coordinate per color");
  }
  for (const auto& ti : t) {
    if (std::abs(std::abs(ti) - 1.0) > 1e-12) throw DomainError("gauge parameter must lie on the unit circle");
  }
  std::map<std::size_t, Scalar> out;
  for (const auto& [i, c] : f.coefficients()) out.emplace(i, torus_power(t, f.groupoid()[i].m) * c);
  return AlgebraElement(f.groupoid_ptr(), out);
}

AlgebraElement gauge_automorphism(const AlgebraElement& f, Scalar t) {
  return gauge_automorphism(f, std::vector<Scalar>{t});
}

SampleSource::SampleSource(std::uint64_t seed) : engine_(seed) {}

Scalar SampleSource::scalar() {
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return {re, im};
}

Scalar SampleSource::unit_scalar() {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(engine_));
}

std::size_t SampleSource::index(std::size_t n) {
  if (n == 0) throw DomainError("cannot pick from an empty range");
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  return pick(engine_);
}

AlgebraElement SampleSource::element(const GroupoidPtr& G) {
  std::map<std::size_t, Scalar> out;
  for (std::size_t i = 0; i < G->size(); ++i) out.emplace(i, scalar());
  return AlgebraElement(G, out);
}

AlgebraElement SampleSource::homogeneous(const GroupoidPtr& G, const Offset& m) {
  std::map<std::size_t, Scalar> out;
  for (std::size_t i = 0; i < G->size(); ++i) {
    if ((*G)[i].m == m) out.emplace(i, scalar());
  }
  return AlgebraElement(G, out);
}

VertexFunction SampleSource::vertex_function(const Skeleton& s) {
  VertexFunction f;
  for (std::uint32_t v = 0; v < s.vertices().size(); ++v) f.set(VertexIndex{v}, scalar());
  return f;
}

VertexFunction SampleSource::vertex_function_on(const std::vector<VertexIndex>& support) {
  VertexFunction f;
  for (auto v : support) f.set(v, scalar());
  return f;
}

EdgeFunction SampleSource::edge_function(const Skeleton& s) {
  EdgeFunction xi;
  for (std::uint32_t e = 0; e < s.edges().size(); ++e) xi.set(EdgeIndex{e}, scalar());
  return xi;
}

namespace {

RelationReport make_report(std::string identity, int samples, std::uint64_t seed, double deviation,
                           double tol) {
  return {std::move(identity), samples, seed, deviation, tol, deviation <= tol};
}

double matrix_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

void require_samples(int samples, double tol) {
  if (samples < 1) throw DomainError("samples must be >= 1");
  if (!(tol > 0.0)) throw DomainError("tolerance must be > 0");
}

}  // namespace

std::pair<RelationReport, RelationReport> verify_toeplitz_pair(const GroupoidPtr& G, int samples,
                                                               double tol, std::uint64_t seed) {
  require_samples(samples, tol);
  if (G->rank() != 1) throw DomainError("Toeplitz pairs are defined for 1-graphs only");
  const Skeleton& s = G->skeleton();
  SampleSource rng(seed);
  double dev_i = 0.0;
  double dev_ii = 0.0;
  for (int n = 0; n < samples; ++n) {
    const auto f = rng.vertex_function(s);
    const auto xi = rng.edge_function(s);
    const auto eta = rng.edge_function(s);
    const auto lhs_i = convolve(involution(psi1(xi, G)), psi1(eta, G));
    const auto rhs_i = psi0(inner_product(s, xi, eta), G);
    dev_i = std::max(dev_i, max_deviation(lhs_i, rhs_i));
    const auto lhs_ii = convolve(psi0(f, G), psi1(xi, G));
    const auto rhs_ii = psi1(left_action(s, f, xi), G);
    dev_ii = std::max(dev_ii, max_deviation(lhs_ii, rhs_ii));
  }
  return {make_report("toeplitz_i", samples, seed, dev_i, tol),
          make_report("toeplitz_ii", samples, seed, dev_ii, tol)};
}

RelationReport verify_ck_pair(const GroupoidPtr& boundary, int samples, double tol,
                              std::uint64_t seed) {
  require_samples(samples, tol);
  if (boundary->rank() != 1) throw DomainError("Cuntz-Krieger pairs are defined for 1-graphs only");
  const Skeleton& s = boundary->skeleton();
  const auto rg = classify_vertices(s).rg;
  SampleSource rng(seed);
  double dev = 0.0;
  for (int n = 0; n < samples; ++n) {
    const auto f = rng.vertex_function_on(rg);
    const auto lhs = psi0(f, boundary);
    const auto rhs = psi_k(rank_one_decomposition(s, f).pairs, boundary);
    dev = std::max(dev, max_deviation(lhs, rhs));
    // Units at vertex paths: both sides must vanish there.
    for (auto x : boundary->objects()) {
      if (!boundary->space()[x].path.is_vertex()) continue;
      auto u = boundary->unit(x);
      if (!u) continue;
      dev = std::max({dev, std::abs(lhs(*u)), std::abs(rhs(*u))});
    }
  }
  return make_report("cuntz_krieger", samples, seed, dev, tol);
}


std::vector<RelationReport> verify_gauge(const GroupoidPtr& G, int samples, double tol,
                                         std::uint64_t seed) {
  require_samples(samples, tol);
  const Skeleton& s = G->skeleton();
  SampleSource rng(seed);
  std::set<Offset> level_set;
  for (const auto& g : G->elements()) level_set.insert(g.m);
  const std::vector<Offset> levels(level_set.begin(), level_set.end());

  double automorphism = 0.0;
  double grading = 0.0;
  double fixes_psi0 = 0.0;
  double scales_psi1 = 0.0;
  for (int n = 0; n < samples; ++n) {
    std::vector<Scalar> t;
    for (int c = 0; c < G->rank(); ++c) t.push_back(rng.unit_scalar());
    const auto f = rng.element(G);
    const auto g = rng.element(G);
    automorphism = std::max(
        automorphism, max_deviation(gauge_automorphism(convolve(f, g), t),
                                    convolve(gauge_automorphism(f, t), gauge_automorphism(g, t))));

    if (!levels.empty()) {
      const Offset& a = levels[rng.index(levels.size())];
      const Offset& b = levels[rng.index(levels.size())];
      const auto product = convolve(rng.homogeneous(G, a), rng.homogeneous(G, b));
      for (const auto& [i, c] : product.coefficients()) {
        if ((*G)[i].m != a + b) grading = std::max(grading, std::abs(c));
      }
    }

    const auto h = psi0(rng.vertex_function(s), G);
    fixes_psi0 = std::max(fixes_psi0, max_deviation(gauge_automorphism(h, t), h));

    if (G->rank() == 1) {
      const auto xi = psi1(rng.edge_function(s), G);
      scales_psi1 = std::max(scales_psi1, max_deviation(gauge_automorphism(xi, t), t[0] * xi));
    }
  }
  std::vector<RelationReport> out{
      make_report("gauge_automorphism", samples, seed, automorphism, tol),
      make_report("gauge_grading", samples, seed, grading, tol),
      make_report("gauge_fixes_psi0", samples, seed, fixes_psi0, tol)};
  if (G->rank() == 1) out.push_back(make_report("gauge_scales_psi1", samples, seed, scales_psi1, tol));
  return out;
}

std::vector<RelationReport> verify_algebra_properties(const GroupoidPtr& G, int samples,
                                                      double tol, std::uint64_t seed) {
  require_samples(samples, tol);
  SampleSource rng(seed);
  const RegularRepresentation pi(G);
  double associativity = 0.0;
  double distributivity = 0.0;
  double anti_multiplicative = 0.0;
  double involutive = 0.0;
  double submultiplicative = 0.0;
  double homomorphism = 0.0;
  double adjoint = 0.0;
  for (int n = 0; n < samples; ++n) {
    const auto f = rng.element(G);
    const auto g = rng.element(G);
    const auto h = rng.element(G);
    const auto fg = convolve(f, g);
    associativity = std::max(associativity, max_deviation(convolve(fg, h), convolve(f, convolve(g, h))));
    distributivity = std::max(distributivity,
                              max_deviation(convolve(f, g + h), fg + convolve(f, h)));
    anti_multiplicative = std::max(
        anti_multiplicative, max_deviation(involution(fg), convolve(involution(g), involution(f))));
    involutive = std::max(involutive, max_deviation(involution(involution(f)), f));
    submultiplicative = std::max(submultiplicative, i_norm(fg) - i_norm(f) * i_norm(g));
    for (auto u : G->objects()) {
      const auto pf = pi(f, u);
      homomorphism = std::max(homomorphism, matrix_deviation(pi(fg, u), pf * pi(g, u)));
      adjoint = std::max(adjoint, matrix_deviation(pi(involution(f), u), pf.adjoint()));
    }
  }
  std::vector<RelationReport> out{
      make_report("associativity", samples, seed, associativity, tol),
      make_report("distributivity", samples, seed, distributivity, tol),
      make_report("involution_anti_multiplicative", samples, seed, anti_multiplicative, tol),
      make_report("involution_involutive", samples, seed, involutive, tol),
      make_report("i_norm_submultiplicative", samples, seed, std::max(0.0, submultiplicative), tol),
      make_report("regular_representation_homomorphism", samples, seed, homomorphism, tol),
      make_report("regular_representation_adjoint", samples, seed, adjoint, tol)};

  if (G->size() <= 50) {
    double deltas = 0.0;
    int triples = 0;
    for (std::size_t a = 0; a < G->size(); ++a) {
      const auto da = AlgebraElement::delta(G, a);
      for (std::size_t b = 0; b < G->size(); ++b) {
        const auto db = AlgebraElement::delta(G, b);
        const auto dab = convolve(da, db);
        for (std::size_t c = 0; c < G->size(); ++c) {
          const auto dc = AlgebraElement::delta(G, c);
          deltas = std::max(deltas, max_deviation(convolve(dab, dc), convolve(da, convolve(db, dc))));
          ++triples;
        }
      }
    }
    out.push_back(make_report("delta_associativity", triples, seed, deltas, tol));
  }
  return out;
}

RelationReport verify_quotient(const GroupoidPtr& full, const GroupoidPtr& boundary, int samples,
                               std::uint64_t seed) {
  require_samples(samples, 1.0);
  SampleSource rng(seed);
  double dev = 0.0;
  for (int n = 0; n < samples; ++n) {
    const auto f = rng.element(full);
    const auto g = rng.element(full);
    dev = std::max(dev, max_deviation(quotient_restrict(convolve(f, g), boundary),
                                      convolve(quotient_restrict(f, boundary),
                                               quotient_restrict(g, boundary))));
  }
  // Same summands in the same order on both sides, so the match is exact.
  return make_report("quotient_multiplicative", samples, seed, dev, 0.0);
}

GenerationReport generation_check(const GroupoidPtr& G) {
  if (G->rank() != 1) throw DomainError("generation check is defined for 1-graphs only");
  const Skeleton& s = G->skeleton();
  std::vector<AlgebraElement> generators;
  for (std::uint32_t v = 0; v < s.vertices().size(); ++v) {
    generators.push_back(psi0(VertexFunction::indicator(VertexIndex{v}), G));
  }
  for (std::uint32_t e = 0; e < s.edges().size(); ++e) {
    generators.push_back(psi1(EdgeFunction::indicator(EdgeIndex{e}), G));
  }
  std::vector<AlgebraElement> all;
  for (std::size_t i = 0; i < G->size(); ++i) all.push_back(AlgebraElement::delta(G, i));
  return {algebra_dimension(generators), algebra_dimension(all)};
}

}  // namespace kgraph
