#include "kgraph/paths.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "kgraph/error.hpp"

namespace kgraph {

Path Path::vertex(const Skeleton& s, VertexIndex v) {
  if (v.value >= s.vertices().size()) throw DomainError("vertex index out of range");
  return Path(v, v, {}, Degree::zero(s.rank()));
}

Path Path::edge(const Skeleton& s, EdgeIndex e) {
  const Edge& edge = s.edge(e);
  return Path(edge.range, edge.source, {e}, s.edge_degree(e));
}

std::vector<std::vector<EdgeIndex>> Path::blocks() const {
  std::vector<std::vector<EdgeIndex>> out(static_cast<std::size_t>(degree_.rank()));
  auto it = word_.begin();
  for (int c = 0; c < degree_.rank(); ++c) {
    out[static_cast<std::size_t>(c)].assign(it, it + degree_[c]);
    it += degree_[c];
  }
  return out;
}

namespace {

void require_composable(const Skeleton& s, const std::vector<EdgeIndex>& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (s.edge(word[i]).source != s.edge(word[i + 1]).range) {
      throw DomainError("edges " + s.edge(word[i]).id + " and " + s.edge(word[i + 1]).id +
                        " are not composable");
    }
  }
}

void apply_square(const Skeleton& s, std::vector<EdgeIndex>& word, std::size_t pos) {
  auto swapped = s.exchange(word[pos], word[pos + 1]);
  if (!swapped) {
    throw DomainError("no factorization square for " + s.edge(word[pos]).id + "." +
                      s.edge(word[pos + 1]).id);
  }
  word[pos] = swapped->first;
  word[pos + 1] = swapped->second;
}

}  // namespace

Path normalize(const Skeleton& s, VertexIndex range, std::vector<EdgeIndex> word) {
  if (word.empty()) return Path::vertex(s, range);
  require_composable(s, word);
  auto color = [&](EdgeIndex e) { return s.edge(e).color; };
  // Leftmost descent first; each move removes exactly one color inversion.
  while (true) {
    std::size_t pos = 0;
    while (pos + 1 < word.size() && color(word[pos]) <= color(word[pos + 1])) ++pos;
    if (pos + 1 >= word.size()) break;
    apply_square(s, word, pos);
  }
  std::vector<std::int32_t> degree(static_cast<std::size_t>(s.rank()), 0);
  for (auto e : word) ++degree[static_cast<std::size_t>(color(e))];
  VertexIndex r = s.edge(word.front()).range;
  VertexIndex src = s.edge(word.back()).source;
  return Path(r, src, std::move(word), Degree(std::move(degree)));
}

std::vector<EdgeIndex> rewrite_to_colors(const Skeleton& s, std::vector<EdgeIndex> word,
                                         const std::vector<int>& colors) {
  if (colors.size() != word.size()) throw DomainError("color sequence length mismatch");
  require_composable(s, word);
  for (std::size_t i = 0; i < colors.size(); ++i) {
    std::size_t j = i;
    while (j < word.size() && s.edge(word[j]).color != colors[i]) ++j;
    if (j == word.size()) throw DomainError("color sequence is not a permutation of the word");
    // Letters in [i, j) differ in color from word[j], so each move is a square.
    for (std::size_t pos = j; pos > i; --pos) apply_square(s, word, pos - 1);
  }
  return word;
}

Path compose(const Skeleton& s, const Path& lambda, const Path& mu) {
  if (lambda.source() != mu.range()) {
    throw DomainError("cannot compose " + path_to_string(s, lambda) + " with " +
                      path_to_string(s, mu) + ": s(lambda) != r(mu)");
  }
  std::vector<EdgeIndex> word = lambda.word();
  word.insert(word.end(), mu.word().begin(), mu.word().end());
  return normalize(s, lambda.range(), std::move(word));
}

std::pair<Path, Path> factorize(const Skeleton& s, const Path& lambda, const Degree& m) {
  if (!(m <= lambda.degree())) {
    throw DomainError("cannot factorize at " + m.to_string() + ": not <= " +
                      lambda.degree().to_string());
  }
  const Degree rest = lambda.degree() - m;
  std::vector<int> colors;
  colors.reserve(lambda.word().size());
  for (int c = 0; c < s.rank(); ++c) colors.insert(colors.end(), static_cast<std::size_t>(m[c]), c);
  for (int c = 0; c < s.rank(); ++c) {
    colors.insert(colors.end(), static_cast<std::size_t>(rest[c]), c);
  }
  auto word = rewrite_to_colors(s, lambda.word(), colors);
  const auto split = static_cast<std::ptrdiff_t>(m.length());
  Path head = normalize(s, lambda.range(), {word.begin(), word.begin() + split});
  Path tail = normalize(s, head.source(), {word.begin() + split, word.end()});
  return {std::move(head), std::move(tail)};
}

Path segment(const Skeleton& s, const Path& lambda, const Degree& p, const Degree& q) {
  if (!(p <= q) || !(q <= lambda.degree())) {
    throw DomainError("segment requires 0 <= p <= q <= d(lambda)");
  }
  return factorize(s, factorize(s, lambda, q).first, p).second;
}

namespace {

// Depth-first over color-sorted composable words with the given color sequence.
void extend_sorted(const Skeleton& s, const std::vector<int>& colors, std::vector<EdgeIndex>& word,
                   VertexIndex range, VertexIndex at, std::vector<Path>& out) {
  if (word.size() == colors.size()) {
    out.push_back(normalize(s, range, word));
    return;
  }
  const int want = colors[word.size()];
  for (EdgeIndex e : s.edges_into(at)) {
    if (s.edge(e).color != want) continue;
    word.push_back(e);
    extend_sorted(s, colors, word, range, s.edge(e).source, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<Path> paths_at(const Skeleton& s, VertexIndex v, const Degree& n) {
  if (n.rank() != s.rank()) throw DomainError("degree rank does not match skeleton rank");
  std::vector<int> colors;
  for (int c = 0; c < s.rank(); ++c) colors.insert(colors.end(), static_cast<std::size_t>(n[c]), c);
  std::vector<Path> out;
  std::vector<EdgeIndex> word;
  extend_sorted(s, colors, word, v, v, out);
  return out;
}

std::vector<Path> all_paths(const Skeleton& s, const Degree& n) {
  std::vector<Path> out;
  for (std::uint32_t v = 0; v < s.vertices().size(); ++v) {
    auto at = paths_at(s, VertexIndex{v}, n);
    out.insert(out.end(), std::make_move_iterator(at.begin()), std::make_move_iterator(at.end()));
  }
  return out;
}

std::vector<Path> paths_up_to(const Skeleton& s, const Degree& bound,
                              std::optional<VertexIndex> range) {
  std::vector<Path> out;
  for (const auto& n : degrees_up_to(bound)) {
    if (range) {
      auto at = paths_at(s, *range, n);
      out.insert(out.end(), at.begin(), at.end());
    } else {
      auto at = all_paths(s, n);
      out.insert(out.end(), at.begin(), at.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> all_paths_at(const Skeleton& s, VertexIndex v) {
  if (!has_finitely_many_paths_at(s, v)) {
    throw UnsupportedMode("infinitely many paths at vertex " + s.vertex(v).id);
  }
  std::vector<Path> out;
  std::vector<EdgeIndex> word;
  // Every color-sorted composable word is a normal form; grow them with nondecreasing color.
  std::function<void(VertexIndex, int)> grow = [&](VertexIndex at, int min_color) {
    out.push_back(normalize(s, v, word));
    for (EdgeIndex e : s.edges_into(at)) {
      if (s.edge(e).color < min_color) continue;
      word.push_back(e);
      grow(s.edge(e).source, s.edge(e).color);
      word.pop_back();
    }
  };
  grow(v, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> all_paths_finite(const Skeleton& s) {
  if (!is_acyclic(s)) throw UnsupportedMode("cyclic skeleton has infinitely many paths");
  std::vector<Path> out;
  for (std::uint32_t v = 0; v < s.vertices().size(); ++v) {
    auto at = all_paths_at(s, VertexIndex{v});
    out.insert(out.end(), at.begin(), at.end());
  }
  return out;
}

std::vector<MinimalExtensionPair> lambda_min(const Skeleton& s, const Path& lambda,
                                             const Path& mu) {
  std::vector<MinimalExtensionPair> out;
  if (lambda.range() != mu.range()) return out;
  const Degree target = join(lambda.degree(), mu.degree());
  std::map<Path, std::vector<Path>> by_extension;
  for (auto& alpha : paths_at(s, lambda.source(), target - lambda.degree())) {
    by_extension[compose(s, lambda, alpha)].push_back(alpha);
  }
  for (auto& beta : paths_at(s, mu.source(), target - mu.degree())) {
    auto it = by_extension.find(compose(s, mu, beta));
    if (it == by_extension.end()) continue;
    for (const auto& alpha : it->second) out.push_back({alpha, beta});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> min_common_extensions(const Skeleton& s, const std::vector<Path>& U,
                                        const std::vector<Path>& V) {
  auto require_uniform = [](const std::vector<Path>& set, const char* name) {
    for (const auto& p : set) {
      if (!(p.degree() == set.front().degree())) {
        throw DomainError(std::string("paths in ") + name + " have mixed degrees");
      }
    }
  };
  require_uniform(U, "U");
  require_uniform(V, "V");
  std::set<Path> out;
  for (const auto& lambda : U) {
    for (const auto& mu : V) {
      for (const auto& ext : lambda_min(s, lambda, mu)) out.insert(compose(s, lambda, ext.alpha));
    }
  }
  return {out.begin(), out.end()};
}

AlignmentReport alignment_report(const Skeleton& s, const Degree& bound) {
  AlignmentReport report{bound, 0, 0, std::nullopt, true, true};
  const auto paths = paths_up_to(s, bound);
  for (const auto& lambda : paths) {
    for (const auto& mu : paths) {
      if (lambda.range() != mu.range()) continue;
      ++report.pairs_checked;
      const std::size_t size = lambda_min(s, lambda, mu).size();
      if (!report.argmax || size > report.max_size) {
        report.max_size = size;
        report.argmax = std::pair{lambda, mu};
      }
      if (size > 1) report.at_most_one = false;
    }
  }
  return report;
}

OmegaGraph omega(int k, const Degree& m) {
  if (k < 1) throw DomainError("omega requires k >= 1");
  if (m.rank() != k) throw DomainError("omega: degree rank must equal k");

  const auto points = degrees_up_to(m);
  std::vector<std::string> vertex_ids;
  for (const auto& p : points) vertex_ids.push_back(p.to_string());

  auto edge_id = [](int c, const Degree& p) { return "e" + std::to_string(c + 1) + "@" + p.to_string(); };
  std::vector<EdgeSpec> edges;
  std::vector<SquareSpec> squares;
  for (const auto& p : points) {
    for (int c = 0; c < k; ++c) {
      const Degree next = p + Degree::unit(k, c);
      if (!(next <= m)) continue;
      edges.push_back(EdgeSpec{edge_id(c, p), c + 1, p.to_string(), next.to_string()});
    }
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const Degree pi = p + Degree::unit(k, i);
        const Degree pj = p + Degree::unit(k, j);
        if (!(pi + Degree::unit(k, j) <= m)) continue;
        squares.push_back(SquareSpec{edge_id(i, p), edge_id(j, pi), edge_id(j, p), edge_id(i, pj)});
      }
    }
  }

  OmegaGraph graph{Skeleton(k, std::move(vertex_ids), std::move(edges), std::move(squares)), {}};
  const Skeleton& s = graph.skeleton;
  for (const auto& p : points) {
    const VertexIndex v = *s.find_vertex(p.to_string());
    for (const auto& q : points) {
      if (!(p <= q)) continue;
      auto found = paths_at(s, v, q - p);
      if (found.size() != 1) throw Error("omega: morphism table is not a bijection");
      graph.morphisms.emplace(std::pair{p.coords(), q.coords()}, std::move(found.front()));
    }
  }
  return graph;
}

std::string path_to_string(const Skeleton& s, const Path& p) {
  if (p.is_vertex()) return s.vertex(p.range()).id;
  std::string out;
  for (std::size_t i = 0; i < p.word().size(); ++i) {
    if (i != 0) out += '.';
    out += s.edge(p.word()[i]).id;
  }
  return out;
}

Path parse_path(const Skeleton& s, std::string_view text) {
  if (auto v = s.find_vertex(text)) return Path::vertex(s, *v);
  std::vector<EdgeIndex> word;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('.', start);
    if (end == std::string_view::npos) end = text.size();
    auto id = text.substr(start, end - start);
    auto e = s.find_edge(id);
    if (!e) throw DomainError("unknown vertex or edge '" + std::string(id) + "'");
    word.push_back(*e);
    start = end + 1;
  }
  const VertexIndex range = s.edge(word.front()).range;
  return normalize(s, range, std::move(word));
}

}  // namespace kgraph
