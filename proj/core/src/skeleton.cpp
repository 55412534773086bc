#include "kgraph/skeleton.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "kgraph/error.hpp"

namespace kgraph {

Skeleton::Skeleton(int rank, std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges,
                   std::vector<SquareSpec> squares)
    : rank_(rank) {
  if (rank < 1) throw InvalidSkeleton("rank must be >= 1, got " + std::to_string(rank));

  std::sort(vertex_ids.begin(), vertex_ids.end());
  if (auto dup = std::adjacent_find(vertex_ids.begin(), vertex_ids.end());
      dup != vertex_ids.end()) {
    throw InvalidSkeleton("duplicate vertex id '" + *dup + "'");
  }
  vertices_.reserve(vertex_ids.size());
  for (auto& id : vertex_ids) vertices_.push_back(Vertex{std::move(id)});

  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].id == edges[i - 1].id) {
      throw InvalidSkeleton("duplicate edge id '" + edges[i].id + "'");
    }
  }

  auto resolve_vertex = [this](const std::string& id, const std::string& edge) {
    auto v = find_vertex(id);
    if (!v) throw InvalidSkeleton("edge '" + edge + "' references unknown vertex '" + id + "'");
    return *v;
  };
  edges_.reserve(edges.size());
  for (auto& spec : edges) {
    if (spec.color < 1 || spec.color > rank_) {
      throw InvalidSkeleton("edge '" + spec.id + "' has color " + std::to_string(spec.color) +
                            " outside 1.." + std::to_string(rank_));
    }
    edges_.push_back(Edge{spec.id, spec.color - 1, resolve_vertex(spec.range, spec.id),
                          resolve_vertex(spec.source, spec.id)});
  }

  into_.resize(vertices_.size());
  out_of_.resize(vertices_.size());
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    into_[edges_[i].range.value].push_back(EdgeIndex{i});
    out_of_[edges_[i].source.value].push_back(EdgeIndex{i});
  }

  auto resolve_edge = [this](const std::string& id) {
    auto e = find_edge(id);
    if (!e) throw InvalidSkeleton("square references unknown edge '" + id + "'");
    return *e;
  };
  for (const auto& sq : squares) {
    FactorizationRule rule{resolve_edge(sq.first), resolve_edge(sq.second),
                           resolve_edge(sq.swapped_first), resolve_edge(sq.swapped_second)};
    if (edge(rule.first).color > edge(rule.second).color) {
      rule = FactorizationRule{rule.swapped_first, rule.swapped_second, rule.first, rule.second};
    }
    rules_.push_back(rule);
    exchange_.try_emplace({rule.first.value, rule.second.value},
                          std::pair{rule.swapped_first, rule.swapped_second});
    exchange_.try_emplace({rule.swapped_first.value, rule.swapped_second.value},
                          std::pair{rule.first, rule.second});
  }
}

std::optional<VertexIndex> Skeleton::find_vertex(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                             [](const Vertex& v, std::string_view key) { return v.id < key; });
  if (it == vertices_.end() || it->id != id) return std::nullopt;
  return VertexIndex{static_cast<std::uint32_t>(it - vertices_.begin())};
}

std::optional<EdgeIndex> Skeleton::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return EdgeIndex{static_cast<std::uint32_t>(it - edges_.begin())};
}

std::optional<std::pair<EdgeIndex, EdgeIndex>> Skeleton::exchange(EdgeIndex a, EdgeIndex b) const {
  auto it = exchange_.find({a.value, b.value});
  if (it == exchange_.end()) return std::nullopt;
  return it->second;
}

Skeleton load_skeleton(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
    int rank = doc.at("rank").get<int>();
    std::vector<std::string> vertices;
    for (const auto& v : doc.at("vertices")) vertices.push_back(v.at("id").get<std::string>());
    std::vector<EdgeSpec> edges;
    for (const auto& e : doc.value("edges", nlohmann::json::array())) {
      edges.push_back(EdgeSpec{e.at("id").get<std::string>(), e.at("color").get<int>(),
                               e.at("range").get<std::string>(),
                               e.at("source").get<std::string>()});
    }
    std::vector<SquareSpec> squares;
    for (const auto& sq : doc.value("squares", nlohmann::json::array())) {
      squares.push_back(SquareSpec{
          sq.at("first").get<std::string>(), sq.at("second").get<std::string>(),
          sq.at("swapped_first").get<std::string>(), sq.at("swapped_second").get<std::string>()});
    }
    return Skeleton(rank, std::move(vertices), std::move(edges), std::move(squares));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
}

Skeleton load_skeleton_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_skeleton(buffer.str());
}

namespace {

using EdgePair = std::pair<EdgeIndex, EdgeIndex>;

std::vector<EdgePair> composable_pairs(const Skeleton& s, int left_color, int right_color) {
  std::vector<EdgePair> out;
  for (std::uint32_t g = 0; g < s.edges().size(); ++g) {
    const Edge& eg = s.edges()[g];
    if (eg.color != left_color) continue;
    for (EdgeIndex h : s.edges_into(eg.source)) {
      if (s.edge(h).color == right_color) out.emplace_back(EdgeIndex{g}, h);
    }
  }
  return out;
}

std::vector<std::string> ids(const Skeleton& s, std::initializer_list<EdgeIndex> edges) {
  std::vector<std::string> out;
  for (auto e : edges) out.push_back(s.edge(e).id);
  return out;
}

std::string word_string(const Skeleton& s, const std::vector<EdgeIndex>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i != 0) out += '.';
    out += s.edge(word[i]).id;
  }
  return out;
}

}  // namespace

ValidationReport validate_squares(const Skeleton& s) {
  ValidationReport report{"squares", {}};
  auto color = [&](EdgeIndex e) { return s.edge(e).color; };

  for (const auto& rule : s.rules()) {
    const auto& f = s.edge(rule.first);
    const auto& g = s.edge(rule.second);
    const auto& sf = s.edge(rule.swapped_first);
    const auto& sg = s.edge(rule.swapped_second);
    auto edges = ids(s, {rule.first, rule.second, rule.swapped_first, rule.swapped_second});
    if (s.rank() == 1) {
      report.issues.push_back({"rule_in_rank_one", edges, "a 1-graph has no factorization squares"});
      continue;
    }
    if (color(rule.first) == color(rule.second) || color(rule.swapped_first) != g.color ||
        color(rule.swapped_second) != f.color) {
      report.issues.push_back({"invalid_rule", edges, "square colors are inconsistent"});
      continue;
    }
    std::vector<std::string> broken;
    if (f.source != g.range) broken.push_back("first*second is not composable");
    if (sf.source != sg.range) broken.push_back("swapped side is not composable");
    if (sf.range != f.range) broken.push_back("ranges of the two sides differ");
    if (sg.source != g.source) broken.push_back("sources of the two sides differ");
    for (auto& why : broken) report.issues.push_back({"invalid_rule", edges, why});
  }

  for (int i = 0; i < s.rank(); ++i) {
    for (int j = i + 1; j < s.rank(); ++j) {
      std::map<EdgePair, int> forward_hits;
      std::map<EdgePair, int> backward_hits;
      for (const auto& rule : s.rules()) {
        if (color(rule.first) != i || color(rule.second) != j) continue;
        ++forward_hits[{rule.first, rule.second}];
        ++backward_hits[{rule.swapped_first, rule.swapped_second}];
      }
      auto check = [&](const std::vector<EdgePair>& pairs, std::map<EdgePair, int>& hits) {
        for (const auto& [a, b] : pairs) {
          int n = hits.count({a, b}) ? hits[{a, b}] : 0;
          if (n == 0) {
            report.issues.push_back({"missing_factorization", ids(s, {a, b}),
                                     "no square has " + s.edge(a).id + "." + s.edge(b).id +
                                         " as a side"});
          } else if (n > 1) {
            report.issues.push_back({"ambiguous_factorization", ids(s, {a, b}),
                                     std::to_string(n) + " squares share the side " +
                                         s.edge(a).id + "." + s.edge(b).id});
          }
        }
      };
      check(composable_pairs(s, i, j), forward_hits);
      check(composable_pairs(s, j, i), backward_hits);
    }
  }
  return report;
}

ValidationReport validate_associativity(const Skeleton& s) {
  ValidationReport report{"associativity", {}};
  if (s.rank() < 3) return report;

  using Word = std::vector<EdgeIndex>;
  for (std::uint32_t a = 0; a < s.edges().size(); ++a) {
    const Edge& ea = s.edges()[a];
    for (EdgeIndex b : s.edges_into(ea.source)) {
      const Edge& eb = s.edge(b);
      if (eb.color <= ea.color) continue;
      for (EdgeIndex c : s.edges_into(eb.source)) {
        if (s.edge(c).color <= eb.color) continue;
        // Explore every word reachable from a.b.c by square moves in either direction.
        const Word start{EdgeIndex{a}, b, c};
        std::set<Word> seen{start};
        std::deque<Word> queue{start};
        std::map<std::vector<int>, Word> by_colors;
        bool diverged = false;
        while (!queue.empty() && !diverged) {
          Word w = queue.front();
          queue.pop_front();
          std::vector<int> colors{s.edge(w[0]).color, s.edge(w[1]).color, s.edge(w[2]).color};
          auto [it, fresh] = by_colors.try_emplace(colors, w);
          if (!fresh && it->second != w) {
            report.issues.push_back({"hexagon_failure", ids(s, {EdgeIndex{a}, b, c}),
                                     "rewrites diverge: " + word_string(s, it->second) + " vs " +
                                         word_string(s, w)});
            diverged = true;
            break;
          }
          for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            auto swapped = s.exchange(w[pos], w[pos + 1]);
            if (!swapped) continue;
            Word next = w;
            next[pos] = swapped->first;
            next[pos + 1] = swapped->second;
            if (seen.insert(next).second) queue.push_back(std::move(next));
          }
        }
      }
    }
  }
  return report;
}

namespace {

// 0 = unvisited, 1 = on stack, 2 = done. Returns true if a cycle is reachable from v.
bool cycle_from(const Skeleton& s, VertexIndex start, std::vector<int>& state) {
  // Iterative DFS along range -> source.
  std::vector<std::pair<VertexIndex, std::size_t>> stack;
  if (state[start.value] != 0) return false;
  stack.emplace_back(start, 0);
  state[start.value] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& in = s.edges_into(v);
    if (next == in.size()) {
      state[v.value] = 2;
      stack.pop_back();
      continue;
    }
    VertexIndex w = s.edge(in[next++]).source;
    if (state[w.value] == 1) return true;
    if (state[w.value] == 0) {
      state[w.value] = 1;
      stack.emplace_back(w, 0);
    }
  }
  return false;
}

}  // namespace

bool is_acyclic(const Skeleton& s) {
  std::vector<int> state(s.vertices().size(), 0);
  for (std::uint32_t v = 0; v < s.vertices().size(); ++v) {
    if (cycle_from(s, VertexIndex{v}, state)) return false;
  }
  return true;
}

bool has_finitely_many_paths_at(const Skeleton& s, VertexIndex v) {
  std::vector<int> state(s.vertices().size(), 0);
  return !cycle_from(s, v, state);
}

std::int64_t longest_path_length(const Skeleton& s) {
  if (!is_acyclic(s)) throw UnsupportedMode("longest path requested on a cyclic skeleton");
  // Memoized DFS: longest[v] = longest edge chain starting at range v.
  std::vector<std::int64_t> longest(s.vertices().size(), -1);
  std::function<std::int64_t(VertexIndex)> visit = [&](VertexIndex v) -> std::int64_t {
    if (longest[v.value] >= 0) return longest[v.value];
    std::int64_t best = 0;
    for (EdgeIndex e : s.edges_into(v)) best = std::max(best, 1 + visit(s.edge(e).source));
    return longest[v.value] = best;
  };
  std::int64_t best = 0;
  for (std::uint32_t v = 0; v < s.vertices().size(); ++v) best = std::max(best, visit({v}));
  return best;
}

std::string export_dot(const Skeleton& s) {
  std::ostringstream out;
  auto quoted = [](const std::string& id) {
    std::string q = "\"";
    for (char ch : id) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + '"';
  };
  out << "digraph kgraph {\n";
  for (const auto& v : s.vertices()) out << "  " << quoted(v.id) << ";\n";
  for (const auto& e : s.edges()) {
    out << "  " << quoted(s.vertex(e.source).id) << " -> " << quoted(s.vertex(e.range).id)
        << " [label=" << quoted(e.id + " : " + std::to_string(e.color + 1)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace kgraph
