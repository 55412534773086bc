#include "kgraph_cli/cli.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kgraph/error.hpp"
#include "kgraph/groupoid.hpp"
#include "kgraph/paths.hpp"
#include "kgraph/serialize.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph::cli {

namespace {

using nlohmann::json;

// A usage-level failure that should surface as exit code 2.
struct UsageError : Error {
  using Error::Error;
};

bool is_scalar_list(const json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) {
           return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(), [](const json& x) {
                                         return x.is_primitive();
                                       }));
         });
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::string out = "{";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar_text(j[i]);
    return out + "}";
  }
  return j.dump();
}

void render_text(const json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive() || is_scalar_list(value)) {
        out << pad << key << ": " << scalar_text(value) << '\n';
      } else {
        out << pad << key << ":\n";
        render_text(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object()) {
        out << pad << "-\n";
        render_text(item, indent + 2, out);
      } else {
        out << pad << "- " << scalar_text(item) << '\n';
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

std::string render(const json& report, Format format) {
  if (format == Format::text) {
    std::ostringstream out;
    render_text(report, 0, out);
    return out.str();
  }
  return report.dump(2) + "\n";
}

void require_format(const RunConfig& config) {
  if (config.format == Format::dot) throw UsageError("--format dot is only valid for export");
}

std::string mode_name(const Mode& mode) {
  return mode.is_exact() ? "exact" : "truncated " + mode.bound.to_string();
}

// Loads and checks the instance; an invalid skeleton short-circuits with exit code 1.
std::optional<CommandResult> load_valid(const RunConfig& config, std::unique_ptr<Skeleton>& out) {
  out = std::make_unique<Skeleton>(load_skeleton_file(config.instance));
  const auto squares = validate_squares(*out);
  const auto hexagons = squares.passed() ? validate_associativity(*out) : ValidationReport{};
  if (squares.passed() && hexagons.passed()) return std::nullopt;
  json report = {{"valid", false}, {"squares", serial::validation(squares)}};
  if (!hexagons.check.empty()) report["associativity"] = serial::validation(hexagons);
  return CommandResult{kExitFailure, render(report, config.format)};
}

void require_exact_acyclic(const Skeleton& s) {
  if (!is_acyclic(s)) throw UsageError("cyclic skeleton: use --bound");
}

std::shared_ptr<const FinitePathSpace> space_for(const Skeleton& s, const Mode& mode) {
  if (mode.is_exact()) require_exact_acyclic(s);
  if (!mode.is_exact() && mode.bound.rank() != s.rank()) {
    throw UsageError("--bound needs " + std::to_string(s.rank()) + " coordinates");
  }
  return std::make_shared<const FinitePathSpace>(enumerate_path_space(s, mode));
}

VertexIndex vertex_arg(const Skeleton& s, const std::string& id) {
  if (id.empty()) throw UsageError("--vertex is required");
  auto v = s.find_vertex(id);
  if (!v) throw UsageError("unknown vertex '" + id + "'");
  return *v;
}

json groupoid_summary(const FiniteGroupoid& G, bool run_checks, bool& passed) {
  json summary = serial::groupoid(G);
  json isotropy_table = json::array();
  for (auto x : G.objects()) {
    isotropy_table.push_back({{"object", path_to_string(G.skeleton(), G.space()[x].path)},
                              {"size", isotropy(G, x).size()}});
  }
  summary["isotropy"] = std::move(isotropy_table);
  if (run_checks) {
    const auto axioms = verify_groupoid_axioms(G);
    const auto etale = verify_etale(G);
    passed = passed && axioms.passed() && etale.passed();
    summary["axioms"] = serial::structure(axioms);
    summary["etale"] = serial::structure(etale);
  }
  return summary;
}

std::size_t full_dimension(const GroupoidPtr& G) {
  std::vector<AlgebraElement> deltas;
  for (std::size_t i = 0; i < G->size(); ++i) deltas.push_back(AlgebraElement::delta(G, i));
  return algebra_dimension(deltas);
}

json suite(const GroupoidPtr& G, const RunConfig& config, bool boundary, bool& passed) {
  json reports = json::array();
  auto add = [&](const RelationReport& r) {
    passed = passed && r.passed;
    reports.push_back(serial::relation(r));
  };
  for (const auto& r : verify_algebra_properties(G, config.samples, config.tolerance, config.seed)) add(r);
  if (G->rank() == 1) {
    auto [i, ii] = verify_toeplitz_pair(G, config.samples, config.tolerance, config.seed);
    add(i);
    add(ii);
    if (boundary) add(verify_ck_pair(G, config.samples, config.tolerance, config.seed));
  }
  for (const auto& r : verify_gauge(G, config.samples, config.tolerance, config.seed)) add(r);

  json out = {{"size", G->size()}, {"reports", std::move(reports)}};
  if (G->rank() == 1) {
    const auto generation = generation_check(G);
    passed = passed && generation.passed();
    out["generation"] = serial::generation(generation);
    out["dimension"] = generation.full_dimension;
  } else {
    out["generation"] = nullptr;
    out["dimension"] = full_dimension(G);
  }
  return out;
}

}  // namespace

CommandResult cmd_validate(const RunConfig& config) {
  require_format(config);
  const Skeleton s = load_skeleton_file(config.instance);
  const auto squares = validate_squares(s);
  // Hexagon rewriting assumes every square exists, so it runs only after squares pass.
  const auto hexagons = squares.passed() ? validate_associativity(s) : ValidationReport{};
  const bool ok = squares.passed() && hexagons.passed();
  json report = {{"rank", s.rank()},
                 {"vertices", s.vertices().size()},
                 {"edges", s.edges().size()},
                 {"squares", serial::validation(squares)},
                 {"associativity", hexagons.check.empty() ? json(nullptr) : serial::validation(hexagons)},
                 {"acyclic", is_acyclic(s)},
                 {"valid", ok}};
  return {ok ? kExitPass : kExitFailure, render(report, config.format)};
}

CommandResult cmd_paths(const RunConfig& config) {
  require_format(config);
  std::unique_ptr<Skeleton> sp;
  if (auto invalid = load_valid(config, sp)) return *invalid;
  const Skeleton& s = *sp;
  std::vector<Path> found;
  json scope;
  if (config.degree) {
    const Degree n = parse_degree(*config.degree);
    if (n.rank() != s.rank()) throw UsageError("--degree needs " + std::to_string(s.rank()) + " coordinates");
    found = all_paths(s, n);
    scope = serial::degree(n);
  } else if (config.mode.is_exact()) {
    require_exact_acyclic(s);
    found = all_paths_finite(s);
    scope = "all";
  } else {
    found = paths_up_to(s, config.mode.bound);
    scope = "<= " + config.mode.bound.to_string();
  }
  json report = {{"scope", scope}, {"count", found.size()}, {"paths", serial::paths(s, found)}};
  return {kExitPass, render(report, config.format)};
}

CommandResult cmd_lambda_min(const RunConfig& config) {
  require_format(config);
  std::unique_ptr<Skeleton> sp;
  if (auto invalid = load_valid(config, sp)) return *invalid;
  const Skeleton& s = *sp;
  if (config.lambda.empty() || config.mu.empty()) throw UsageError("--lambda and --mu are required");
  const Path lambda = parse_path(s, config.lambda);
  const Path mu = parse_path(s, config.mu);
  const auto pairs = kgraph::lambda_min(s, lambda, mu);
  json report = {{"lambda", path_to_string(s, lambda)},
                 {"mu", path_to_string(s, mu)},
                 {"size", pairs.size()},
                 {"pairs", serial::lambda_min(s, pairs)}};
  return {kExitPass, render(report, config.format)};
}

CommandResult cmd_exhaustive(const RunConfig& config) {
  require_format(config);
  std::unique_ptr<Skeleton> sp;
  if (auto invalid = load_valid(config, sp)) return *invalid;
  const Skeleton& s = *sp;
  const VertexIndex v = vertex_arg(s, config.vertex);
  if (config.set) {
    std::vector<Path> E;
    for (const auto& text : *config.set) E.push_back(parse_path(s, text));
    if (config.mode.is_exact() && !has_finitely_many_paths_at(s, v)) {
      throw UsageError("cyclic skeleton: use --bound");
    }
    const auto result = is_exhaustive(s, v, E, config.mode);
    json report = serial::exhaustive(s, result);
    report["vertex"] = config.vertex;
    report["mode"] = mode_name(config.mode);
    return {result.verdict == Exhaustivity::not_exhaustive ? kExitFailure : kExitPass,
            render(report, config.format)};
  }
  if (!has_finitely_many_paths_at(s, v)) throw UsageError("cyclic skeleton: use --bound with --set");
  json report = {{"vertex", config.vertex},
                 {"minimal_sets", serial::exhaustive_sets(s, minimal_exhaustive_sets(s, v))}};
  return {kExitPass, render(report, config.format)};
}

CommandResult cmd_boundary(const RunConfig& config) {
  require_format(config);
  std::unique_ptr<Skeleton> sp;
  if (auto invalid = load_valid(config, sp)) return *invalid;
  const Skeleton& s = *sp;
  const auto space = space_for(s, config.mode);
  json report = {{"mode", mode_name(config.mode)},
                 {"classification", serial::classification(s, classify_vertices(s))}};
  json certificates = json::array();
  if (space->is_exact()) {
    const BoundaryAnalyzer analyzer(*space);
    json boundary = json::array();
    for (std::size_t i = 0; i < space->size(); ++i) {
      const auto verdict = analyzer.check((*space)[i]);
      if (verdict.is_boundary()) boundary.push_back(path_to_string(s, (*space)[i].path));
      certificates.push_back(serial::boundary_verdict(s, (*space)[i], verdict));
    }
    report["size"] = boundary.size();
    report["boundary"] = std::move(boundary);
  } else {
    for (const auto& x : space->elements()) {
      certificates.push_back(serial::boundary_verdict(s, x, is_boundary(*space, x)));
    }
    report["size"] = nullptr;
    report["boundary"] = nullptr;
  }
  report["certificates"] = std::move(certificates);
  return {kExitPass, render(report, config.format)};
}

CommandResult cmd_groupoid(const RunConfig& config) {
  require_format(config);
  std::unique_ptr<Skeleton> sp;
  if (auto invalid = load_valid(config, sp)) return *invalid;
  const auto space = space_for(*sp, config.mode);
  bool passed = true;
  json report = {{"mode", mode_name(config.mode)}};
  const auto full = build_path_groupoid(space);
  // A truncated space only approximates G; the structural checks would be meaningless.
  report["path_groupoid"] = groupoid_summary(full, space->is_exact(), passed);
  if (space->is_exact()) {
    report["boundary_groupoid"] = groupoid_summary(build_boundary_groupoid(space), true, passed);
  } else {
    report["boundary_groupoid"] = nullptr;
  }
  report["passed"] = passed;
  return {passed ? kExitPass : kExitFailure, render(report, config.format)};
}

CommandResult cmd_verify(const RunConfig& config) {
  require_format(config);
  std::unique_ptr<Skeleton> sp;
  if (auto invalid = load_valid(config, sp)) return *invalid;
  if (!config.mode.is_exact()) throw UsageError("verify needs exact mode");
  const auto space = space_for(*sp, config.mode);
  const auto full = std::make_shared<const FiniteGroupoid>(build_path_groupoid(space));
  const auto boundary = std::make_shared<const FiniteGroupoid>(build_boundary_groupoid(space));
  bool passed = true;
  json report = {{"samples", config.samples}, {"seed", config.seed}, {"tolerance", config.tolerance}};
  report["path_groupoid"] = suite(full, config, false, passed);
  report["boundary_groupoid"] = suite(boundary, config, true, passed);
  const auto quotient = verify_quotient(full, boundary, config.samples, config.seed);
  passed = passed && quotient.passed;
  report["quotient"] = serial::relation(quotient);
  if (sp->rank() == 1) {
    SampleSource rng(config.seed);
    const auto f = rng.vertex_function_on(classify_vertices(*sp).rg);
    const auto check = check_rank_one_properties(*sp, f, rank_one_decomposition(*sp, f).pairs);
    passed = passed && check.exact();
    report["rank_one"] = {{"pointwise", check.pointwise},
                          {"orthogonality", check.orthogonality},
                          {"operator_sum", check.operator_sum},
                          {"exact", check.exact()}};
  }
  report["passed"] = passed;
  return {passed ? kExitPass : kExitFailure, render(report, config.format)};
}

CommandResult cmd_export(const RunConfig& config) {
  const Skeleton s = load_skeleton_file(config.instance);
  if (config.format == Format::dot) return {kExitPass, export_dot(s)};
  json vertices = json::array();
  for (const auto& v : s.vertices()) vertices.push_back({{"id", v.id}});
  json edges = json::array();
  for (const auto& e : s.edges()) {
    edges.push_back({{"id", e.id},
                     {"color", e.color + 1},
                     {"range", s.vertex(e.range).id},
                     {"source", s.vertex(e.source).id}});
  }
  json squares = json::array();
  for (const auto& rule : s.rules()) {
    squares.push_back({{"first", s.edge(rule.first).id},
                       {"second", s.edge(rule.second).id},
                       {"swapped_first", s.edge(rule.swapped_first).id},
                       {"swapped_second", s.edge(rule.swapped_second).id}});
  }
  json document = {{"rank", s.rank()}, {"vertices", vertices}, {"edges", edges}, {"squares", squares}};
  return {kExitPass, render(document, config.format)};
}

CommandResult run(const RunConfig& config) {
  try {
    if (config.command == "validate") return cmd_validate(config);
    if (config.command == "paths") return cmd_paths(config);
    if (config.command == "lambda-min") return cmd_lambda_min(config);
    if (config.command == "exhaustive") return cmd_exhaustive(config);
    if (config.command == "boundary") return cmd_boundary(config);
    if (config.command == "groupoid") return cmd_groupoid(config);
    if (config.command == "verify") return cmd_verify(config);
    if (config.command == "export") return cmd_export(config);
    return {kExitUsage, "error: unknown command '" + config.command + "'\n"};
  } catch (const Error& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n"};
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-graph toolkit: validation, paths, boundary spaces, groupoids and relation checks"};
  app.require_subcommand(1);
  RunConfig config;
  std::string mode_text;
  std::string bound_text;
  std::string format_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", config.instance, "Instance document (JSON)")->required();
    sub->add_option("--mode", mode_text, "exact or truncated")
        ->check(CLI::IsMember({"exact", "truncated"}));
    sub->add_option("--bound", bound_text, "Truncation bound, e.g. 2,2");
    sub->add_option("--samples", config.samples, "Random samples per identity")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", config.tolerance, "Absolute tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "Random seed");
    sub->add_option("--format", format_text, "json, text or dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--out", config.out, "Write the report to this file");
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Check the factorization squares and the associativity hexagons"},
      {"paths", "List paths of a degree, or all paths in scope"},
      {"lambda-min", "Minimal common extensions of two paths"},
      {"exhaustive", "Test a set for exhaustiveness, or list minimal exhaustive sets"},
      {"boundary", "Boundary paths with certificates and the vertex classification"},
      {"groupoid", "Path and boundary groupoids with structural checks"},
      {"verify", "Relation suites on the convolution algebras"},
      {"export", "Export the skeleton as DOT or normalized JSON"}};
  std::string degree_text;
  std::string set_text;
  CLI::Option* degree_option = nullptr;
  CLI::Option* set_option = nullptr;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "paths") degree_option = sub->add_option("--degree", degree_text, "Degree n, e.g. 2,1");
    if (name == "lambda-min") {
      sub->add_option("--lambda", config.lambda, "First path, e.g. b.r")->required();
      sub->add_option("--mu", config.mu, "Second path")->required();
    }
    if (name == "exhaustive") {
      sub->add_option("--vertex", config.vertex, "Vertex id")->required();
      set_option = sub->add_option("--set", set_text, "Comma-separated candidate paths");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    config.command = sub->get_name();
    config.format = format_text.empty() ? (config.command == "export" ? Format::dot : Format::json)
                    : format_text == "text" ? Format::text
                    : format_text == "dot"  ? Format::dot
                                            : Format::json;
    if (!bound_text.empty()) {
      if (mode_text == "exact") throw UsageError("--bound conflicts with --mode exact");
      config.mode = Mode::truncated(parse_degree(bound_text));
    } else if (mode_text == "truncated") {
      throw UsageError("--mode truncated needs --bound");
    }
    if (degree_option && degree_option->count() > 0) config.degree = degree_text;
    if (set_option && set_option->count() > 0) {
      std::vector<std::string> members;
      std::stringstream stream(set_text);
      for (std::string item; std::getline(stream, item, ',');) {
        if (!item.empty()) members.push_back(item);
      }
      config.set = std::move(members);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const CommandResult result = run(config);
  if (result.exit_code == kExitUsage) {
    err << result.output;
    return result.exit_code;
  }
  if (config.out.empty()) {
    out << result.output;
  } else {
    std::ofstream file(config.out);
    if (!(file << result.output)) {
      err << "error: cannot write '" << config.out << "'\n";
      return kExitUsage;
    }
  }
  return result.exit_code;
}

}  // namespace kgraph::cli
