#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "instances.hpp"
#include "kgraph_cli/cli.hpp"

using kgraph::testing::instance_path;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "kgraph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = kgraph::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, expected_code) << r.err;
  return json::parse(r.out);
}

// Runs the installed binary in a shell and returns (exit code, stdout).
std::pair<int, std::string> shell(const std::string& args) {
  const std::string command = std::string(KGRAPH_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  std::string out;
  std::array<char, 4096> buffer{};
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(CliValidate, ExitCodes) {
  EXPECT_EQ(run({"validate", instance_path("A")}).code, 0);
  EXPECT_EQ(run({"validate", instance_path("C")}).code, 0);
  const auto d = run({"validate", instance_path("D")});
  EXPECT_EQ(d.code, 1);
  const json report = json::parse(d.out);
  EXPECT_EQ(report["squares"]["issues"][0]["edges"], json::parse(R"(["b2","r"])"));
  EXPECT_EQ(run({"validate", "/nonexistent/instance.json"}).code, 2);
}

TEST(CliValidate, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate", instance_path("A")}).code, 2);
  EXPECT_EQ(run({"paths", instance_path("A"), "--mode", "truncated"}).code, 2);
  EXPECT_EQ(run({"paths", instance_path("A"), "--samples", "0"}).code, 2);
  EXPECT_EQ(run({"paths", instance_path("A"), "--bound", "1"}).code, 2);
}

TEST(CliBoundary, SingleEdge) {
  const json report = run_json({"boundary", instance_path("B")});
  EXPECT_EQ(report["boundary"], json::parse(R"(["e","w"])"));
  EXPECT_EQ(report["classification"]["rg"], json::parse(R"(["v"])"));
  EXPECT_EQ(run_json({"boundary", instance_path("E")})["size"], 3);
}

TEST(CliBoundary, CyclicNeedsABound) {
  const auto r = run({"boundary", instance_path("A")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cyclic skeleton: use --bound"), std::string::npos);
  const json truncated = run_json({"boundary", instance_path("A"), "--bound", "1,1"});
  EXPECT_TRUE(truncated["boundary"].is_null());
  EXPECT_EQ(truncated["certificates"][0]["status"], "undecided");
}

TEST(CliPaths, DegreeAndScope) {
  const json report = run_json({"paths", instance_path("A"), "--degree", "2,1"});
  EXPECT_EQ(report["count"], 1);
  EXPECT_EQ(run_json({"paths", instance_path("E")})["count"], 6);
  EXPECT_EQ(run_json({"paths", instance_path("A"), "--bound", "1,1"})["count"], 4);
}

TEST(CliLambdaMin, CommutingLoops) {
  const json report = run_json({"lambda-min", instance_path("A"), "--lambda", "b", "--mu", "r"});
  EXPECT_EQ(report["pairs"], json::parse(R"([{"alpha":"r","beta":"b"}])"));
}

TEST(CliExhaustive, VerdictsAndMinimalSets) {
  EXPECT_EQ(run({"exhaustive", instance_path("B"), "--vertex", "v", "--set", "e"}).code, 0);
  EXPECT_EQ(run({"exhaustive", instance_path("B"), "--vertex", "w", "--set", ""}).code, 1);
  const json sets = run_json({"exhaustive", instance_path("B"), "--vertex", "v"});
  EXPECT_EQ(sets["minimal_sets"].size(), 2u);
  const json bounded = run_json({"exhaustive", instance_path("A"), "--vertex", "u", "--set", "b", "--bound", "2,2"});
  EXPECT_EQ(bounded["verdict"], "unknown");
}

TEST(CliGroupoid, Counts) {
  const json b = run_json({"groupoid", instance_path("B")});
  EXPECT_EQ(b["path_groupoid"]["size"], 5);
  EXPECT_EQ(b["boundary_groupoid"]["size"], 4);
  EXPECT_TRUE(b["passed"].get<bool>());
}

TEST(CliVerify, SingleEdgeDimensions) {
  const json b = run_json({"verify", instance_path("B"), "--samples", "20"});
  EXPECT_TRUE(b["passed"].get<bool>());
  EXPECT_EQ(b["path_groupoid"]["dimension"], 5);
  EXPECT_EQ(b["boundary_groupoid"]["dimension"], 4);
}

TEST(CliVerify, LineDimensions) {
  const json e = run_json({"verify", instance_path("E"), "--samples", "20"});
  EXPECT_TRUE(e["passed"].get<bool>());
  EXPECT_EQ(e["boundary_groupoid"]["dimension"], 9);
  EXPECT_EQ(e["quotient"]["max_deviation"], 0.0);
}

TEST(CliOutput, JsonIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"verify", instance_path("E"), "--samples", "10", "--seed", "7"};
  EXPECT_EQ(run(args).out, run(args).out);
  const auto different = run({"verify", instance_path("E"), "--samples", "10", "--seed", "8"});
  EXPECT_NE(run(args).out, different.out);
}

TEST(CliOutput, ExportAndFormats) {
  const auto dot = run({"export", instance_path("B")});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph kgraph {", 0), 0u);
  const json doc = run_json({"export", instance_path("B"), "--format", "json"});
  EXPECT_EQ(doc["edges"][0]["color"], 1);
  const auto text = run({"groupoid", instance_path("B"), "--format", "text"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("size"), std::string::npos);
  EXPECT_EQ(run({"groupoid", instance_path("B"), "--format", "dot"}).code, 2);
}

TEST(CliOutput, OutFlagWritesFile) {
  const std::string path = ::testing::TempDir() + "kgraph_cli_out.json";
  const auto r = run({"groupoid", instance_path("B"), "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  EXPECT_EQ(json::parse(file)["path_groupoid"]["size"], 5);
}

TEST(CliBinary, ExitCodesFromTheExecutable) {
  EXPECT_EQ(shell("validate " + instance_path("A")).first, 0);
  EXPECT_EQ(shell("validate " + instance_path("D")).first, 1);
  EXPECT_EQ(shell("validate /nonexistent.json").first, 2);
  const auto a = shell("groupoid " + instance_path("E"));
  const auto b = shell("groupoid " + instance_path("E"));
  EXPECT_EQ(a.first, 0);
  EXPECT_EQ(a.second, b.second);
}
