#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "ladder/cli.hpp"
#include "ladder/io.hpp"

namespace fs = std::filesystem;
using namespace ladder;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (fs::path(LADDER_FIXTURE_DIR) / (name + ".json")).string(); }

fs::path scratch(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("ladderlab-test-" + tag);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::input_error);
  CHECK(run({"no-such-command"}).code == cli::input_error);
  CHECK(run({"--help"}).code == cli::ok);
  CHECK(run({"skeleton", "/nonexistent.json"}).code == cli::input_error);
  CHECK(run({"morass", "--deltas", "2,1", "--base", "renormed"}).code == cli::input_error);
  CHECK(run({"morass", "--deltas", "1", "--base", "neither"}).code == cli::input_error);
}

TEST_CASE("verify") {
  CHECK(run({"verify", fixture("b2"), "--ladder", "2"}).code == cli::ok);
  CHECK(run({"verify", fixture("m3"), "--ladder", "2"}).code == cli::verification_failed);
  CHECK(run({"verify", fixture("m3"), "--breadth", "2"}).code == cli::ok);
  CHECK(run({"verify", fixture("b3"), "--breadth", "2"}).code == cli::verification_failed);
}

TEST_CASE("documents go to stdout, summaries to stderr") {
  const Run r = run({"skeleton", fixture("k0")});
  REQUIRE(r.code == cli::ok);
  const io::PosetDocument doc = io::parse_document_text(r.out, "stdout");
  CHECK(doc.norm.has_value());
  CHECK_FALSE(r.err.empty());

  const Run dot = run({"--format", "dot", "export", fixture("m3")});
  REQUIRE(dot.code == cli::ok);
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("amalgamate with set names in the chain") {
  const Run r = run({"amalgamate", fixture("k0"), "--delta", "2", "--chain", "{1},{0,1}"});
  REQUIRE(r.code == cli::ok);
  CHECK(io::parse_document_text(r.out, "stdout").poset.size() == 8);
  CHECK(run({"amalgamate", fixture("k0"), "--delta", "2", "--chain", "{1}"}).code == cli::input_error);
}

TEST_CASE("runs are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"morass", "--deltas", "1,2", "--base", "renormed"},
           {"grow", "--kind", "3ladder", "--stages", "4"},
           {"closure", "--ground", "5", "--n", "1"},
           {"--seed", "9", "grow", "--kind", "2ladder", "--stages", "3"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == cli::ok);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("the range-3 base reports its failing axiom") {
  const Run r = run({"morass", "--deltas", "1,2", "--base", "paper"});
  CHECK(r.code == cli::verification_failed);
  CHECK(r.err.find("(P0)(a)") != std::string::npos);
}

TEST_CASE("--out writes the document, DOT and report") {
  const fs::path dir = scratch("out");
  const Run r = run({"--out", dir.string(), "grow", "--kind", "2ladder", "--stages", "2"});
  REQUIRE(r.code == cli::ok);
  std::size_t json = 0, dot = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    json += e.path().extension() == ".json";
    dot += e.path().extension() == ".dot";
  }
  CHECK(json == 2);
  CHECK(dot == 1);
  CHECK(fs::exists(dir / "report.json"));
  CHECK(io::Json::parse(io::read_text((dir / "report.json").string())).is_object());
  fs::remove_all(dir);
}

TEST_CASE("emitting a ladder system") {
  const fs::path dir = scratch("system");
  REQUIRE(run({"morass", "--deltas", "1,2", "--base", "renormed", "--emit-system", dir.string()}).code == cli::ok);
  for (int a = 0; a <= 2; ++a) {
    CHECK(fs::exists(dir / ("K_" + std::to_string(a) + ".json")));
    CHECK(fs::exists(dir / ("K_" + std::to_string(a) + ".dot")));
  }
  CHECK(fs::exists(dir / "report.json"));
  fs::remove_all(dir);
}

TEST_CASE("fixtures and counterexamples") {
  const Run list = run({"fixture", "--list"});
  CHECK(list.code == cli::ok);
  CHECK(list.out.find("counterexample3") != std::string::npos);
  const Run one = run({"fixture", "m3"});
  CHECK(one.code == cli::ok);
  CHECK(one.out == io::read_text(fixture("m3")));
  CHECK(run({"counterexample", "--depth", "1"}).code == cli::ok);
}

TEST_CASE("acceptance through the command line") {
  const Run r = run({"accept", "--fixtures", LADDER_FIXTURE_DIR});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("10/10 criteria passed") != std::string::npos);
}
