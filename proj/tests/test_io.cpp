#include <filesystem>
#include <random>

#include "doctest.h"
#include "ladder/catalogue.hpp"
#include "ladder/error.hpp"
#include "ladder/fixtures.hpp"
#include "ladder/io.hpp"

using namespace ladder;

namespace {

std::string error_of(const std::string& text) {
  try {
    io::parse_document_text(text, "in.json");
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse a small document") {
  const auto doc = io::parse_document_text(R"({"elements": ["0", "a", "b"], "le": [["0", "a"], ["0", "b"]],
                                               "norm": {"0": 0, "a": 1, "b": 1}, "meta": {"k": 3}})");
  CHECK(doc.poset.size() == 3);
  CHECK(doc.poset.leq(doc.poset.id("0"), doc.poset.id("b")));
  REQUIRE(doc.norm.has_value());
  CHECK(*doc.norm == std::vector<Ordinal>{0, 1, 1});
  CHECK(doc.meta["k"] == 3);
}

TEST_CASE("schema and syntax errors") {
  CHECK(error_of("{\"elements\": [\"a\",\n  }").find("line 2") != std::string::npos);
  CHECK(error_of("[]").find("object") != std::string::npos);
  CHECK(error_of(R"({"le": []})").find("elements") != std::string::npos);
  CHECK(error_of(R"({"elements": ["a"], "le": [["a", "z"]]})").find("z") != std::string::npos);
  CHECK(error_of(R"({"elements": ["a", "a"]})").find("duplicate") != std::string::npos);
  CHECK(error_of(R"({"elements": ["a", "b"], "le": [["a", "b"], ["b", "a"]]})").find("antisymmetry") !=
        std::string::npos);
  CHECK(error_of(R"({"elements": ["a"], "norm": {"a": -1}})").find("non-negative") != std::string::npos);
  CHECK(error_of(R"({"elements": ["a", "b"], "norm": {"a": 0}})").find("missing") != std::string::npos);
  CHECK_THROWS_AS(io::load_document("/nonexistent/x.json"), InputError);
}

TEST_CASE("canonical form lists cover pairs in order") {
  // a redundant pair and shuffled order in, covers only out
  const auto doc =
      io::parse_document_text(R"({"elements": ["0", "1", "2"], "le": [["1", "2"], ["0", "2"], ["0", "1"]]})");
  const io::Json j = io::to_json(doc);
  CHECK(j["le"] == io::Json::parse(R"([["0", "1"], ["1", "2"]])"));
  CHECK_FALSE(j.contains("norm"));
}

TEST_CASE("round-trips of every built-in fixture") {
  for (const auto& name : catalogue::standard_names()) {
    CAPTURE(name);
    const io::PosetDocument doc = catalogue::build(name);
    const std::string text = io::dump(io::to_json(doc));
    const io::PosetDocument back = io::parse_document_text(text, name);
    CHECK(back.poset == doc.poset);
    CHECK(back.norm == doc.norm);
    CHECK(io::dump(io::to_json(back)) == text);
  }
  CHECK_THROWS_AS(catalogue::build("nope"), InputError);
  CHECK_THROWS_AS(catalogue::build("chain0"), InputError);
}

TEST_CASE("shipped fixture files are canonical and current") {
  for (const auto& name : catalogue::standard_names()) {
    CAPTURE(name);
    const auto path = std::filesystem::path(LADDER_FIXTURE_DIR) / (name + ".json");
    REQUIRE(std::filesystem::exists(path));
    CHECK(io::read_text(path.string()) == io::dump(io::to_json(catalogue::build(name))));
  }
}

TEST_CASE("normed lattices survive a round-trip") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const NormedLattice k = fixtures::random_normed(rng, 15, 5);
    const auto doc = io::parse_document_text(io::dump(io::to_json(k)));
    CHECK(NormedLattice(Lattice(doc.poset), *doc.norm) == k);
  }
}

TEST_CASE("load helpers") {
  const auto dir = std::filesystem::path(LADDER_FIXTURE_DIR);
  CHECK(io::load_lattice((dir / "m3.json").string()) == fixtures::m3());
  CHECK(io::load_normed((dir / "k0.json").string()) == fixtures::k0_standard());
  CHECK_THROWS_AS(io::load_normed((dir / "m3.json").string()), InputError);
}

TEST_CASE("DOT output") {
  const NormedLattice k = fixtures::k0_standard();
  const ElementSet hi = k.poset().make_set({"{0}"});
  const std::string dot = io::to_dot(k.poset(), {&k.norms(), &hi, "k0"});
  CHECK(dot.rfind("digraph k0 {", 0) == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("{0,1}") != std::string::npos);
  CHECK(dot.back() == '\n');
}
