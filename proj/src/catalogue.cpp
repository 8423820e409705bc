#include "ladder/catalogue.hpp"

#include <charconv>

#include "ladder/counterexample.hpp"
#include "ladder/fixtures.hpp"

namespace ladder::catalogue {

namespace {

io::PosetDocument plain(const Lattice& l, const std::string& name) {
  return {l.poset(), std::nullopt, io::Json{{"fixture", name}}};
}

io::PosetDocument normed(const NormedLattice& k, const std::string& name) {
  return {k.poset(), k.norms(), io::Json{{"fixture", name}}};
}

// Parses the numeric suffix of name after `prefix`; 0 when absent or bad.
std::size_t suffix(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return 0;
  std::size_t n = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) return 0;
  return n;
}

io::PosetDocument counterexample_doc(std::size_t depth, const std::string& name) {
  const CounterexampleFixture fx = build_counterexample(depth);
  const Poset& p = fx.k_prime.poset();
  io::Json meta{{"fixture", name}, {"depth", depth}};
  meta["k"] = io::names_of(p, fx.k);
  meta["f"] = io::names_of(p, fx.f);
  meta["x"] = io::names_of(p, fx.x);
  meta["y"] = io::names_of(p, fx.y);
  meta["z"] = io::names_of(p, fx.z);
  meta["t"] = io::names_of(p, fx.t);
  return {p, std::nullopt, meta};
}

}  // namespace

std::vector<std::string> standard_names() {
  return {"m3",          "n5",           "b2",          "b3",           "chain1",
          "chain2",      "chain3",       "chain5",      "k0",           "k0-renormed",
          "two-chain",   "normed-chain4", "counterexample1", "counterexample2", "counterexample3"};
}

io::PosetDocument build(const std::string& name) {
  if (name == "m3") return plain(fixtures::m3(), name);
  if (name == "n5") return plain(fixtures::n5(), name);
  if (name == "b2") return plain(fixtures::boolean(2), name);
  if (name == "b3") return plain(fixtures::boolean(3), name);
  if (name == "k0") return normed(fixtures::k0_standard(), name);
  if (name == "k0-renormed") return normed(fixtures::k0_renormed(), name);
  if (name == "two-chain") return normed(fixtures::two_chain(), name);
  if (const auto n = suffix(name, "normed-chain"); n >= 1 && n <= 64) return normed(fixtures::normed_chain(n), name);
  if (const auto n = suffix(name, "chain"); n >= 1 && n <= 64) return plain(fixtures::chain_lattice(n), name);
  if (const auto n = suffix(name, "counterexample"); n >= 1 && n <= 15) return counterexample_doc(n, name);
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace ladder::catalogue
