#include "ladder/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace ladder::fixtures {

Lattice chain_lattice(std::size_t n) { return Lattice(chain(n)); }

Lattice m3() {
  const std::vector<std::pair<std::string, std::string>> le = {
      {"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}};
  return Lattice(Poset::from_named_relation({"0", "a", "b", "c", "1"}, le));
}

Lattice n5() {
  const std::vector<std::pair<std::string, std::string>> le = {
      {"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}};
  return Lattice(Poset::from_named_relation({"0", "a", "b", "c", "1"}, le));
}

std::string set_name(std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (unsigned i = 0; i < 64; ++i)
    if (mask >> i & 1u) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

Lattice set_lattice(std::span<const std::uint64_t> family) {
  std::vector<std::string> names;
  for (auto m : family) names.push_back(set_name(m));
  std::vector<OrderPair> gens;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      if (i != j && (family[i] & ~family[j]) == 0) gens.emplace_back(ElementId(i), ElementId(j));
  return Lattice(Poset::from_relation(std::move(names), gens));
}

Lattice boolean(std::size_t k) {
  std::vector<std::uint64_t> family;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) family.push_back(m);
  return set_lattice(family);
}

std::vector<std::uint64_t> union_closure(std::span<const std::uint64_t> generators) {
  std::set<std::uint64_t> closed = {0};
  std::vector<std::uint64_t> frontier = {0};
  while (!frontier.empty()) {
    const auto s = frontier.back();
    frontier.pop_back();
    for (auto g : generators)
      if (closed.insert(s | g).second) frontier.push_back(s | g);
  }
  std::vector<std::uint64_t> out(closed.begin(), closed.end());
  std::stable_sort(out.begin(), out.end(),
                   [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

NormedLattice k0_standard() { return NormedLattice(boolean(2), {0, 1, 2, 2}); }
NormedLattice k0_renormed() { return NormedLattice(boolean(2), {0, 1, 1, 1}); }

NormedLattice two_chain() {
  const std::vector<std::pair<std::string, std::string>> le = {{"0", "a"}};
  return NormedLattice(Lattice(Poset::from_named_relation({"0", "a"}, le)), {0, 1});
}

NormedLattice normed_chain(std::size_t n) {
  std::vector<Ordinal> norm(n);
  for (std::size_t i = 0; i < n; ++i) norm[i] = static_cast<Ordinal>(i);
  return NormedLattice(chain_lattice(n), std::move(norm));
}

Lattice random_lattice(std::mt19937_64& rng, std::size_t max_size, std::size_t ground) {
  std::uniform_int_distribution<std::uint64_t> subset(1, (std::uint64_t{1} << ground) - 1);
  std::uniform_int_distribution<std::size_t> count(1, ground + 1);
  while (true) {
    std::vector<std::uint64_t> gens(count(rng));
    for (auto& g : gens) g = subset(rng);
    auto family = union_closure(gens);
    if (family.size() >= 2 && family.size() <= max_size) return set_lattice(family);
  }
}

NormedLattice random_normed(std::mt19937_64& rng, std::size_t max_size, std::size_t ground) {
  Lattice l = random_lattice(rng, max_size, ground);
  auto order = l.poset().elements();
  std::shuffle(order.begin(), order.end(), rng);
  return norm_from_enumeration(l, order);
}

}  // namespace ladder::fixtures
