#include <random>

#include "doctest.h"
#include "ladder/error.hpp"
#include "ladder/fixtures.hpp"
#include "ladder/normed.hpp"

using namespace ladder;

namespace {

// Largest y <= x with norm y <= xi, by scanning.
std::optional<ElementId> scan_projection(const NormedLattice& k, ElementId x, Ordinal xi) {
  std::optional<ElementId> best;
  for (auto y : k.poset().elements())
    if (k.lattice().leq(y, x) && k.norm(y) <= xi && (!best || k.lattice().leq(*best, y))) best = y;
  return best;
}

std::vector<NormedLattice> samples() {
  std::vector<NormedLattice> out = {fixtures::k0_standard(), fixtures::k0_renormed(), fixtures::two_chain(),
                                    fixtures::normed_chain(5)};
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) out.push_back(fixtures::random_normed(rng, 16, 5));
  return out;
}

}  // namespace

TEST_CASE("check_norm") {
  const NormedLattice k0 = check_norm(fixtures::boolean(2), {0, 1, 2, 2});
  CHECK(k0.transitive());
  CHECK(k0.theta() == 3);
  const NormedLattice zero = check_norm(fixtures::m3(), {0, 0, 0, 0, 0});
  CHECK(zero.transitive());
  CHECK(zero.range() == std::vector<Ordinal>{0});
  // {0,1} = {0} v {1} must carry the larger norm
  CHECK_THROWS_AS(check_norm(fixtures::boolean(2), {0, 2, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(check_norm(fixtures::boolean(2), {0, 1}), InputError);
  const NormedLattice gap = check_norm(fixtures::chain_lattice(2), {0, 2});
  CHECK_FALSE(gap.transitive());
}

TEST_CASE("norms are join-homomorphisms") {
  for (const auto& k : samples())
    for (auto x : k.poset().elements())
      for (auto y : k.poset().elements())
        CHECK(k.norm(k.lattice().join(x, y)) == std::max(k.norm(x), k.norm(y)));
}

TEST_CASE("projections") {
  const NormedLattice k = fixtures::k0_standard();
  const Poset& p = k.poset();
  for (auto x : p.elements()) CHECK(k.projection(x, k.norm(x)) == x);
  CHECK(k.projection(p.id("{1}"), 1) == p.id("{}"));
  CHECK(k.projection(p.id("{0,1}"), 1) == p.id("{0}"));
  CHECK(k.proj_set(p.id("{0,1}")) == std::vector<ElementId>{p.id("{}"), p.id("{0}"), p.id("{0,1}")});
  CHECK(k.proj_set(p.id("{1}")) == std::vector<ElementId>{p.id("{}"), p.id("{1}")});
  CHECK(k.proj_set(p.id("{}")) == std::vector<ElementId>{p.id("{}")});

  for (const auto& s : samples())
    for (auto x : s.poset().elements())
      for (Ordinal xi : s.range()) {
        const auto want = scan_projection(s, x, xi);
        if (want) CHECK(s.projection(x, xi) == *want);
        else CHECK_THROWS_AS(s.projection(x, xi), PreconditionError);
      }
}

TEST_CASE("projection is isotone in both arguments") {
  for (const auto& k : samples()) {
    const Lattice& l = k.lattice();
    const Ordinal lo = k.norm(l.bottom());
    for (auto x : k.poset().elements())
      for (auto y : k.poset().elements()) {
        if (!l.leq(x, y)) continue;
        for (Ordinal xi : k.range())
          for (Ordinal eta : k.range())
            if (xi >= lo && xi <= eta) CHECK(l.leq(k.projection(x, xi), k.projection(y, eta)));
      }
  }
}

TEST_CASE("projections and meets") {
  for (const auto& k : samples()) {
    const Lattice& l = k.lattice();
    for (auto x : k.poset().elements())
      for (auto y : k.poset().elements()) {
        if (l.leq(x, y)) CHECK(k.norm(k.projection(y, k.norm(x))) == k.norm(x));
        const ElementId p = k.projection(x, k.norm(y));
        CHECK(l.leq(p, y) == (l.meet(x, y) == p));
      }
  }
}

TEST_CASE("tri_below is a partial order with chains as principal ideals") {
  const NormedLattice k0 = fixtures::k0_standard();
  const Poset& p = k0.poset();
  CHECK(k0.tri_below(p.id("{0}"), p.id("{0}")));
  CHECK(k0.tri_below(p.id("{}"), p.id("{1}")));
  CHECK_FALSE(k0.tri_below(p.id("{0}"), p.id("{1}")));
  for (const auto& k : samples()) {
    const auto xs = k.poset().elements();
    for (auto x : xs) {
      CHECK(k.tri_below(x, x));
      for (auto y : xs) {
        if (x != y && k.tri_below(x, y)) CHECK_FALSE(k.tri_below(y, x));
        for (auto z : xs)
          if (k.tri_below(x, y) && k.tri_below(y, z)) CHECK(k.tri_below(x, z));
      }
      std::vector<ElementId> below;
      for (auto y : xs)
        if (k.tri_below(y, x)) below.push_back(y);
      for (auto a : below)
        for (auto b : below) CHECK((k.tri_below(a, b) || k.tri_below(b, a)));
    }
  }
}

TEST_CASE("levels and extended ideals") {
  const NormedLattice k = fixtures::k0_standard();
  CHECK(k.level(2) == k.poset().make_set({"{1}", "{0,1}"}));
  CHECK(k.extended_ideal(1) == k.poset().make_set({"{}", "{0}"}));
  for (const auto& s : samples())
    for (Ordinal xi : s.range()) CHECK(is_ideal(s.poset(), s.extended_ideal(xi)));
}

TEST_CASE("norm_from_enumeration") {
  const Lattice b2 = fixtures::boolean(2);
  const auto order = b2.poset().elements();
  const NormedLattice k = norm_from_enumeration(b2, order);
  CHECK(k.norms() == std::vector<Ordinal>{0, 2, 3, 3});
  const Lattice ch = fixtures::chain_lattice(3);
  const std::vector<ElementId> rev = {ElementId(2), ElementId(1), ElementId(0)};
  CHECK(norm_from_enumeration(ch, rev).norms() == std::vector<Ordinal>{0, 1, 1});
  CHECK_THROWS_AS(norm_from_enumeration(ch, std::vector<ElementId>{ElementId(0), ElementId(0), ElementId(1)}),
                  PreconditionError);

  std::mt19937_64 rng(22);
  for (int i = 0; i < 30; ++i) {
    const NormedLattice r = fixtures::random_normed(rng, 16, 5);
    CHECK(r.norm(r.lattice().bottom()) == 0);
    CHECK(r.theta() <= r.size() + 1);
  }
}

TEST_CASE("listing the bottom first skips a norm value") {
  // I_0 = I_1 = {0}, so nothing has norm 1
  const NormedLattice k = norm_from_enumeration(fixtures::chain_lattice(4), fixtures::chain_lattice(4).poset().elements());
  CHECK(k.norms() == std::vector<Ordinal>{0, 2, 3, 4});
  CHECK_FALSE(k.transitive());
}

TEST_CASE("generated ideals") {
  const Lattice b2 = fixtures::boolean(2);
  const Poset& p = b2.poset();
  CHECK(generated_ideal(b2, p.empty_set()) == p.make_set({"{}"}));
  CHECK(generated_ideal(b2, p.make_set({"{0}", "{1}"})) == p.full_set());
}

TEST_CASE("norm_from_ideal_chain") {
  const Lattice ch = fixtures::chain_lattice(3);
  const Poset& p = ch.poset();
  const std::vector<ElementSet> whole = {p.full_set()};
  CHECK(norm_from_ideal_chain(ch, whole).norms() == std::vector<Ordinal>{0, 0, 0});
  const std::vector<ElementSet> steps = {p.make_set({"0"}), p.make_set({"0", "1"}), p.full_set()};
  CHECK(norm_from_ideal_chain(ch, steps).norms() == std::vector<Ordinal>{0, 1, 2});
  const std::vector<ElementSet> bad = {p.make_set({"0", "1"}), p.make_set({"0"}), p.full_set()};
  CHECK_THROWS_AS(norm_from_ideal_chain(ch, bad), PreconditionError);
  for (const auto& k : samples()) CHECK(norm_from_ideal_chain(k.lattice(), extended_ideals(k)) == k);
}
