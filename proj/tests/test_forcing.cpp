#include <random>

#include "doctest.h"
#include "ladder/error.hpp"
#include "ladder/fixtures.hpp"
#include "ladder/forcing.hpp"
#include "ladder/ladders.hpp"

using namespace ladder;

TEST_CASE("membership in Sk_a") {
  const NormedLattice k0 = fixtures::k0_standard();
  const Poset& p = k0.poset();
  for (auto a : p.elements()) {
    CHECK(in_sk_a(k0, p.make_set(std::vector<ElementId>{a}), a));
    CHECK_FALSE(in_sk_a(k0, p.empty_set(), a));
  }
  CHECK(in_sk_a(k0, p.make_set({"{}", "{0}", "{0,1}"}), p.id("{1}")));
  CHECK_FALSE(in_sk_a(k0, p.make_set({"{}", "{0}"}), p.id("{1}")));
}

TEST_CASE("extend_into_sk_a") {
  const NormedLattice k0 = fixtures::k0_standard();
  const Poset& p = k0.poset();
  for (auto a : p.elements()) CHECK(extend_into_sk_a(k0, p.empty_set(), a) == k0.proj_members(a));
  CHECK(extend_into_sk_a(k0, p.make_set({"{}"}), p.id("{1}")) == p.make_set({"{}", "{1}"}));

  std::mt19937_64 rng(51);
  for (int i = 0; i < 30; ++i) {
    const NormedLattice k = fixtures::random_normed(rng, 16, 5);
    ElementSet e = k.poset().empty_set();
    for (auto a : k.poset().elements()) {
      const ElementSet f = extend_into_sk_a(k, e, a);
      CHECK(is_preskeleton(k, f));
      CHECK(in_sk_a(k, f, a));
      CHECK(e.is_subset_of(f));
      // extending a member again keeps it a member
      CHECK(in_sk_a(k, extend_into_sk_a(k, f, a), a));
      e = f;
    }
  }
}

TEST_CASE("centred families") {
  const NormedLattice k0 = fixtures::k0_standard();
  const Poset& p = k0.poset();
  const std::vector<ElementSet> one = {p.make_set({"{}", "{1}"})};
  CHECK(is_centred(k0, one));
  const std::vector<ElementSet> two = {p.make_set({"{}", "{1}"}), p.make_set({"{}", "{0}", "{0,1}"})};
  CHECK(is_centred(k0, two));
  const NormedLattice ch = fixtures::normed_chain(4);
  const std::vector<ElementSet> projs = {ch.proj_members(ElementId(1)), ch.proj_members(ElementId(3))};
  CHECK(is_centred(ch, projs));
  // {0} and {1} both have renormed norm 1 and are incomparable
  const NormedLattice kr = fixtures::k0_renormed();
  const std::vector<ElementSet> clash = {kr.proj_members(p.id("{0}")), kr.proj_members(p.id("{1}"))};
  CHECK_FALSE(is_centred(kr, clash));
}

TEST_CASE("generic filters") {
  const NormedLattice k0 = fixtures::k0_standard();
  const Poset& p = k0.poset();
  const ElementSet start = p.make_set({"{}"});
  const GenericFilter none = generic_filter(k0, DenseFamily{}, start);
  CHECK(none.chain.size() == 1);
  CHECK(none.last() == start);

  const GenericFilter g = generic_filter(k0, full_dense_family(k0), p.empty_set());
  CHECK(g.met_targets.size() == p.size());
  const ElementSet s = skeleton_from_generic(k0, g);
  CHECK(is_skeleton(k0, s));
  // the level-2 part dominates both {1} and {0,1}
  CHECK(s.test(p.id("{0,1}").value()));
  for (std::size_t i = 1; i < g.chain.size(); ++i) CHECK(g.chain[i - 1].is_subset_of(g.chain[i]));

  const NormedLattice ch = fixtures::normed_chain(5);
  const GenericFilter gc = generic_filter(ch, full_dense_family(ch), ch.poset().empty_set());
  CHECK(skeleton_from_generic(ch, gc) == ch.poset().full_set());

  CHECK_THROWS_AS(generic_filter(fixtures::k0_renormed(), DenseFamily{}, p.make_set({"{0}", "{1}"})),
                  PreconditionError);
  CHECK_THROWS_AS(skeleton_from_generic(k0, none), PreconditionError);
}

TEST_CASE("custom dense sets") {
  const NormedLattice k0 = fixtures::k0_standard();
  const Poset& p = k0.poset();
  DenseFamily d = full_dense_family(k0);
  d.custom.push_back({"has at least 4 members", [](const NormedLattice&, const ElementSet& f) { return f.count() >= 4; }, 2});
  const GenericFilter g = generic_filter(k0, d, p.empty_set());
  CHECK(g.met_custom == std::vector<std::string>{"has at least 4 members"});
  CHECK(g.last().count() >= 4);

  DenseFamily impossible;
  impossible.custom.push_back({"never", [](const NormedLattice&, const ElementSet&) { return false; }, 1});
  CHECK_THROWS_AS(generic_filter(k0, impossible, p.empty_set()), PreconditionError);
}

TEST_CASE("skeletons from generic filters on random lattices") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 40; ++i) {
    const NormedLattice k = fixtures::random_normed(rng, 20, 5);
    const GenericFilter g = generic_filter(k, full_dense_family(k), k.poset().empty_set());
    const ElementSet s = skeleton_from_generic(k, g);
    const Report r = verify_generic_skeleton(k, s);
    CHECK_MESSAGE(r.ok(), r.first_failure());
    CHECK(is_skeleton(k, s));
    CHECK(is_meet_subsemilattice(k.lattice(), s));
    CHECK(max_lower_covers_within(k.poset(), s) <= 2);
  }
}
