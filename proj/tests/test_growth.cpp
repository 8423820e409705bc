#include "doctest.h"
#include "ladder/error.hpp"
#include "ladder/fixtures.hpp"
#include "ladder/growth.hpp"
#include "ladder/ladders.hpp"
#include "oracles.hpp"

using namespace ladder;

namespace {

// Stage i keeps its ids inside stage i + 1 and is an ideal there.
void check_tower(const GrowthTrace& t, std::size_t k) {
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    const Lattice& cur = t.stages[i];
    CHECK(is_k_ladder(cur, k));
    CHECK(breadth(cur.poset()) <= k);
    if (i == 0) continue;
    const Lattice& prev = t.stages[i - 1];
    CHECK(prev.size() < cur.size());
    ElementSet old = cur.poset().empty_set();
    for (std::size_t a = 0; a < prev.size(); ++a) {
      old.set(a);
      for (std::size_t b = 0; b < prev.size(); ++b)
        CHECK(prev.leq(ElementId(a), ElementId(b)) == cur.leq(ElementId(a), ElementId(b)));
    }
    CHECK(is_ideal(cur.poset(), old));
  }
}

}  // namespace

TEST_CASE("2-ladder towers") {
  const GrowthTrace zero = grow_2ladder(0);
  CHECK(zero.stages.size() == 1);
  CHECK(zero.last().size() == 1);
  const GrowthTrace one = grow_2ladder(1);
  CHECK(one.last().size() == 3);
  CHECK(is_k_ladder(one.last(), 2));

  const GrowthTrace b = grow_2ladder(3, fixtures::boolean(2));
  CHECK(b.checks.ok());
  CHECK(b.last().size() == 10);
  for (std::size_t i = 0; i < b.stages.size(); ++i) CHECK(b.atomistic[i]);
  for (std::size_t i = 0; i < b.stages.size(); ++i) CHECK(is_atomistic(b.stages[i]) == static_cast<bool>(b.atomistic[i]));
  check_tower(b, 2);

  // from {0} the first added top is join-irreducible above its one atom
  const GrowthTrace from_point = grow_2ladder(3);
  CHECK_FALSE(is_atomistic(from_point.stages[1]));
  check_tower(from_point, 2);

  CHECK_THROWS_AS(grow_2ladder(1, fixtures::m3()), PreconditionError);
}

TEST_CASE("the atom-and-top step") {
  const Lattice b2 = fixtures::boolean(2);
  const Lattice next = two_ladder_step(b2, 1);
  CHECK(next.size() == 6);
  const ElementId p = next.id("p1"), top = next.id("1_1");
  CHECK(next.top() == top);
  CHECK(next.meet(p, b2.top()) == next.bottom());
  CHECK(oracle::lower_covers(next.poset(), top).size() == 2);
}

TEST_CASE("extend_with_skeleton") {
  const Lattice b2 = fixtures::boolean(2);
  const ElementSet f = b2.poset().make_set({"{}", "{0}", "{0,1}"});
  const SkeletonExtension e = extend_with_skeleton(b2, f);
  CHECK(e.checks.ok());
  CHECK(e.lattice.size() == 7);
  CHECK(is_k_ladder(e.lattice, 3));
  std::vector<ElementId> want = {b2.id("{0}"), b2.id("{1}"), e.copy.front()};
  std::sort(want.begin(), want.end());
  CHECK(atoms(e.lattice.poset()) == want);

  const Lattice point = fixtures::chain_lattice(1);
  const SkeletonExtension d = extend_with_skeleton(point, point.poset().full_set());
  CHECK(d.lattice.size() == 2);
  CHECK(is_chain(d.lattice.poset(), d.lattice.poset().full_set()));

  const Lattice ch = fixtures::chain_lattice(3);
  const SkeletonExtension c = extend_with_skeleton(ch, ch.poset().full_set());
  CHECK(c.lattice.size() == 6);
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<ElementId> covers = {ElementId(i)};
    if (i > 0) covers.push_back(c.copy[i - 1]);
    std::sort(covers.begin(), covers.end());
    CHECK(oracle::lower_covers(c.lattice.poset(), c.copy[i]) == covers);
  }

  // x < f(y) iff x <= y, checked against the definition
  for (auto x : b2.poset().elements())
    for (std::size_t j = 0; j < e.members.size(); ++j)
      CHECK(e.lattice.leq(x, e.copy[j]) == b2.leq(x, e.members[j]));

  CHECK_THROWS_AS(extend_with_skeleton(b2, b2.poset().make_set({"{0}", "{1}"})), PreconditionError);
  CHECK_THROWS_AS(extend_with_skeleton(b2, b2.poset().make_set({"{}", "{0}"})), PreconditionError);
}

TEST_CASE("3-ladder towers") {
  CHECK(grow_3ladder(0).last().size() == 1);
  CHECK(grow_3ladder(1).last().size() == 2);
  const GrowthTrace t = grow_3ladder(4);
  CHECK(t.checks.ok());
  check_tower(t, 3);
  bool seen = false;
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    seen = seen || t.atomistic[i];
    if (seen) CHECK(is_atomistic(t.stages[i]));
  }
  const GrowthTrace seeded = grow_3ladder(2, fixtures::m3());
  CHECK(seeded.checks.ok());
  check_tower(seeded, 3);
}
