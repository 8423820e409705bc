#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ladder/amalgam.hpp"
#include "ladder/error.hpp"
#include "ladder/fixtures.hpp"
#include "ladder/ladders.hpp"
#include "oracles.hpp"

using namespace ladder;

namespace {

AmalgamResult k0_delta2() {
  const NormedLattice k0 = fixtures::k0_standard();
  return amalgamate({k0, 2, {k0.poset().id("{1}"), k0.poset().id("{0,1}")}});
}

// Independent restatement of the lemma's conclusions on Kbar.
void check_conclusions(const AmalgamResult& r) {
  const NormedLattice& k = r.setup.k;
  const Lattice& kb = r.kbar.lattice();
  const Poset& q = kb.poset();
  const Ordinal delta = r.setup.delta, theta = r.setup.theta;
  CHECK(r.kbar.transitive());
  CHECK(r.kbar.theta() == theta + (theta - delta));
  CHECK(is_k_ladder(kb, 3));
  CHECK(is_ideal(q, r.k_block));
  CHECK(is_lower_embedding(k.poset(), q, r.f));
  for (auto x : k.poset().elements()) {
    const ElementId fx = r.f[x.value()];
    // f transports norms by tau
    CHECK(r.kbar.norm(fx) == tau(delta, theta, k.norm(x)));
    // f is the identity on I
    if (k.norm(x) < delta) CHECK(fx == x);
    else CHECK_FALSE(r.k_block.test(fx.value()));
    for (auto y : k.poset().elements()) {
      // joins across K and f[K] are least upper bounds
      const ElementId j = kb.join(x, r.f[y.value()]);
      CHECK(std::optional<ElementId>(j) == oracle::lub(q, x, r.f[y.value()]));
    }
  }
  for (auto e : q.elements())
    for (auto g : q.elements()) CHECK(r.kbar.norm(kb.join(e, g)) == std::max(r.kbar.norm(e), r.kbar.norm(g)));
}

}  // namespace

TEST_CASE("tau") {
  CHECK(tau(1, 2, 0) == 0);
  CHECK(tau(1, 2, 1) == 2);
  CHECK(tau(2, 5, 3) == 6);
  CHECK(tau(2, 5, 1) == 1);
}

TEST_CASE("preconditions") {
  const NormedLattice k0 = fixtures::k0_standard();
  const Poset& p = k0.poset();
  CHECK_THROWS_AS(prepare_amalgam({k0, 0, {p.id("{0,1}")}}), PreconditionError);
  CHECK_THROWS_AS(prepare_amalgam({k0, 3, {p.id("{0,1}")}}), PreconditionError);
  // least chain element must have norm delta
  CHECK_THROWS_AS(prepare_amalgam({k0, 1, {p.id("{0,1}")}}), PreconditionError);
  // not cofinal
  CHECK_THROWS_AS(prepare_amalgam({k0, 2, {p.id("{1}")}}), PreconditionError);
  // not a chain
  CHECK_THROWS_AS(prepare_amalgam({k0, 1, {p.id("{0}"), p.id("{1}"), p.id("{0,1}")}}), PreconditionError);
  // not transitive
  const NormedLattice gap = check_norm(fixtures::chain_lattice(2), {0, 2});
  CHECK_THROWS_AS(prepare_amalgam({gap, 1, {ElementId(1)}}), PreconditionError);
  // not a 3-ladder
  const std::vector<std::pair<std::string, std::string>> le = {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"},
                                                               {"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "1"}};
  const NormedLattice m4(Lattice(Poset::from_named_relation({"0", "a", "b", "c", "d", "1"}, le)), {0, 1, 1, 1, 1, 1});
  CHECK_THROWS_AS(prepare_amalgam({m4, 1, {ElementId(5)}}), PreconditionError);
}

TEST_CASE("f_least") {
  const NormedLattice k0 = fixtures::k0_standard();
  const Poset& p = k0.poset();
  const AmalgamSetup s = prepare_amalgam({k0, 2, {p.id("{0,1}"), p.id("{1}")}});
  CHECK(s.o == p.id("{1}"));
  CHECK(f_least(s, s.o, s.o) == FPair{s.o, s.o});
  CHECK(f_least(s, p.id("{0}"), p.id("{0}")) == FPair{p.id("{0,1}"), p.id("{0,1}")});
  for (auto x : p.elements())
    for (auto y : p.elements())
      if (k0.lattice().leq(x, s.o) && k0.lattice().leq(y, s.o)) CHECK(f_least(s, x, y) == FPair{s.o, s.o});
}

TEST_CASE("the 2-chain") {
  const AmalgamResult r = amalgamate({fixtures::two_chain(), 1, {ElementId(1)}});
  CHECK(r.kbar.size() == 4);
  CHECK(r.kbar.theta() == 3);
  const ElementId top = r.kbar.lattice().top();
  CHECK(top == r.pair(ElementId(1), ElementId(1)));
  std::vector<ElementId> want = {ElementId(1), r.f[1]};
  std::sort(want.begin(), want.end());
  CHECK(r.kbar.poset().lower_covers(top) == want);
  check_conclusions(r);
}

TEST_CASE("K0 with delta 2") {
  const AmalgamResult r = k0_delta2();
  CHECK(r.kbar.size() == 8);
  CHECK(r.kbar.theta() == 4);
  CHECK(r.setup.pairs.size() == 2);
  check_conclusions(r);
  const Report covers = verify_lower_covers(r);
  CHECK_MESSAGE(covers.ok(), covers.first_failure());
  // (c,u) = ({0,1},{0,1}) has norm delta: covers c, (c_*, (c_*)_(delta)) and f(u)
  const Poset& k = r.setup.k.poset();
  const ElementId c = k.id("{0,1}"), cs = k.id("{1}");
  std::vector<ElementId> want = {c, r.pair(cs, cs), r.f[c.value()]};
  std::sort(want.begin(), want.end());
  CHECK(oracle::lower_covers(r.kbar.poset(), r.pair(c, c)) == want);
  // (o,o) covers o and f(o)
  std::vector<ElementId> base = {cs, r.f[cs.value()]};
  std::sort(base.begin(), base.end());
  CHECK(oracle::lower_covers(r.kbar.poset(), r.pair(cs, cs)) == base);
}

TEST_CASE("K0 with delta 1") {
  const NormedLattice k0 = fixtures::k0_standard();
  const AmalgamResult r = amalgamate({k0, 1, {k0.poset().id("{0}"), k0.poset().id("{0,1}")}});
  CHECK(r.kbar.size() == 10);
  CHECK(r.kbar.theta() == 5);
  CHECK(r.setup.pairs.size() == 3);
  check_conclusions(r);
}

TEST_CASE("reports of the built-in checker pass") {
  const Report r = verify_amalgam(k0_delta2());
  CHECK_MESSAGE(r.ok(), r.first_failure());
  CHECK(r.checks().size() >= 20);
}

TEST_CASE("amalgams of chains") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (Ordinal d = 1; d < n; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      std::vector<ElementId> c;
      for (std::size_t i = d; i < n; ++i) c.emplace_back(i);
      const AmalgamResult r = amalgamate({fixtures::normed_chain(n), d, c});
      check_conclusions(r);
      CHECK(verify_lower_covers(r).ok());
    }
}

TEST_CASE("copy names avoid clashes") {
  const std::vector<std::pair<std::string, std::string>> le = {{"0", "a"}, {"a", "f(a)"}};
  const NormedLattice k(Lattice(Poset::from_named_relation({"0", "a", "f(a)"}, le)), {0, 1, 2});
  const AmalgamResult r = amalgamate({k, 1, {ElementId(1), ElementId(2)}});
  std::set<std::string> names(r.kbar.poset().names().begin(), r.kbar.poset().names().end());
  CHECK(names.size() == r.kbar.size());
  check_conclusions(r);
}
