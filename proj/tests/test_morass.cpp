#include <algorithm>
#include <set>

#include "doctest.h"
#include "ladder/error.hpp"
#include "ladder/ladders.hpp"
#include "ladder/morass.hpp"

using namespace ladder;

namespace {

bool passed(const Report& r, const std::string& name) {
  for (const auto& c : r.checks())
    if (c.name == name) return c.passed;
  FAIL("no check named " << name);
  return false;
}

// Brute-force form of the tree property: compare every pair of maps in every
// family at every pair of arguments.
bool tree_oracle(const MorassTruncation& m) {
  for (const auto& [key, fam] : m.maps)
    for (const auto& f0 : fam)
      for (const auto& f1 : fam)
        for (Ordinal a = 0; a < f0.size(); ++a)
          for (Ordinal b = 0; b < f1.size(); ++b) {
            if (f0[a] != f1[b]) continue;
            if (a != b) return false;
            for (Ordinal c = 0; c < a; ++c)
              if (f0[c] != f1[c]) return false;
          }
  return true;
}

std::set<OrdinalMap> as_set(const std::vector<OrdinalMap>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("ordinal maps") {
  CHECK(identity_map(3) == OrdinalMap{0, 1, 2});
  CHECK(displacement(1, 2) == OrdinalMap{0, 2});
  CHECK(displacement(2, 4) == OrdinalMap{0, 1, 4, 5});
  CHECK(compose(displacement(2, 3), displacement(1, 2)) == OrdinalMap{0, 3});
}

TEST_CASE("truncated morass values") {
  const MorassTruncation empty = build_truncated_morass({});
  CHECK(empty.theta == std::vector<Ordinal>{2});
  CHECK(verify_axioms(empty).ok());

  const MorassTruncation one = build_truncated_morass({1});
  CHECK(one.theta == std::vector<Ordinal>{2, 3});
  CHECK(as_set(one.family(0, 1)) == std::set<OrdinalMap>{{0, 1}, {0, 2}});
  CHECK(one.family(0, 1).size() == 2);

  const MorassTruncation two = build_truncated_morass({1, 2});
  CHECK(two.theta == std::vector<Ordinal>{2, 3, 4});
  CHECK(as_set(two.family(0, 2)) == std::set<OrdinalMap>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(two.family(0, 2).size() == 3);
  const Report ax = verify_axioms(two);
  CHECK_MESSAGE(ax.ok(), ax.first_failure());
  CHECK(check_mor2tree(two).ok());
  CHECK(tree_oracle(two));

  CHECK_THROWS_AS(build_truncated_morass({2}), PreconditionError);
  CHECK_THROWS_AS(build_truncated_morass({0}), PreconditionError);
  CHECK(build_truncated_morass({2}, 3).theta == std::vector<Ordinal>{3, 4});
}

TEST_CASE("verifiers agree with brute force on several truncations") {
  for (const auto& deltas : std::vector<std::vector<Ordinal>>{{1}, {1, 1}, {1, 2}, {1, 2, 2}, {1, 2, 3}, {1, 1, 3}}) {
    const MorassTruncation m = build_truncated_morass(deltas);
    CHECK(verify_axioms(m).ok());
    CHECK(check_mor2tree(m).ok() == tree_oracle(m));
    CHECK(tree_oracle(m));
  }
}

TEST_CASE("corrupted truncations are rejected") {
  MorassTruncation m = build_truncated_morass({1, 2});
  MorassTruncation dropped = m;
  dropped.maps[{0, 2}].pop_back();
  CHECK_FALSE(passed(verify_axioms(dropped), "(P2) families are closed compositions"));

  MorassTruncation clash = m;
  // two maps agreeing at 1 but not below it
  clash.maps[{0, 1}] = {{0, 2}, {1, 2}};
  CHECK_FALSE(tree_oracle(clash));
  CHECK_FALSE(check_mor2tree(clash).ok());
  CHECK_FALSE(verify_axioms(clash).ok());

  const MorassTruncation base3 = build_truncated_morass({1}, 3);
  CHECK_FALSE(passed(verify_axioms(base3), "(P0)(a) theta_0 = 2"));
}

TEST_CASE("bases") {
  CHECK(parse_base("renormed") == MorassBase::renormed);
  CHECK(parse_base("paper") == MorassBase::range3);
  CHECK_THROWS_AS(parse_base("other"), InputError);
  CHECK(base_theta0(MorassBase::renormed) == 2);
  CHECK(base_theta0(MorassBase::range3) == 3);
  CHECK(base_lattice(MorassBase::renormed).norms() == std::vector<Ordinal>{0, 1, 1, 1});
  CHECK(base_lattice(MorassBase::range3).norms() == std::vector<Ordinal>{0, 1, 2, 2});
}

TEST_CASE("ladder systems from the renormed base") {
  const MorassTruncation m = build_truncated_morass({1, 2});
  const LadderSystem s = morass_to_ladder(m, MorassBase::renormed);
  CHECK_MESSAGE(s.checks.ok(), s.checks.first_failure());
  CHECK(verify_ladder_system(s).ok());
  REQUIRE(s.levels.size() == 3);
  for (std::size_t a = 0; a < 3; ++a) {
    const NormedLattice& k = s.levels[a];
    CHECK(is_k_ladder(k.lattice(), 3));
    CHECK(is_atomistic(k.lattice()));
    CHECK(k.theta() == m.theta[a]);
  }
  // the star of the identity is the identity
  const ElementMap& id = s.star(0, 1, identity_map(2));
  for (std::size_t x = 0; x < id.size(); ++x) CHECK(id[x] == ElementId(x));
  // norms are transported along every map
  for (const auto& [key, fam] : m.maps)
    for (const auto& f : fam) {
      const ElementMap& st = s.star(key.first, key.second, f);
      const NormedLattice& src = s.levels[key.first];
      const NormedLattice& dst = s.levels[key.second];
      CHECK(is_lower_embedding(src.poset(), dst.poset(), st));
      for (auto x : src.poset().elements()) CHECK(dst.norm(st[x.value()]) == f[src.norm(x)]);
    }
}

TEST_CASE("the range-3 base fails only theta_0 = 2") {
  const MorassTruncation m = build_truncated_morass({1, 2}, base_theta0(MorassBase::range3));
  const auto failures = verify_axioms(m).failures();
  REQUIRE(failures.size() == 1);
  CHECK(failures.front().name == "(P0)(a) theta_0 = 2");
  const LadderSystem s = morass_to_ladder(m, MorassBase::range3);
  CHECK(verify_ladder_system(s).ok());
}

TEST_CASE("direct limits") {
  const LadderSystem s = morass_to_ladder(build_truncated_morass({1, 2}), MorassBase::renormed);
  const Diagram d = limit_diagram(s);
  const DirectLimit lim = direct_limit(d);
  CHECK(lim.checks.ok());
  CHECK(lim.colimit == s.levels.back());
  CHECK(lim.cocone.size() == d.objects.size());

  Diagram single;
  single.objects.push_back(s.levels[0]);
  const DirectLimit one = direct_limit(single);
  CHECK(one.top == 0);
  CHECK(one.colimit == s.levels[0]);

  Diagram broken = d;
  bool changed = false;
  for (auto& ar : broken.arrows) {
    if (ar.to != lim.top || changed) continue;
    // swap two images with equal norm so only commutation fails
    const auto& dst = broken.objects[ar.to];
    for (std::size_t x = 0; x + 1 < ar.map.size() && !changed; ++x)
      for (std::size_t y = x + 1; y < ar.map.size() && !changed; ++y) {
        ElementMap alt = ar.map;
        std::swap(alt[x], alt[y]);
        const auto& src = broken.objects[ar.from];
        if (src.norm(ElementId(x)) != src.norm(ElementId(y))) continue;
        if (!is_lower_embedding(src.poset(), dst.poset(), alt)) continue;
        ar.map = alt;
        changed = true;
      }
  }
  REQUIRE(changed);
  CHECK_THROWS_AS(direct_limit(broken), VerificationError);

  Diagram loop = single;
  loop.objects.push_back(s.levels[0]);
  CHECK_THROWS_AS(direct_limit(loop), PreconditionError);
  CHECK_THROWS_AS(direct_limit(Diagram{}), PreconditionError);
}
