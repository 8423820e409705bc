#include "ladder/amalgam.hpp"

#include <algorithm>
#include <set>

#include "ladder/ladders.hpp"

namespace ladder {

Ordinal tau(Ordinal delta, Ordinal theta, Ordinal xi) {
  if (delta > theta) throw PreconditionError("tau: delta exceeds theta");
  return xi < delta ? xi : theta + (xi - delta);
}

ElementId AmalgamSetup::up_to_chain(ElementId x) const {
  const auto c = least_above(k.poset(), chain_set, x);
  if (!c) throw PreconditionError("no element of the chain lies above " + k.poset().name(x));
  return *c;
}

AmalgamSetup prepare_amalgam(const AmalgamInput& input) {
  const NormedLattice& k = input.k;
  const Poset& p = k.poset();
  if (!k.transitive()) throw PreconditionError("amalgamate: the norm is not transitive");
  if (!is_k_ladder(k.lattice(), 3)) throw PreconditionError("amalgamate: K is not a 3-ladder");
  const Ordinal theta = k.theta();
  if (input.delta == 0 || input.delta >= theta)
    throw PreconditionError("amalgamate: delta must satisfy 0 < delta < " + std::to_string(theta));
  if (input.chain.empty()) throw PreconditionError("amalgamate: empty chain");

  AmalgamSetup s;
  s.k = k;
  s.delta = input.delta;
  s.theta = theta;
  s.chain_set = p.make_set(input.chain);
  if (s.chain_set.count() != input.chain.size()) throw PreconditionError("amalgamate: repeated chain element");
  if (!is_chain(p, s.chain_set)) throw PreconditionError("amalgamate: C is not a chain");
  if (!s.chain_set.test(k.lattice().top().value()))
    throw PreconditionError("amalgamate: C is not cofinal (it misses the top)");
  s.chain = input.chain;
  std::sort(s.chain.begin(), s.chain.end(), [&](ElementId a, ElementId b) { return p.lt(a, b); });
  s.o = s.chain.front();
  if (k.norm(s.o) != s.delta)
    throw PreconditionError("amalgamate: least chain element " + p.name(s.o) + " has norm " +
                            std::to_string(k.norm(s.o)) + ", not delta = " + std::to_string(s.delta));
  s.ideal_i = k.extended_ideal(s.delta - 1);
  for (auto c : s.chain)
    for (auto u : k.proj_set(c))
      if (k.norm(u) >= s.delta) s.pairs.push_back({c, u});
  return s;
}

FPair f_least(const AmalgamSetup& s, ElementId x, ElementId y) {
  const ElementId c = s.k.lattice().join(s.up_to_chain(x), s.up_to_chain(y));
  return {c, s.k.projection(c, std::max(s.delta, s.k.norm(y)))};
}

ElementId AmalgamResult::pair(ElementId c, ElementId u) const {
  const auto it = pair_id.find({c, u});
  if (it == pair_id.end())
    throw PreconditionError("(" + setup.k.poset().name(c) + "," + setup.k.poset().name(u) + ") is not in F");
  return it->second;
}

namespace {

enum class Block { k, copy, pair };

struct Node {
  Block block;
  ElementId x;  // the K element (or c)
  ElementId u;  // for pairs
};

std::string unique_name(std::set<std::string>& used, std::string name) {
  while (used.count(name)) name += "'";
  used.insert(name);
  return name;
}

}  // namespace

AmalgamResult amalgamate(const AmalgamInput& input, const AmalgamOptions& options) {
  AmalgamResult r;
  r.setup = prepare_amalgam(input);
  const AmalgamSetup& s = r.setup;
  const NormedLattice& k = s.k;
  const Poset& p = k.poset();
  const std::size_t n = p.size();

  std::vector<Node> nodes;
  std::vector<std::string> names;
  std::set<std::string> used(p.names().begin(), p.names().end());
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back({Block::k, ElementId(i), {}});
    names.push_back(p.name(ElementId(i)));
  }
  r.f.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.ideal_i.test(i)) {
      r.f[i] = ElementId(i);
      continue;
    }
    r.f[i] = ElementId(nodes.size());
    nodes.push_back({Block::copy, ElementId(i), {}});
    names.push_back(unique_name(used, options.copy_prefix + "(" + p.name(ElementId(i)) + ")"));
  }
  for (const auto& fp : s.pairs) {
    r.pair_id[fp] = ElementId(nodes.size());
    nodes.push_back({Block::pair, fp.c, fp.u});
    names.push_back(unique_name(used, "(" + p.name(fp.c) + "," + p.name(fp.u) + ")"));
  }

  auto literal_leq = [&](const Node& a, const Node& b) {
    switch (a.block) {
      case Block::k:
        if (b.block == Block::k) return p.leq(a.x, b.x);
        if (b.block == Block::copy) return s.ideal_i.test(a.x.value()) && p.leq(a.x, b.x);
        return p.leq(a.x, b.x);  // x < (c,u) iff x <= c
      case Block::copy:
        if (b.block == Block::k) return false;
        if (b.block == Block::copy) return p.leq(a.x, b.x);
        return p.leq(a.x, b.u);  // f(x) < (c,u) iff x <= u
      case Block::pair:
        return b.block == Block::pair && p.leq(a.x, b.x) && p.leq(a.u, b.u);
    }
    return false;
  };

  const std::size_t total = nodes.size();
  std::vector<OrderPair> gens;
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      if (i != j && literal_leq(nodes[i], nodes[j])) gens.emplace_back(ElementId(i), ElementId(j));
  Poset order;
  try {
    order = Poset::from_relation(std::move(names), gens);
  } catch (const Error& e) {
    throw VerificationError(std::string("amalgam order is not antisymmetric: ") + e.what());
  }
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      if (order.leq(ElementId(i), ElementId(j)) != (i == j || literal_leq(nodes[i], nodes[j])))
        throw VerificationError("amalgam order is not transitive at (" + order.name(ElementId(i)) + ", " +
                                order.name(ElementId(j)) + ")");

  std::vector<Ordinal> norm(total);
  for (std::size_t i = 0; i < total; ++i) {
    const Node& nd = nodes[i];
    norm[i] = nd.block == Block::k      ? k.norm(nd.x)
              : nd.block == Block::copy ? tau(s.delta, s.theta, k.norm(nd.x))
                                        : tau(s.delta, s.theta, k.norm(nd.u));
  }
  try {
    r.kbar = NormedLattice(Lattice(std::move(order)), std::move(norm));
  } catch (const PreconditionError& e) {
    throw VerificationError(std::string("amalgam: ") + e.what());
  }

  const Poset& q = r.kbar.poset();
  r.k_block = q.empty_set();
  r.copy_block = q.empty_set();
  r.f_block = q.empty_set();
  for (std::size_t i = 0; i < total; ++i) {
    if (nodes[i].block == Block::k) r.k_block.set(i);
    if (nodes[i].block == Block::copy) r.copy_block.set(i);
    if (nodes[i].block == Block::pair) r.f_block.set(i);
  }

  Report report = verify_amalgam(r);
  report.merge(verify_lower_covers(r));
  if (!report.ok()) throw VerificationError("amalgam: " + report.first_failure());
  return r;
}

Report verify_amalgam(const AmalgamResult& r) {
  const AmalgamSetup& s = r.setup;
  const NormedLattice& k = s.k;
  const Lattice& kl = k.lattice();
  const Poset& p = k.poset();
  const Lattice& bl = r.kbar.lattice();
  const Poset& q = r.kbar.poset();
  const std::size_t n = p.size();
  const Ordinal theta2 = s.theta + (s.theta - s.delta);
  Report rep("amalgamation conclusions");

  auto lookup = [&](const FPair& fp) -> std::optional<ElementId> {
    const auto it = r.pair_id.find(fp);
    if (it == r.pair_id.end()) return std::nullopt;
    return it->second;
  };

  // (i) strong amalgam; ids of K u f[K] form a prefix of Kbar
  {
    const ElementSet union_block = r.k_block | r.copy_block;
    const Poset sub = induced(q, union_block);
    ElementSet a(sub.size()), b(sub.size()), i(sub.size());
    for (std::size_t x = 0; x < n; ++x) {
      a.set(x);
      b.set(r.f[x].value());
      if (s.ideal_i.test(x)) i.set(x);
    }
    rep.add("(i) K u f[K] is the strong amalgam of K and f[K] over I", is_strong_amalgam(sub, a, b, i));
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& fp : s.pairs)
      if (bl.join(fp.c, r.f[fp.u.value()]) != r.pair_id.at(fp)) {
        ok = false;
        detail = q.name(r.pair_id.at(fp)) + " != c v f(u)";
        break;
      }
    rep.add("(ii) every element is the join of two elements of K u f[K]", ok, detail);
  }

  {
    bool ok = true;
    s.ideal_i.for_each([&](std::size_t x) { ok = ok && r.f[x] == ElementId(x); });
    rep.add("(iii) f is the identity on I", ok);
  }

  {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x)
      ok = ok && r.kbar.norm(r.f[x]) == tau(s.delta, s.theta, k.norm(ElementId(x)));
    rep.add("(iv) norm f(x) = tau(norm x)", ok);
  }

  rep.add("K is an ideal of Kbar", is_ideal(q, r.k_block));
  ElementSet fk = q.empty_set();
  for (auto y : r.f) fk.set(y.value());
  rep.add("f[K] is a lower subset of Kbar", is_lower_subset(q, fk));
  rep.add("f is a lower embedding", is_lower_embedding(p, q, r.f));
  {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) ok = ok && q.leq(ElementId(x), ElementId(y)) == p.leq(ElementId(x), ElementId(y));
    bool norms = true;
    for (std::size_t x = 0; x < n; ++x) norms = norms && r.kbar.norm(ElementId(x)) == k.norm(ElementId(x));
    rep.add("Kbar restricted to K is K", ok && norms);
  }

  // F inside K x K
  {
    const Poset prod = product(p, p);
    const Lattice prod_l(prod);
    ElementSet fset = prod.empty_set();
    for (const auto& fp : s.pairs) fset.set(product_id(p, p, fp.c, fp.u).value());
    rep.add("F is a meet-subsemilattice of K x K", is_meet_subsemilattice(prod_l, fset));
    rep.add("F is cofinal in K x K", is_cofinal(prod, fset));
    rep.add("F is a 2-ladder", is_k_ladder_subset(prod, fset, 2));
    rep.add("(o,o) is the least element of F",
            prod.least_of(fset) == std::optional<ElementId>(product_id(p, p, s.o, s.o)));
    std::size_t bad = 0;
    std::string detail;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const auto brute = least_above(prod, fset, product_id(p, p, ElementId(x), ElementId(y)));
        const FPair closed = f_least(s, ElementId(x), ElementId(y));
        if (!brute || *brute != product_id(p, p, closed.c, closed.u)) {
          if (!bad++) detail = "at (" + p.name(ElementId(x)) + "," + p.name(ElementId(y)) + ")";
        }
      }
    rep.add("least element of F above (x,y) has the closed form", bad == 0, detail);
  }

  // join formulas
  {
    std::size_t checked = 0, bad = 0;
    std::string detail;
    auto expect = [&](ElementId a, ElementId b, ElementId c, Ordinal xi, const char* rule) {
      ++checked;
      const auto want = lookup({c, k.projection(c, xi)});
      if (!want || bl.join(a, b) != *want) {
        if (!bad++) detail = std::string(rule) + " fails at " + q.name(a) + " v " + q.name(b);
      }
    };
    for (std::size_t x0 = 0; x0 < n; ++x0)
      for (std::size_t x1 = 0; x1 < n; ++x1) {
        if (s.ideal_i.test(x0) || s.ideal_i.test(x1)) continue;
        const ElementId c = kl.join(s.up_to_chain(ElementId(x0)), s.up_to_chain(ElementId(x1)));
        expect(ElementId(x0), r.f[x1], c, k.norm(ElementId(x1)), "x0 v f(x1)");
      }
    for (const auto& fp : s.pairs) {
      const ElementId id = r.pair_id.at(fp);
      for (std::size_t x = 0; x < n; ++x) {
        const ElementId c = kl.join(s.up_to_chain(ElementId(x)), fp.c);
        expect(ElementId(x), id, c, k.norm(fp.u), "x v (c,u)");
        expect(r.f[x], id, c, std::max(k.norm(ElementId(x)), k.norm(fp.u)), "f(x) v (c,u)");
      }
      for (const auto& gp : s.pairs)
        expect(id, r.pair_id.at(gp), kl.join(fp.c, gp.c), std::max(k.norm(fp.u), k.norm(gp.u)),
               "(c0,u0) v (c1,u1)");
    }
    rep.add("join formulas agree with least upper bounds", bad == 0,
            bad ? detail : std::to_string(checked) + " joins");
  }

  // norm
  {
    bool hom = true;
    for (std::size_t a = 0; a < q.size() && hom; ++a)
      for (std::size_t b = 0; b < q.size() && hom; ++b) {
        const ElementId x(a), y(b);
        hom = r.kbar.norm(bl.join(x, y)) == std::max(r.kbar.norm(x), r.kbar.norm(y));
      }
    rep.add("norm is a join-homomorphism", hom);
    rep.add("norm range is theta + (theta - delta)", r.kbar.transitive() && r.kbar.theta() == theta2,
            "range " + std::to_string(r.kbar.range().size()) + ", expected " + std::to_string(theta2));
    auto range_of = [&](const ElementSet& block) {
      std::set<Ordinal> out;
      block.for_each([&](std::size_t i) { out.insert(r.kbar.norm(ElementId(i))); });
      return out;
    };
    std::set<Ordinal> want_k, want_f, want_pairs;
    for (Ordinal xi = 0; xi < s.theta; ++xi) want_k.insert(xi);
    for (Ordinal xi = 0; xi < s.delta; ++xi) want_f.insert(xi);
    for (Ordinal xi = s.theta; xi < theta2; ++xi) {
      want_f.insert(xi);
      want_pairs.insert(xi);
    }
    rep.add("norm on K has range theta", range_of(r.k_block) == want_k);
    rep.add("norm on f[K] has range delta u [theta, theta')", range_of(fk) == want_f);
    rep.add("norm on F has range [theta, theta')", range_of(r.f_block) == want_pairs);
  }

  rep.add("Kbar is a 3-ladder", is_k_ladder(bl, 3));

  {
    bool ok = true;
    std::string detail;
    s.ideal_i.for_each([&](std::size_t x) {
      for (const auto& fp : s.pairs)
        if (ok && p.leq(ElementId(x), fp.c) != p.leq(ElementId(x), fp.u)) {
          ok = false;
          detail = p.name(ElementId(x));
        }
    });
    bool split = true;
    for (const auto& fp : s.pairs)
      split = split && k.projection(fp.c, s.delta) == k.projection(fp.u, s.delta);
    rep.add("c_(delta) = u_(delta) on F", split);
    rep.add("x < (c,u) and f(x) < (c,u) agree on I", ok, detail);
  }
  return rep;
}

Report verify_lower_covers(const AmalgamResult& r) {
  const AmalgamSetup& s = r.setup;
  const NormedLattice& k = s.k;
  const Poset& q = r.kbar.poset();
  Report rep("lower covers in Kbar");
  std::size_t bad = 0, exact = 0;
  std::string detail;
  for (std::size_t idx = 0; idx < s.pairs.size(); ++idx) {
    const FPair& fp = s.pairs[idx];
    const ElementId id = r.pair_id.at(fp);
    std::vector<std::optional<ElementId>> candidates;
    const auto pos = std::find(s.chain.begin(), s.chain.end(), fp.c) - s.chain.begin();
    auto pair_of = [&](ElementId c, ElementId u) -> std::optional<ElementId> {
      const auto it = r.pair_id.find({c, u});
      return it == r.pair_id.end() ? std::nullopt : std::optional<ElementId>(it->second);
    };
    if (fp.c == s.o) {
      candidates = {s.o, r.f[s.o.value()]};
    } else {
      const ElementId c_star = s.chain[pos - 1];
      if (k.norm(fp.u) > s.delta) {
        std::optional<ElementId> u_minus;
        for (auto v : k.proj_set(fp.u))
          if (v != fp.u && k.norm(v) >= s.delta) u_minus = v;
        candidates.push_back(u_minus ? pair_of(fp.c, *u_minus) : std::nullopt);
        candidates.push_back(pair_of(c_star, k.projection(c_star, k.norm(fp.u))));
      } else {
        candidates.push_back(fp.c);
        candidates.push_back(pair_of(c_star, k.projection(c_star, s.delta)));
      }
      candidates.push_back(r.f[fp.u.value()]);
    }
    bool ok = true;
    ElementSet cand = q.empty_set();
    for (const auto& c : candidates) {
      if (!c) ok = false;
      else cand.set(c->value());
    }
    ElementSet actual = q.empty_set();
    for (auto y : q.lower_covers(id)) actual.set(y.value());
    ok = ok && actual.is_subset_of(cand);
    if (ok && actual == cand) ++exact;
    if (!ok && !bad++) detail = "at " + q.name(id);
  }
  rep.add("lower covers of F follow the case table", bad == 0,
          bad ? detail : std::to_string(exact) + "/" + std::to_string(s.pairs.size()) + " realize every case");
  std::size_t worst = 0;
  for (auto x : q.elements()) worst = std::max(worst, q.lower_covers(x).size());
  rep.add("every element has at most 3 lower covers", worst <= 3, "max " + std::to_string(worst));
  return rep;
}

}  // namespace ladder
