#include "ladder/closure.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "ladder/fixtures.hpp"

namespace ladder {

namespace {

// Visits every k-subset of {0..m-1}, as masks in increasing order.
template <class F>
bool for_each_k_subset(std::size_t m, std::size_t k, F&& visit) {
  if (k > m) return true;
  if (k == 0) return visit(Subset{0});
  Subset s = (Subset{1} << k) - 1;
  const Subset limit = Subset{1} << m;
  while (s < limit) {
    if (!visit(s)) return false;
    const Subset c = s & -s;
    const Subset r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return true;
}

// Each (n+1)-subset of x.
template <class F>
void for_each_sub_of_size(Subset x, std::size_t k, F&& visit) {
  std::vector<std::size_t> bits;
  for (std::size_t i = 0; i < 64; ++i)
    if (x >> i & 1) bits.push_back(i);
  for_each_k_subset(bits.size(), k, [&](Subset pick) {
    Subset y = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (pick >> i & 1) y |= Subset{1} << bits[i];
    visit(y);
    return true;
  });
}

}  // namespace

F0Map f0_linear(std::size_t m, std::size_t n) {
  if (n < 1 || m <= n + 1) throw PreconditionError("f0_linear needs n >= 1 and m > n + 1");
  if (m > 20) throw PreconditionError("f0_linear: ground sets above 20 elements are not tabulated");
  return F0Map{m, n, [](Subset y) -> Subset {
                 if (y == 0) return 0;
                 const int top = 63 - std::countl_zero(y);
                 return (Subset{1} << top) - 1;
               }};
}

bool has_no_free_sets(std::size_t m, std::size_t n, const std::function<Subset(Subset)>& f) {
  return for_each_k_subset(m, n + 2, [&](Subset u) {
    for (std::size_t xi = 0; xi < m; ++xi) {
      const Subset bit = Subset{1} << xi;
      if ((u & bit) && (f(u & ~bit) & bit)) return true;
    }
    return false;
  });
}

ClosureOperator::ClosureOperator(F0Map f0) : f0_(std::move(f0)) {
  if (f0_.m > 20) throw PreconditionError("closure operator: ground set too large to tabulate");
  const Subset count = Subset{1} << f0_.m;
  table_.resize(count);
  for (Subset x = 0; x < count; ++x) {
    Subset cur = x;
    for (Subset next = step(cur); next != cur; next = step(cur)) cur = next;
    table_[x] = cur;
  }
}

Subset ClosureOperator::step(Subset x) const {
  Subset out = x;
  for_each_sub_of_size(x, f0_.n + 1, [&](Subset y) { out |= f0_.apply(y); });
  const Subset mask = (Subset{1} << f0_.m) - 1;
  return out & mask;
}

Subset ClosureOperator::iterate(Subset x, std::size_t k) const {
  for (std::size_t i = 0; i < k; ++i) x = step(x);
  return x;
}

std::size_t ClosureOperator::steps_to_fixpoint(Subset x) const {
  std::size_t k = 0;
  for (Subset next = step(x); next != x; next = step(x)) {
    x = next;
    ++k;
  }
  return k;
}

Report ClosureOperator::verify() const {
  Report r("closure operator m=" + std::to_string(f0_.m) + " n=" + std::to_string(f0_.n));
  const Subset count = Subset{1} << f0_.m;
  bool extensive = true, monotone = true, idem = true, merged = true, small = true;
  std::string where;
  for (Subset x = 0; x < count; ++x) {
    const Subset fx = table_[x];
    extensive = extensive && (x & ~fx) == 0;
    for (std::size_t i = 0; i < f0_.m; ++i) {
      const Subset y = x | Subset{1} << i;
      if ((fx & ~table_[y]) != 0) {
        if (monotone) where = fixtures::set_name(x);
        monotone = false;
      }
    }
    idem = idem && table_[fx] == fx;
    // f(f(X)) as the union of g^k(g^l(X)) = g^(k+l)(X)
    const std::size_t kx = steps_to_fixpoint(x);
    for (std::size_t l = 0; l <= kx && merged; ++l) {
      const Subset gl = iterate(x, l);
      for (std::size_t k = 0; k <= kx && merged; ++k) merged = iterate(gl, k) == iterate(x, k + l);
    }
    merged = merged && iterate(x, 2 * kx) == fx;
    if (static_cast<std::size_t>(std::popcount(x)) <= f0_.n) small = small && fx == x;
  }
  r.add("extensive", extensive);
  r.add("monotone", monotone, where);
  r.add("idempotent (direct)", idem);
  r.add("idempotent (merging iterates)", merged);
  r.add("f(X) = X for |X| <= n", small);
  r.add("no free (n+2)-sets", has_no_free_sets(f0_.m, f0_.n, [this](Subset y) { return table_[y]; }));
  r.add("join-continuity", true, "vacuous for finite directed unions");
  return r;
}

ClosureOperator closure_from_f0(F0Map f0) {
  if (!f0.apply) throw PreconditionError("closure_from_f0: missing f0");
  ClosureOperator cl(std::move(f0));
  const Report r = cl.verify();
  if (!r.ok()) throw VerificationError("closure_from_f0: " + r.first_failure());
  return cl;
}

ClosedSetLattice build_semilattice(const ClosureOperator& cl) {
  const std::size_t m = cl.ground();
  std::vector<Subset> sets;
  for (Subset x = 0; x < (Subset{1} << m); ++x) sets.push_back(cl(x));
  std::sort(sets.begin(), sets.end(), [](Subset a, Subset b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  std::vector<std::string> names;
  std::map<Subset, ElementId> index;
  std::vector<OrderPair> gens;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    names.push_back(fixtures::set_name(sets[i]));
    index[sets[i]] = ElementId(i);
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && (sets[i] & ~sets[j]) == 0) gens.emplace_back(ElementId(i), ElementId(j));
  }
  ClosedSetLattice out{Lattice(Poset::from_relation(std::move(names), gens)), sets, {}, Report("closed sets")};
  const Lattice& l = out.lattice;
  Report& r = out.checks;

  bool joins = true;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      joins = joins && l.join(ElementId(i), ElementId(j)) == index.at(cl(sets[i] | sets[j]));
  r.add("join of A and B is f(A u B)", joins);
  r.add("zero is f(empty)", sets[l.bottom().value()] == cl(0));
  bool singletons = true;
  for (std::size_t xi = 0; xi < m; ++xi) {
    const auto it = index.find(Subset{1} << xi);
    if (it == index.end()) singletons = false;
    else out.generators.push_back(it->second);
  }
  r.add("every singleton is closed", singletons);
  r.add("atomistic", is_atomistic(l));
  r.add("breadth at most n + 1", breadth_at_most(l.poset(), cl.n() + 1));
  bool ideals = true;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    ElementSet want = l.poset().empty_set();
    for (std::size_t j = 0; j < sets.size(); ++j)
      if ((sets[j] & ~sets[i]) == 0) want.set(j);
    ideals = ideals && want == l.poset().down_set(ElementId(i));
  }
  r.add("principal ideals are the closed subsets of their top", ideals);
  return out;
}

bool generates(const Lattice& l, std::span<const ElementId> g) {
  const ElementSet gs = l.poset().make_set(g);
  for (auto x : l.poset().elements())
    if (l.join_of(gs & l.poset().down_set(x)) != x) return false;
  return true;
}

bool breadth_at_most_via_generators(const Lattice& l, std::span<const ElementId> g, std::size_t n) {
  if (!generates(l, g)) throw PreconditionError("the given set does not generate the lattice");
  std::vector<ElementId> gens(g.begin(), g.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.size() > 63) throw PreconditionError("too many generators");
  return for_each_k_subset(gens.size(), n + 1, [&](Subset u) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!(u >> i & 1)) continue;
      ElementId rest = l.bottom();
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i && (u >> j & 1)) rest = l.join(rest, gens[j]);
      if (l.leq(gens[i], rest)) return true;
    }
    return false;
  });
}

}  // namespace ladder
