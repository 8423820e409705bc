#include "ladder/forcing.hpp"

#include <algorithm>

#include "ladder/ladders.hpp"

namespace ladder {

namespace {

std::string describe(const Poset& p, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    first = false;
    out += p.name(ElementId(i));
  });
  return out + "}";
}

// Supersets of `base` adding exactly `size` elements of `pool`, in
// lexicographic order of the added indices; stops when `visit` returns true.
bool for_each_extension(const ElementSet& base, const std::vector<std::size_t>& pool, std::size_t size,
                        const std::function<bool(const ElementSet&)>& visit) {
  if (size > pool.size()) return false;
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    ElementSet s = base;
    for (auto i : pick) s.set(pool[i]);
    if (visit(s)) return true;
    std::size_t pos = size;
    while (pos > 0 && pick[pos - 1] == pool.size() - size + pos - 1) --pos;
    if (pos == 0) return false;
    ++pick[pos - 1];
    for (std::size_t j = pos; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

bool in_sk_a(const NormedLattice& k, const ElementSet& f, ElementId a) {
  return (f & k.poset().up_set(a) & k.level(k.norm(a))).any();
}

ElementSet extend_into_sk_a(const NormedLattice& k, const ElementSet& e, ElementId a) {
  const Lattice& l = k.lattice();
  const ElementId b = l.join(a, l.join_of(e));
  ElementSet f = e | k.proj_members(b);
  if (!is_preskeleton(k, f) || !in_sk_a(k, f, a))
    throw VerificationError("extension of " + describe(k.poset(), e) + " towards " + k.poset().name(a) +
                            " is not a condition in Sk_a");
  return f;
}

bool is_centred(const NormedLattice& k, std::span<const ElementSet> family) {
  ElementSet u = k.poset().empty_set();
  for (const auto& f : family) u |= f;
  return is_preskeleton(k, u);
}

DenseFamily full_dense_family(const NormedLattice& k) { return DenseFamily{k.poset().elements(), {}}; }

GenericFilter generic_filter(const NormedLattice& k, const DenseFamily& d, const ElementSet& start) {
  const Poset& p = k.poset();
  if (start.size() != p.size() || !is_preskeleton(k, start))
    throw PreconditionError("generic filter: start " + describe(p, start) + " is not a preskeleton");
  GenericFilter g;
  g.chain.push_back(start);
  for (auto a : d.targets) {
    p.check(a);
    if (!in_sk_a(k, g.last(), a)) g.chain.push_back(extend_into_sk_a(k, g.last(), a));
    g.met_targets.push_back(a);
  }
  for (const auto& dense : d.custom) {
    const ElementSet current = g.last();
    if (!dense.contains(k, current)) {
      std::vector<std::size_t> pool = (p.full_set() - current).indices();
      std::optional<ElementSet> found;
      for (std::size_t add = 1; add <= dense.search_bound && !found; ++add)
        for_each_extension(current, pool, add, [&](const ElementSet& s) {
          if (is_preskeleton(k, s) && dense.contains(k, s)) found = s;
          return found.has_value();
        });
      if (!found)
        throw PreconditionError("dense set '" + dense.name + "' has no extension of " + describe(p, current) +
                                " within " + std::to_string(dense.search_bound) + " added elements");
      g.chain.push_back(*found);
    }
    g.met_custom.push_back(dense.name);
  }
  return g;
}

Report verify_generic_skeleton(const NormedLattice& k, const ElementSet& s) {
  Report r("skeleton from generic filter");
  const Poset& p = k.poset();
  r.add("skeleton", is_skeleton(k, s));
  r.add("cofinal", is_cofinal(p, s));
  r.merge(verify_preskeleton_structure(k, s));
  r.add("2-ladder", is_k_ladder_subset(p, s, 2));
  return r;
}

ElementSet skeleton_from_generic(const NormedLattice& k, const GenericFilter& g) {
  const Poset& p = k.poset();
  ElementSet met = p.empty_set();
  for (auto a : g.met_targets) met.set(a.value());
  if (met != p.full_set()) throw PreconditionError("skeleton_from_generic: the filter did not meet every Sk_a");
  ElementSet s = p.empty_set();
  for (const auto& e : g.chain) s |= e;
  const Report r = verify_generic_skeleton(k, s);
  if (!r.ok()) throw VerificationError("skeleton_from_generic: " + r.first_failure());
  return s;
}

}  // namespace ladder
