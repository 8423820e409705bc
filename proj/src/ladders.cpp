#include "ladder/ladders.hpp"

#include <algorithm>
#include <string>

namespace ladder {

bool is_k_ladder(const Lattice& l, std::size_t k) {
  for (auto x : l.poset().elements())
    if (l.poset().lower_covers(x).size() > k) return false;
  return true;
}

bool is_k_ladder(const Poset& p, std::size_t k) {
  if (!is_lattice(p)) return false;
  for (auto x : p.elements())
    if (p.lower_covers(x).size() > k) return false;
  return true;
}

bool is_k_ladder_subset(const Poset& p, const ElementSet& x, std::size_t k) {
  if (x.none()) return false;
  return is_k_ladder(induced(p, x), k);
}

std::size_t max_lower_covers_within(const Poset& p, const ElementSet& x) {
  if (x.none()) return 0;
  const Poset sub = induced(p, x);
  std::size_t best = 0;
  for (auto e : sub.elements()) best = std::max(best, sub.lower_covers(e).size());
  return best;
}

bool is_preskeleton(const NormedLattice& k, const ElementSet& f) {
  const Poset& p = k.poset();
  bool ok = true;
  f.for_each([&](std::size_t i) {
    if (!ok) return;
    const ElementId x(i);
    if (!k.proj_members(x).is_subset_of(f)) ok = false;
    f.for_each([&](std::size_t j) {
      if (ok && j > i && k.norm(x) == k.norm(ElementId(j)) && !p.comparable(x, ElementId(j))) ok = false;
    });
  });
  return ok;
}

bool is_skeleton(const NormedLattice& k, const ElementSet& f) {
  if (!is_preskeleton(k, f)) return false;
  const Poset& p = k.poset();
  for (auto x : p.elements()) {
    // some member on the level of x sits above x
    if (!(p.up_set(x) & k.level(k.norm(x)) & f).any()) return false;
  }
  return true;
}

ElementSet skeleton_from_chain(const NormedLattice& k, std::span<const ElementId> chain) {
  const Poset& p = k.poset();
  const ElementSet c = p.make_set(chain);
  if (c.none() || !is_chain(p, c)) throw PreconditionError("skeleton_from_chain: the given elements are not a chain");
  if (!is_cofinal(p, c)) throw PreconditionError("skeleton_from_chain: the chain is not cofinal");
  ElementSet f = p.empty_set();
  for (auto e : chain) f |= k.proj_members(e);
  if (!is_skeleton(k, f)) throw VerificationError("skeleton_from_chain produced a set that is not a skeleton");
  return f;
}

Report verify_preskeleton_structure(const NormedLattice& k, const ElementSet& f) {
  Report r("preskeleton structure");
  const Poset& p = k.poset();
  r.add("preskeleton", is_preskeleton(k, f));
  r.add("meet-subsemilattice", is_meet_subsemilattice(k.lattice(), f));
  const std::size_t covers = max_lower_covers_within(p, f);
  r.add("at most two lower covers in F", covers <= 2, "max " + std::to_string(covers));
  if (f.any() && is_upward_directed(p, f)) r.add("directed preskeleton is a 2-ladder", is_k_ladder_subset(p, f, 2));
  return r;
}

CofinalCopy cofinal_copy_in_product(const Lattice& k, std::span<const ElementId> a, std::size_t m) {
  const Poset& p = k.poset();
  if (a.empty() || a.front() != k.bottom()) throw PreconditionError("cofinal copy: sequence must start at the bottom");
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!p.lt(a[i - 1], a[i])) throw PreconditionError("cofinal copy: sequence is not strictly increasing");
  if (a.size() > m + 1) throw PreconditionError("cofinal copy: sequence longer than m + 1");

  const Poset heights = chain(m + 1);
  CofinalCopy out{product(p, heights), {}, {}, {}, Report("cofinal copy in K x chain")};
  out.copy = out.product.empty_set();
  for (auto x : p.elements()) {
    std::size_t h = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (p.leq(a[i], x)) h = i;
    out.height.push_back(h);
    const ElementId img = product_id(p, heights, x, ElementId(h));
    out.embedding.push_back(img);
    out.copy.set(img.value());
  }

  const Lattice prod(out.product);
  out.checks.add("meet-subsemilattice of the product", is_meet_subsemilattice(prod, out.copy));
  // cofinal in K x {0..len(a)-1}
  bool cofinal = true;
  for (auto x : p.elements())
    for (std::size_t h = 0; h < a.size(); ++h) {
      const ElementId e = product_id(p, heights, x, ElementId(h));
      if (!(out.product.up_set(e) & out.copy).any()) cofinal = false;
    }
  out.checks.add("cofinal in K x {0..len(a)-1}", cofinal);
  out.checks.add("x -> (x, f(x)) is an order-isomorphism onto the copy",
                 is_order_embedding(p, out.product, out.embedding));
  return out;
}

}  // namespace ladder
