#include "ladder/normed.hpp"

#include <algorithm>
#include <string>

namespace ladder {

NormedLattice::NormedLattice(Lattice lattice, std::vector<Ordinal> norm)
    : lattice_(std::move(lattice)), norm_(std::move(norm)) {
  const std::size_t n = lattice_.size();
  if (norm_.size() != n)
    throw InputError("norm has " + std::to_string(norm_.size()) + " values for " + std::to_string(n) +
                     " elements");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const ElementId x(i), y(j);
      const Ordinal joined = norm_[lattice_.join(x, y).value()];
      if (joined != std::max(norm_[i], norm_[j]))
        throw PreconditionError("norm is not a join-homomorphism: norm('" + lattice_.name(x) + "' v '" +
                                lattice_.name(y) + "') = " + std::to_string(joined) + ", expected " +
                                std::to_string(std::max(norm_[i], norm_[j])));
    }
  range_ = norm_;
  std::sort(range_.begin(), range_.end());
  range_.erase(std::unique(range_.begin(), range_.end()), range_.end());
  transitive_ = range_.front() == 0 && range_.back() + 1 == range_.size();

  proj_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ElementId x(i);
    for (Ordinal xi : range_) {
      ElementSet candidates = poset().down_set(x) & extended_ideal(xi);
      auto g = poset().greatest_of(candidates);
      if (!g)
        throw VerificationError("projection of '" + lattice_.name(x) + "' at level " + std::to_string(xi) +
                                " has no largest element");
      proj_[i].push_back(*g);
    }
  }
}

ElementSet NormedLattice::level(Ordinal xi) const {
  ElementSet s(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (norm_[i] == xi) s.set(i);
  return s;
}

ElementSet NormedLattice::extended_ideal(Ordinal xi) const {
  ElementSet s(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (norm_[i] <= xi) s.set(i);
  return s;
}

ElementId NormedLattice::projection(ElementId x, Ordinal xi) const {
  poset().check(x);
  // largest range value <= xi
  auto it = std::upper_bound(range_.begin(), range_.end(), xi);
  if (it == range_.begin())
    throw PreconditionError("no element below '" + lattice_.name(x) + "' has norm <= " + std::to_string(xi));
  return proj_[x.value()][static_cast<std::size_t>(it - range_.begin()) - 1];
}

std::vector<ElementId> NormedLattice::proj_set(ElementId x) const {
  std::vector<ElementId> out = proj_[poset().check(x).value()];
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet NormedLattice::proj_members(ElementId x) const {
  ElementSet s(size());
  for (auto p : proj_[poset().check(x).value()]) s.set(p.value());
  return s;
}

bool NormedLattice::tri_below(ElementId x, ElementId y) const {
  poset().check(x);
  const auto& p = proj_[poset().check(y).value()];
  return std::find(p.begin(), p.end(), x) != p.end();
}

NormedLattice check_norm(const Lattice& lattice, std::vector<Ordinal> norm) {
  return NormedLattice(lattice, std::move(norm));
}

ElementSet generated_ideal(const Lattice& lattice, const ElementSet& seeds) {
  const Poset& p = lattice.poset();
  ElementSet ideal = seeds;
  ideal.set(lattice.bottom().value());
  // a finite nonempty lower subset closed under binary joins is the down-set
  // of the join of its members
  const ElementId top = lattice.join_of(ideal);
  ideal |= p.down_set(top);
  return ideal;
}

NormedLattice norm_from_enumeration(const Lattice& lattice, std::span<const ElementId> order) {
  const std::size_t n = lattice.size();
  if (order.size() != n) throw PreconditionError("enumeration must list every element exactly once");
  ElementSet seen(n);
  for (auto e : order) {
    lattice.poset().check(e);
    if (seen.test(e.value())) throw PreconditionError("enumeration lists '" + lattice.name(e) + "' twice");
    seen.set(e.value());
  }
  constexpr Ordinal unset = static_cast<Ordinal>(-1);
  std::vector<Ordinal> norm(n, unset);
  ElementSet seeds(n);
  for (std::size_t alpha = 0; alpha <= n; ++alpha) {
    if (alpha > 0) seeds.set(order[alpha - 1].value());
    const ElementSet ideal = generated_ideal(lattice, seeds);
    ideal.for_each([&](std::size_t i) {
      if (norm[i] == unset) norm[i] = static_cast<Ordinal>(alpha);
    });
  }
  return NormedLattice(lattice, std::move(norm));
}

NormedLattice norm_from_ideal_chain(const Lattice& lattice, std::span<const ElementSet> chain) {
  const std::size_t n = lattice.size();
  if (chain.empty()) throw PreconditionError("ideal chain is empty");
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k].size() != n) throw PreconditionError("ideal chain member has the wrong universe size");
    if (chain[k].any() && !is_ideal(lattice.poset(), chain[k]))
      throw PreconditionError("ideal chain member " + std::to_string(k) + " is neither empty nor an ideal");
    if (k > 0 && !chain[k - 1].is_subset_of(chain[k]))
      throw PreconditionError("ideal chain is not increasing at position " + std::to_string(k));
  }
  if (chain.back() != lattice.poset().full_set()) throw PreconditionError("ideal chain does not cover the lattice");
  std::vector<Ordinal> norm(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < chain.size(); ++k)
      if (chain[k].test(i)) {
        norm[i] = static_cast<Ordinal>(k);
        break;
      }
  return NormedLattice(lattice, std::move(norm));
}

std::vector<ElementSet> extended_ideals(const NormedLattice& k) {
  std::vector<ElementSet> out;
  for (Ordinal xi = 0; xi < k.theta(); ++xi) out.push_back(k.extended_ideal(xi));
  return out;
}

}  // namespace ladder
