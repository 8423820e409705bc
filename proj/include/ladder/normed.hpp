#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ladder/poset.hpp"

namespace ladder {

/// Ordinal values of norms. Every construction in this library stays below
/// omega, so ordinal sum and difference are plain integer arithmetic.
using Ordinal = std::uint32_t;

/// A finite lattice together with a join-homomorphism into the ordinals.
///
/// The constructor validates max-compatibility, `norm(x v y) == max(norm x,
/// norm y)`, and reports the first violating pair.  Levels `K_xi` and extended
/// ideals `K_{<=xi}` are derived once.
class NormedLattice {
 public:
  NormedLattice() = default;
  NormedLattice(Lattice lattice, std::vector<Ordinal> norm);

  const Lattice& lattice() const { return lattice_; }
  const Poset& poset() const { return lattice_.poset(); }
  std::size_t size() const { return lattice_.size(); }

  Ordinal norm(ElementId x) const { return norm_[poset().check(x).value()]; }
  const std::vector<Ordinal>& norms() const { return norm_; }

  /// Distinct norm values in increasing order.
  const std::vector<Ordinal>& range() const { return range_; }
  /// True iff the range is an initial segment {0, ..., theta-1}.
  bool transitive() const { return transitive_; }
  /// max(range) + 1, which is the range itself when transitive.
  Ordinal theta() const { return range_.back() + 1; }

  /// {x : norm x == xi}
  ElementSet level(Ordinal xi) const;
  /// {x : norm x <= xi}
  ElementSet extended_ideal(Ordinal xi) const;

  /// Largest y <= x with norm y <= xi. PreconditionError if there is none.
  ElementId projection(ElementId x, Ordinal xi) const;
  /// The chain {x_(xi) : xi in range}, listed bottom-up without repeats.
  std::vector<ElementId> proj_set(ElementId x) const;
  ElementSet proj_members(ElementId x) const;
  /// x is a member of Proj(y).
  bool tri_below(ElementId x, ElementId y) const;

  friend bool operator==(const NormedLattice& a, const NormedLattice& b) {
    return a.lattice_ == b.lattice_ && a.norm_ == b.norm_;
  }

 private:
  Lattice lattice_;
  std::vector<Ordinal> norm_;
  std::vector<Ordinal> range_;
  bool transitive_ = false;
  std::vector<std::vector<ElementId>> proj_;  // proj_[x][k] = x_(range_[k])
};

/// Validates `norm` on `lattice`; same as the constructor.
NormedLattice check_norm(const Lattice& lattice, std::vector<Ordinal> norm);

/// Smallest ideal containing `seeds` and the bottom: closes under binary
/// joins and down-sets until nothing changes.
ElementSet generated_ideal(const Lattice& lattice, const ElementSet& seeds);

/// norm x = least alpha with x in I_alpha, where I_alpha is the ideal generated
/// by the first alpha elements of `order` together with the bottom
/// (so I_0 = {0}).
NormedLattice norm_from_enumeration(const Lattice& lattice, std::span<const ElementId> order);

/// norm x = least xi with x in chain[xi]. The sets must increase, each be
/// empty or an ideal, and cover the lattice.
NormedLattice norm_from_ideal_chain(const Lattice& lattice, std::span<const ElementSet> chain);

/// The sequence K_{<=0} .. K_{<=theta-1}.
std::vector<ElementSet> extended_ideals(const NormedLattice& k);

}  // namespace ladder
