#pragma once

#include <span>
#include <vector>

#include "ladder/normed.hpp"
#include "ladder/poset.hpp"
#include "ladder/report.hpp"

namespace ladder {

/// Every element has at most k lower covers (finite lattices are lower finite).
bool is_k_ladder(const Lattice& l, std::size_t k);
/// Same test on a poset that may fail to be a lattice (returns false then).
bool is_k_ladder(const Poset& p, std::size_t k);
/// The subset X, with the induced order, is a k-ladder.
bool is_k_ladder_subset(const Poset& p, const ElementSet& x, std::size_t k);
/// Largest number of lower covers of an element of X inside X.
std::size_t max_lower_covers_within(const Poset& p, const ElementSet& x);

/// F meets every level in a chain and is closed under projections.
bool is_preskeleton(const NormedLattice& k, const ElementSet& f);
/// A preskeleton that is cofinal in every level.
bool is_skeleton(const NormedLattice& k, const ElementSet& f);

/// Union of Proj(c) over a cofinal chain C. The result is checked to be a
/// skeleton before it is returned.
ElementSet skeleton_from_chain(const NormedLattice& k, std::span<const ElementId> chain);

/// Structural consequences of being a preskeleton: F is a meet-subsemilattice,
/// each member has at most two lower covers inside F, and F is a 2-ladder
/// whenever it is upward directed.
Report verify_preskeleton_structure(const NormedLattice& k, const ElementSet& f);

/// Graph of x -> (largest n with a_n <= x) inside K x {0..m}.
struct CofinalCopy {
  Poset product;
  ElementSet copy;           // the graph, a subset of `product`
  ElementMap embedding;      // x -> (x, f(x))
  std::vector<std::size_t> height;  // f(x)
  Report checks;
};

/// `a` must start at the bottom, increase strictly and have length <= m + 1.
CofinalCopy cofinal_copy_in_product(const Lattice& k, std::span<const ElementId> a, std::size_t m);

}  // namespace ladder
