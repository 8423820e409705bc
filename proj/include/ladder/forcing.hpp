#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ladder/normed.hpp"
#include "ladder/report.hpp"

namespace ladder {

// Conditions of Sk(K) are finite preskeletons of K, ordered by reverse
// containment: F <= E iff F contains E. Every condition is an ElementSet of K.

/// Some x in F has a <= x and norm a == norm x.
bool in_sk_a(const NormedLattice& k, const ElementSet& f, ElementId a);

/// E u Proj(b) with b = a v (join of E). The result is checked to be a
/// condition in Sk_a(K) containing E.
ElementSet extend_into_sk_a(const NormedLattice& k, const ElementSet& e, ElementId a);

/// A finite family is centred iff its union is a preskeleton. Unions of
/// projection-closed sets stay projection-closed and the level-chain
/// condition passes to subsets, so one union decides every finite subfamily,
/// and that union is then a common extension.
bool is_centred(const NormedLattice& k, std::span<const ElementSet> family);

/// A dense set given by a predicate. Extensions are searched among supersets
/// adding at most `search_bound` elements.
struct CustomDense {
  std::string name;
  std::function<bool(const NormedLattice&, const ElementSet&)> contains;
  std::size_t search_bound = 2;
};

/// Targets a stand for Sk_a(K); they are met in the given order, followed by
/// the custom predicates.
struct DenseFamily {
  std::vector<ElementId> targets;
  std::vector<CustomDense> custom;
};

/// {Sk_a(K) : a in K}, in element order.
DenseFamily full_dense_family(const NormedLattice& k);

/// The filter generated by E_0 = start <= E_1 <= ... ; the last condition
/// extends all the others.
struct GenericFilter {
  std::vector<ElementSet> chain;
  std::vector<ElementId> met_targets;
  std::vector<std::string> met_custom;

  const ElementSet& last() const { return chain.back(); }
};

/// Deterministic Rasiowa-Sikorski iteration. A condition already in a dense
/// set is not extended. Throws PreconditionError when `start` is not a
/// preskeleton or a custom predicate has no extension within its bound
/// (naming the stuck condition).
GenericFilter generic_filter(const NormedLattice& k, const DenseFamily& d, const ElementSet& start);

/// Union of the filter, verified to be a skeleton, a cofinal
/// meet-subsemilattice and a 2-ladder (VerificationError otherwise).
/// Requires every a in K among the met targets.
ElementSet skeleton_from_generic(const NormedLattice& k, const GenericFilter& g);

/// The checks run by skeleton_from_generic.
Report verify_generic_skeleton(const NormedLattice& k, const ElementSet& s);

}  // namespace ladder
