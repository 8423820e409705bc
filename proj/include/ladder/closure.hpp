#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ladder/poset.hpp"
#include "ladder/report.hpp"

namespace ladder {

/// A subset of the ground set {0, ..., m-1}.
using Subset = std::uint64_t;

/// A map on the (n+1)-element subsets of {0, ..., m-1}.
struct F0Map {
  std::size_t m = 0;
  std::size_t n = 0;
  std::function<Subset(Subset)> apply;
};

/// Y -> {x : x < max Y}. Requires m > n + 1 and m <= 20.
F0Map f0_linear(std::size_t m, std::size_t n);

/// For every U with |U| = n + 2 some xi in U lies in f(U \ {xi}), where f is
/// applied to (n+1)-subsets only.
bool has_no_free_sets(std::size_t m, std::size_t n, const std::function<Subset(Subset)>& f);

/// Closure operator on the subsets of {0..m-1} obtained from f0 by iterating
/// g(X) = X u (union of f0(Y) over the (n+1)-subsets Y of X) to a fixpoint.
/// Closures of all 2^m subsets are tabulated at construction.
class ClosureOperator {
 public:
  ClosureOperator() = default;
  explicit ClosureOperator(F0Map f0);

  std::size_t ground() const { return f0_.m; }
  std::size_t n() const { return f0_.n; }
  Subset operator()(Subset x) const { return table_.at(x); }
  /// One application of g.
  Subset step(Subset x) const;
  /// g^k(X).
  Subset iterate(Subset x, std::size_t k) const;
  /// Number of g steps until X becomes stable.
  std::size_t steps_to_fixpoint(Subset x) const;

  /// Extensive, monotone, idempotent (computed directly and by merging
  /// iterates g^k o g^l = g^(k+l)), fixing small sets, and free of free
  /// (n+2)-sets. Join-continuity has no finite content and is recorded as
  /// vacuous.
  Report verify() const;

 private:
  F0Map f0_;
  std::vector<Subset> table_;
};

/// Throws VerificationError when the operator fails verify().
ClosureOperator closure_from_f0(F0Map f0);

struct ClosedSetLattice {
  Lattice lattice;            // closed sets under containment
  std::vector<Subset> sets;   // sets[i] is element i
  std::vector<ElementId> generators;  // the singletons
  Report checks;
};

/// L = {f(X)} ordered by containment, elements sorted by (size, mask). Checks
/// that joins are f(A u B), zero is f(0), singletons are closed, L is
/// atomistic with breadth at most n + 1, and principal ideals are the closed
/// subsets of their top.
ClosedSetLattice build_semilattice(const ClosureOperator& cl);

/// Every element is the join of the members of G below it.
bool generates(const Lattice& l, std::span<const ElementId> g);

/// For every (n+1)-subset U of G some u in U lies below the join of the
/// others. PreconditionError when G does not generate L.
bool breadth_at_most_via_generators(const Lattice& l, std::span<const ElementId> g, std::size_t n);

}  // namespace ladder
