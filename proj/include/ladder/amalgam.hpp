#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ladder/normed.hpp"
#include "ladder/report.hpp"

namespace ladder {

/// tau(xi) = xi below delta, theta + (xi - delta) from delta on.
Ordinal tau(Ordinal delta, Ordinal theta, Ordinal xi);

/// K must be a transitive normed 3-ladder with range theta, 0 < delta < theta,
/// and `chain` a cofinal chain of K (so it contains the top) whose least
/// element o has norm delta. The chain may be listed in any order.
struct AmalgamInput {
  NormedLattice k;
  Ordinal delta = 1;
  std::vector<ElementId> chain;
};

/// An element (c, u) of F: c in C, u in Proj(c), delta <= norm u.
struct FPair {
  ElementId c;
  ElementId u;
  friend auto operator<=>(const FPair&, const FPair&) = default;
};

/// Validated input: the chain sorted bottom-up, o its least element, and
/// I = {x : norm x < delta}.
struct AmalgamSetup {
  NormedLattice k;
  Ordinal delta = 0;
  Ordinal theta = 0;
  std::vector<ElementId> chain;
  ElementSet chain_set;
  ElementId o;
  ElementSet ideal_i;
  std::vector<FPair> pairs;  // F, by c along the chain, then u bottom-up

  /// Least element of C above x.
  ElementId up_to_chain(ElementId x) const;
};

/// Throws PreconditionError naming the violated hypothesis.
AmalgamSetup prepare_amalgam(const AmalgamInput& input);

/// Least element of F above (x, y): c = x^C v y^C and u = c_(delta v norm y).
FPair f_least(const AmalgamSetup& setup, ElementId x, ElementId y);

struct AmalgamResult {
  AmalgamSetup setup;
  NormedLattice kbar;
  /// Ids of K are kept; the copies of K \ I come next, then F.
  ElementMap f;                 // K -> Kbar
  ElementSet k_block;           // K
  ElementSet copy_block;        // f[K] \ I
  ElementSet f_block;           // F
  std::map<FPair, ElementId> pair_id;

  ElementId pair(ElementId c, ElementId u) const;
};

struct AmalgamOptions {
  /// Copies are named prefix(x).
  std::string copy_prefix = "f";
};

/// Builds Kbar = (K u f[K]) + F. The order is the closure of the block
/// orders, the strong-amalgam cross pairs and the two rules
/// x < (c,u) iff x <= c, f(x) < (c,u) iff x <= u; antisymmetry, the lattice
/// property and the norm are verified by construction, and the full
/// conclusion report must pass (VerificationError otherwise).
AmalgamResult amalgamate(const AmalgamInput& input, const AmalgamOptions& options = {});

/// Every conclusion of the construction, checked against brute force.
Report verify_amalgam(const AmalgamResult& r);

/// Lower covers of each (c,u) in Kbar against the case table
///   c = o:                     o, f(o)
///   c > o, norm u > delta:     (c,u^-), (c_*, (c_*)_(norm u)), f(u)
///   c > o, norm u = delta:     c, (c_*, (c_*)_(delta)), f(u)
/// where c_* is the predecessor of c in C and u^- the largest member of
/// Proj(u) \ {u} of norm at least delta. Also checks the 3-ladder bound.
Report verify_lower_covers(const AmalgamResult& r);

}  // namespace ladder
