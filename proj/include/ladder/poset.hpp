#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ladder/bitset.hpp"
#include "ladder/error.hpp"

namespace ladder {

/// Position of an element inside one poset. Ids are assigned in creation
/// order and never change for the lifetime of that poset.
struct ElementId {
  std::uint32_t index = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}
  constexpr std::size_t value() const { return index; }

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// A subset of a poset, indexed by ElementId.
using ElementSet = Bitset;

/// A total map between the element sets of two posets.
using ElementMap = std::vector<ElementId>;

using OrderPair = std::pair<ElementId, ElementId>;

/// Finite partial order stored as a dense reachability matrix.
///
/// Construction takes any generating relation, closes it reflexively and
/// transitively and rejects antisymmetry violations. Lower and upper covers
/// (the Hasse diagram) are derived at construction.
class Poset {
 public:
  Poset() = default;

  /// Builds the order generated by `generators` on elements named `names`.
  static Poset from_relation(std::vector<std::string> names, std::span<const OrderPair> generators);

  /// Convenience overload using element names for the pairs.
  static Poset from_named_relation(std::vector<std::string> names,
                                   std::span<const std::pair<std::string, std::string>> generators);

  /// Antichain on the given names.
  static Poset discrete(std::vector<std::string> names) { return from_relation(std::move(names), {}); }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(ElementId x) const { return names_[check(x).value()]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> find(std::string_view name) const;
  /// Like find, but unknown names raise InputError.
  ElementId id(std::string_view name) const;

  /// Throws InputError when x is not an element of this poset.
  ElementId check(ElementId x) const {
    if (x.value() >= size()) throw InputError("unknown element id " + std::to_string(x.value()));
    return x;
  }

  std::vector<ElementId> elements() const;

  bool leq(ElementId x, ElementId y) const { return above_[x.value()].test(y.value()); }
  bool lt(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const { return leq(x, y) || leq(y, x); }

  /// {y : x <= y}
  const ElementSet& up_set(ElementId x) const { return above_[check(x).value()]; }
  /// {y : y <= x}
  const ElementSet& down_set(ElementId x) const { return below_[check(x).value()]; }

  const std::vector<ElementId>& lower_covers(ElementId x) const { return lower_covers_[check(x).value()]; }
  const std::vector<ElementId>& upper_covers(ElementId x) const { return upper_covers_[check(x).value()]; }

  std::optional<ElementId> least() const;
  std::optional<ElementId> greatest() const;

  /// Least element of X, if X has one.
  std::optional<ElementId> least_of(const ElementSet& x) const;
  /// Greatest element of X, if X has one.
  std::optional<ElementId> greatest_of(const ElementSet& x) const;

  std::optional<ElementId> try_join(ElementId x, ElementId y) const;
  std::optional<ElementId> try_meet(ElementId x, ElementId y) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet(size(), true); }
  ElementSet make_set(std::span<const ElementId> xs) const;
  ElementSet make_set(std::initializer_list<std::string_view> names) const;

  /// All pairs (x, y) with x <= y, x != y.
  std::vector<OrderPair> strict_pairs() const;
  /// Hasse diagram edges (lower, upper), sorted by (lower, upper).
  std::vector<OrderPair> cover_pairs() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.above_ == b.above_;
  }

 private:
  void finish();

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<ElementSet> above_;
  std::vector<ElementSet> below_;
  std::vector<std::vector<ElementId>> lower_covers_;
  std::vector<std::vector<ElementId>> upper_covers_;
};

/// A finite poset in which every pair has a meet and a join.
/// Meet and join tables are computed once at construction.
class Lattice {
 public:
  Lattice() = default;
  /// Throws PreconditionError (naming a witness pair) when `p` is not a
  /// nonempty lattice.
  explicit Lattice(Poset p);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  bool leq(ElementId x, ElementId y) const { return poset_.leq(x, y); }
  const std::string& name(ElementId x) const { return poset_.name(x); }
  ElementId id(std::string_view name) const { return poset_.id(name); }

  ElementId join(ElementId x, ElementId y) const {
    return join_[poset_.check(x).value() * size() + poset_.check(y).value()];
  }
  ElementId meet(ElementId x, ElementId y) const {
    return meet_[poset_.check(x).value() * size() + poset_.check(y).value()];
  }
  /// Join of a finite set; the empty join is the bottom.
  ElementId join_of(const ElementSet& xs) const;
  ElementId join_of(std::span<const ElementId> xs) const;
  /// Meet of a finite set; the empty meet is the top.
  ElementId meet_of(const ElementSet& xs) const;

  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.poset_ == b.poset_; }

 private:
  Poset poset_;
  std::vector<ElementId> join_;
  std::vector<ElementId> meet_;
  ElementId bottom_;
  ElementId top_;
};

// ---------------------------------------------------------------------------
// Free-standing order predicates and constructions.

bool is_lattice(const Poset& p);

const std::vector<ElementId>& lower_covers(const Poset& p, ElementId x);

/// Covers of the least element. Empty when p has no least element.
std::vector<ElementId> atoms(const Poset& p);
/// True iff every element is the join of the atoms below it (0 is the empty join).
bool is_atomistic(const Lattice& l);

/// Join and meet on an arbitrary poset; PreconditionError when absent.
ElementId join(const Poset& p, ElementId x, ElementId y);
ElementId meet(const Poset& p, ElementId x, ElementId y);

/// The least element of F above x, or nothing when there is no least one.
std::optional<ElementId> least_above(const Poset& p, const ElementSet& f, ElementId x);

bool is_order_embedding(const Poset& source, const Poset& target, std::span<const ElementId> map);
/// Order-embedding whose range is a lower subset of the target.
bool is_lower_embedding(const Poset& source, const Poset& target, std::span<const ElementId> map);

bool is_strong_amalgam(const Poset& p, const ElementSet& a, const ElementSet& b, const ElementSet& i);

/// Componentwise order; element (i, j) gets id i * |Q| + j and name "(p,q)".
Poset product(const Poset& p, const Poset& q);
ElementId product_id(const Poset& p, const Poset& q, ElementId a, ElementId b);

Poset dual(const Poset& p);
/// Induced subposet on X; `embedding` (if given) receives the map from the
/// subposet's ids to the ids of p.
Poset induced(const Poset& p, const ElementSet& x, ElementMap* embedding = nullptr);

ElementSet down_set(const Poset& p, ElementId x);
bool is_lower_subset(const Poset& p, const ElementSet& x);
bool is_upward_directed(const Poset& p, const ElementSet& x);
/// Nonempty, upward directed, lower subset.
bool is_ideal(const Poset& p, const ElementSet& x);
/// Every element of p lies below some element of X.
bool is_cofinal(const Poset& p, const ElementSet& x);
bool is_chain(const Poset& p, const ElementSet& x);
/// Closed under binary meets of the lattice (the empty set qualifies).
bool is_meet_subsemilattice(const Lattice& l, const ElementSet& x);

/// Size of the largest antichain (Dilworth, via bipartite matching).
std::size_t width(const Poset& p);

/// Least n >= 1 such that for all x_0..x_n, y_0..y_n with x_i <= y_j for
/// i != j there is some i with x_i <= y_i.
std::size_t breadth(const Poset& p);
/// True iff breadth(p) <= n; stops as soon as a violation of size n+1 is found.
bool breadth_at_most(const Poset& p, std::size_t n);

/// Chain 0 < 1 < ... < n-1 with names "0".."n-1".
Poset chain(std::size_t n);

}  // namespace ladder
