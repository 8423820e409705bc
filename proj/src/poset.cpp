#include "ladder/poset.hpp"

#include <algorithm>
#include <numeric>

namespace ladder {

Poset Poset::from_relation(std::vector<std::string> names, std::span<const OrderPair> generators) {
  Poset p;
  p.names_ = std::move(names);
  const std::size_t n = p.names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = p.index_.emplace(p.names_[i], ElementId(i));
    if (!inserted) throw InputError("duplicate element name '" + p.names_[i] + "'");
  }
  p.above_.assign(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) p.above_[i].set(i);
  for (auto [a, b] : generators) {
    if (a.value() >= n || b.value() >= n) throw InputError("order pair refers to an unknown element");
    p.above_[a.value()].set(b.value());
  }
  // Warshall on rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (i != k && p.above_[i].test(k)) p.above_[i] |= p.above_[k];
  for (std::size_t i = 0; i < n; ++i) {
    p.above_[i].for_each([&](std::size_t j) {
      if (j != i && p.above_[j].test(i))
        throw InputError("antisymmetry violated: '" + p.names_[i] + "' <= '" + p.names_[j] +
                         "' and '" + p.names_[j] + "' <= '" + p.names_[i] + "'");
    });
  }
  p.finish();
  return p;
}

Poset Poset::from_named_relation(std::vector<std::string> names,
                                 std::span<const std::pair<std::string, std::string>> generators) {
  std::unordered_map<std::string, ElementId> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], ElementId(i));
  std::vector<OrderPair> pairs;
  pairs.reserve(generators.size());
  for (const auto& [a, b] : generators) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw InputError("unknown element '" + a + "' in order pair");
    if (ib == idx.end()) throw InputError("unknown element '" + b + "' in order pair");
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_relation(std::move(names), pairs);
}

void Poset::finish() {
  const std::size_t n = size();
  below_.assign(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) above_[i].for_each([&](std::size_t j) { below_[j].set(i); });
  lower_covers_.assign(n, {});
  upper_covers_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    ElementSet strictly_below = below_[x];
    strictly_below.reset(x);
    strictly_below.for_each([&](std::size_t y) {
      // y is a lower cover of x iff nothing of strictly_below sits above y.
      ElementSet between = above_[y] & strictly_below;
      if (between.count() == 1) {
        lower_covers_[x].push_back(ElementId(y));
        upper_covers_[y].push_back(ElementId(x));
      }
    });
  }
  for (auto& v : upper_covers_) std::sort(v.begin(), v.end());
}

std::optional<ElementId> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Poset::id(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw InputError("unknown element '" + std::string(name) + "'");
}

std::vector<ElementId> Poset::elements() const {
  std::vector<ElementId> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = ElementId(i);
  return out;
}

std::optional<ElementId> Poset::least_of(const ElementSet& x) const {
  std::optional<ElementId> found;
  x.for_each([&](std::size_t i) {
    if (!found && x.is_subset_of(above_[i])) found = ElementId(i);
  });
  return found;
}

std::optional<ElementId> Poset::greatest_of(const ElementSet& x) const {
  std::optional<ElementId> found;
  x.for_each([&](std::size_t i) {
    if (!found && x.is_subset_of(below_[i])) found = ElementId(i);
  });
  return found;
}

std::optional<ElementId> Poset::least() const { return least_of(full_set()); }
std::optional<ElementId> Poset::greatest() const { return greatest_of(full_set()); }

std::optional<ElementId> Poset::try_join(ElementId x, ElementId y) const {
  return least_of(above_[check(x).value()] & above_[check(y).value()]);
}

std::optional<ElementId> Poset::try_meet(ElementId x, ElementId y) const {
  return greatest_of(below_[check(x).value()] & below_[check(y).value()]);
}

ElementSet Poset::make_set(std::span<const ElementId> xs) const {
  ElementSet s(size());
  for (auto x : xs) s.set(check(x).value());
  return s;
}

ElementSet Poset::make_set(std::initializer_list<std::string_view> names) const {
  ElementSet s(size());
  for (auto n : names) s.set(id(n).value());
  return s;
}

std::vector<OrderPair> Poset::strict_pairs() const {
  std::vector<OrderPair> out;
  for (std::size_t i = 0; i < size(); ++i)
    above_[i].for_each([&](std::size_t j) {
      if (i != j) out.emplace_back(ElementId(i), ElementId(j));
    });
  return out;
}

std::vector<OrderPair> Poset::cover_pairs() const {
  std::vector<OrderPair> out;
  for (std::size_t y = 0; y < size(); ++y)
    for (auto x : upper_covers_[y]) out.emplace_back(ElementId(y), x);
  return out;
}

// ---------------------------------------------------------------------------

Lattice::Lattice(Poset p) : poset_(std::move(p)) {
  const std::size_t n = poset_.size();
  if (n == 0) throw PreconditionError("a lattice must have at least one element");
  join_.resize(n * n);
  meet_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto jn = poset_.try_join(ElementId(i), ElementId(j));
      auto mt = poset_.try_meet(ElementId(i), ElementId(j));
      if (!jn || !mt)
        throw PreconditionError("not a lattice: '" + poset_.name(ElementId(i)) + "' and '" +
                                poset_.name(ElementId(j)) + "' have no " + (jn ? "meet" : "join"));
      join_[i * n + j] = join_[j * n + i] = *jn;
      meet_[i * n + j] = meet_[j * n + i] = *mt;
    }
  }
  bottom_ = *poset_.least();
  top_ = *poset_.greatest();
}

ElementId Lattice::join_of(const ElementSet& xs) const {
  ElementId acc = bottom_;
  xs.for_each([&](std::size_t i) { acc = join(acc, ElementId(i)); });
  return acc;
}

ElementId Lattice::join_of(std::span<const ElementId> xs) const {
  ElementId acc = bottom_;
  for (auto x : xs) acc = join(acc, x);
  return acc;
}

ElementId Lattice::meet_of(const ElementSet& xs) const {
  ElementId acc = top_;
  xs.for_each([&](std::size_t i) { acc = meet(acc, ElementId(i)); });
  return acc;
}

// ---------------------------------------------------------------------------

bool is_lattice(const Poset& p) {
  if (p.empty()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (!p.try_join(ElementId(i), ElementId(j)) || !p.try_meet(ElementId(i), ElementId(j))) return false;
  return true;
}

const std::vector<ElementId>& lower_covers(const Poset& p, ElementId x) { return p.lower_covers(x); }

std::vector<ElementId> atoms(const Poset& p) {
  auto zero = p.least();
  if (!zero) return {};
  return p.upper_covers(*zero);
}

bool is_atomistic(const Lattice& l) {
  const auto as = atoms(l.poset());
  for (auto x : l.poset().elements()) {
    ElementId acc = l.bottom();
    for (auto a : as)
      if (l.leq(a, x)) acc = l.join(acc, a);
    if (acc != x) return false;
  }
  return true;
}

ElementId join(const Poset& p, ElementId x, ElementId y) {
  if (auto j = p.try_join(x, y)) return *j;
  throw PreconditionError("'" + p.name(x) + "' and '" + p.name(y) + "' have no join");
}

ElementId meet(const Poset& p, ElementId x, ElementId y) {
  if (auto m = p.try_meet(x, y)) return *m;
  throw PreconditionError("'" + p.name(x) + "' and '" + p.name(y) + "' have no meet");
}

std::optional<ElementId> least_above(const Poset& p, const ElementSet& f, ElementId x) {
  return p.least_of(f & p.up_set(x));
}

bool is_order_embedding(const Poset& source, const Poset& target, std::span<const ElementId> map) {
  if (map.size() != source.size()) return false;
  for (auto y : map)
    if (y.value() >= target.size()) return false;
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j)
      if (source.leq(ElementId(i), ElementId(j)) != target.leq(map[i], map[j])) return false;
  return true;
}

bool is_lower_embedding(const Poset& source, const Poset& target, std::span<const ElementId> map) {
  if (!is_order_embedding(source, target, map)) return false;
  return is_lower_subset(target, target.make_set(map));
}

bool is_strong_amalgam(const Poset& p, const ElementSet& a, const ElementSet& b, const ElementSet& i) {
  if ((a | b) != p.full_set()) return false;
  if ((a & b) != i) return false;
  bool ok = true;
  a.for_each([&](std::size_t ai) {
    b.for_each([&](std::size_t bi) {
      if (!ok) return;
      const ElementId x(ai), y(bi);
      // x <= y iff some w in I has x <= w <= y; and dually.
      const bool up_witness = (p.up_set(x) & p.down_set(y)).intersects(i);
      const bool down_witness = (p.down_set(x) & p.up_set(y)).intersects(i);
      if (p.leq(x, y) != up_witness || p.leq(y, x) != down_witness) ok = false;
    });
  });
  return ok;
}

Poset product(const Poset& p, const Poset& q) {
  std::vector<std::string> names;
  names.reserve(p.size() * q.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      names.push_back("(" + p.name(ElementId(i)) + "," + q.name(ElementId(j)) + ")");
  std::vector<OrderPair> gens;
  const std::size_t m = q.size();
  for (auto [a, b] : p.cover_pairs())
    for (std::size_t j = 0; j < m; ++j)
      gens.emplace_back(ElementId(a.value() * m + j), ElementId(b.value() * m + j));
  for (auto [a, b] : q.cover_pairs())
    for (std::size_t i = 0; i < p.size(); ++i)
      gens.emplace_back(ElementId(i * m + a.value()), ElementId(i * m + b.value()));
  return Poset::from_relation(std::move(names), gens);
}

ElementId product_id(const Poset& p, const Poset& q, ElementId a, ElementId b) {
  return ElementId(p.check(a).value() * q.size() + q.check(b).value());
}

Poset dual(const Poset& p) {
  std::vector<OrderPair> gens;
  for (auto [a, b] : p.cover_pairs()) gens.emplace_back(b, a);
  return Poset::from_relation(p.names(), gens);
}

Poset induced(const Poset& p, const ElementSet& x, ElementMap* embedding) {
  ElementMap ids;
  x.for_each([&](std::size_t i) { ids.emplace_back(i); });
  std::vector<std::string> names;
  for (auto e : ids) names.push_back(p.name(e));
  std::vector<OrderPair> gens;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (i != j && p.leq(ids[i], ids[j])) gens.emplace_back(ElementId(i), ElementId(j));
  if (embedding) *embedding = ids;
  return Poset::from_relation(std::move(names), gens);
}

ElementSet down_set(const Poset& p, ElementId x) { return p.down_set(x); }

bool is_lower_subset(const Poset& p, const ElementSet& x) {
  bool ok = true;
  x.for_each([&](std::size_t i) {
    if (ok && !p.down_set(ElementId(i)).is_subset_of(x)) ok = false;
  });
  return ok;
}

bool is_upward_directed(const Poset& p, const ElementSet& x) {
  bool ok = true;
  x.for_each([&](std::size_t i) {
    x.for_each([&](std::size_t j) {
      if (ok && j > i && !(p.up_set(ElementId(i)) & p.up_set(ElementId(j))).intersects(x)) ok = false;
    });
  });
  return ok;
}

bool is_ideal(const Poset& p, const ElementSet& x) {
  return x.any() && is_lower_subset(p, x) && is_upward_directed(p, x);
}

bool is_cofinal(const Poset& p, const ElementSet& x) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p.up_set(ElementId(i)).intersects(x)) return false;
  return true;
}

bool is_chain(const Poset& p, const ElementSet& x) {
  bool ok = true;
  x.for_each([&](std::size_t i) {
    if (ok) {
      ElementSet comparable = p.up_set(ElementId(i)) | p.down_set(ElementId(i));
      if (!x.is_subset_of(comparable)) ok = false;
    }
  });
  return ok;
}

bool is_meet_subsemilattice(const Lattice& l, const ElementSet& x) {
  bool ok = true;
  x.for_each([&](std::size_t i) {
    x.for_each([&](std::size_t j) {
      if (ok && j > i && !x.test(l.meet(ElementId(i), ElementId(j)).value())) ok = false;
    });
  });
  return ok;
}

namespace {

bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj, std::vector<std::size_t>& match_right,
             std::vector<char>& seen) {
  for (auto v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = 1;
    if (match_right[v] == Bitset::npos || augment(match_right[v], adj, match_right, seen)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t width(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : p.strict_pairs()) adj[a.value()].push_back(b.value());
  std::vector<std::size_t> match_right(n, Bitset::npos);
  std::size_t matching = 0;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    if (augment(u, adj, match_right, seen)) ++matching;
  }
  return n - matching;
}

Poset chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<OrderPair> gens;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i) gens.emplace_back(ElementId(i - 1), ElementId(i));
  }
  return Poset::from_relation(std::move(names), gens);
}

}  // namespace ladder
