#pragma once

// Brute-force reference implementations. They use only leq() and element
// lists, never the library's tables, so they can check them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ladder/poset.hpp"

namespace oracle {

using ladder::ElementId;
using ladder::Poset;

inline std::vector<ElementId> all(const Poset& p) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.emplace_back(i);
  return out;
}

inline std::optional<ElementId> lub(const Poset& p, ElementId x, ElementId y) {
  std::optional<ElementId> best;
  for (auto z : all(p)) {
    if (!p.leq(x, z) || !p.leq(y, z)) continue;
    bool least = true;
    for (auto w : all(p))
      if (p.leq(x, w) && p.leq(y, w) && !p.leq(z, w)) least = false;
    if (least) best = z;
  }
  return best;
}

inline std::optional<ElementId> glb(const Poset& p, ElementId x, ElementId y) {
  std::optional<ElementId> best;
  for (auto z : all(p)) {
    if (!p.leq(z, x) || !p.leq(z, y)) continue;
    bool greatest = true;
    for (auto w : all(p))
      if (p.leq(w, x) && p.leq(w, y) && !p.leq(w, z)) greatest = false;
    if (greatest) best = z;
  }
  return best;
}

inline std::optional<ElementId> lub_of(const Poset& p, const std::vector<ElementId>& xs) {
  std::optional<ElementId> best;
  for (auto z : all(p)) {
    if (!std::all_of(xs.begin(), xs.end(), [&](ElementId x) { return p.leq(x, z); })) continue;
    bool least = true;
    for (auto w : all(p))
      if (std::all_of(xs.begin(), xs.end(), [&](ElementId x) { return p.leq(x, w); }) && !p.leq(z, w)) least = false;
    if (least) best = z;
  }
  return best;
}

inline std::vector<ElementId> lower_covers(const Poset& p, ElementId y) {
  std::vector<ElementId> out;
  for (auto x : all(p)) {
    if (x == y || !p.leq(x, y)) continue;
    bool cover = true;
    for (auto z : all(p))
      if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) cover = false;
    if (cover) out.push_back(x);
  }
  return out;
}

// Tuple form: breadth <= n iff for all x_0..x_n, y_0..y_n with x_i <= y_j for
// i != j some x_i <= y_i. Exhaustive over all (n+1)-tuples.
inline bool tuple_breadth_at_most(const Poset& p, std::size_t n) {
  const std::size_t k = n + 1, s = p.size();
  std::vector<std::size_t> x(k, 0), y(k, 0);
  std::function<bool(std::size_t)> fill_y;
  std::function<bool(std::size_t)> fill_x = [&](std::size_t i) -> bool {
    if (i == k) return fill_y(0);
    for (x[i] = 0; x[i] < s; ++x[i])
      if (!fill_x(i + 1)) return false;
    return true;
  };
  fill_y = [&](std::size_t j) -> bool {
    if (j == k) {
      for (std::size_t i = 0; i < k; ++i)
        if (p.leq(ElementId(x[i]), ElementId(y[i]))) return true;
      return false;  // a violating pair of tuples
    }
    for (y[j] = 0; y[j] < s; ++y[j]) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i)
        if (i != j && !p.leq(ElementId(x[i]), ElementId(y[j]))) ok = false;
      if (!ok) continue;
      if (!fill_y(j + 1)) return false;
    }
    return true;
  };
  return fill_x(0);
}

inline std::size_t tuple_breadth(const Poset& p) {
  std::size_t n = 1;
  while (!tuple_breadth_at_most(p, n)) ++n;
  return n;
}

// Join form, lattices only: breadth <= n iff among any n+1 elements one lies
// below the join of the others.
inline bool join_breadth_at_most(const Poset& p, std::size_t n) {
  const std::size_t k = n + 1, s = p.size();
  if (k > s) return true;
  std::vector<std::size_t> pick(k);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t from) -> bool {
    if (i == k) {
      for (std::size_t a = 0; a < k; ++a) {
        std::vector<ElementId> rest;
        for (std::size_t b = 0; b < k; ++b)
          if (b != a) rest.emplace_back(pick[b]);
        const auto j = lub_of(p, rest);
        if (j && p.leq(ElementId(pick[a]), *j)) return true;
      }
      return false;
    }
    for (std::size_t v = from; v < s; ++v) {
      pick[i] = v;
      if (!rec(i + 1, v + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

inline std::size_t join_breadth(const Poset& p) {
  std::size_t n = 1;
  while (!join_breadth_at_most(p, n)) ++n;
  return n;
}

// Largest antichain by subset enumeration (small posets only).
inline std::size_t width(const Poset& p) {
  const std::size_t s = p.size();
  std::size_t best = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << s); ++m) {
    bool anti = true;
    for (std::size_t i = 0; i < s && anti; ++i)
      for (std::size_t j = i + 1; j < s && anti; ++j)
        if ((m >> i & 1) && (m >> j & 1) && p.comparable(ElementId(i), ElementId(j))) anti = false;
    if (anti) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(m)));
  }
  return best;
}

}  // namespace oracle
