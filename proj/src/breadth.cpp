#include "ladder/poset.hpp"

namespace ladder {

namespace {

// A violation of size k is a family (x_i, y_i), i < k, with x_i <= y_j for
// all i != j and x_i </= y_i for every i. The x_i are then pairwise
// incomparable (x_i <= x_j would give x_i <= y_i), so the x_i are distinct
// and k is bounded by the width. Pairs are added with increasing x to break
// the symmetry of the family.
class ViolationSearch {
 public:
  explicit ViolationSearch(const Poset& p) : p_(p) {}

  bool exists(std::size_t k) {
    if (k == 0) return true;
    return extend(k, p_.full_set(), p_.full_set(), 0);
  }

 private:
  bool extend(std::size_t remaining, const ElementSet& x_cand, const ElementSet& y_cand, std::size_t min_x) {
    if (remaining == 0) return true;
    bool found = false;
    for (std::size_t x = x_cand.find_first(); x != Bitset::npos && !found; x = x_cand.find_next(x)) {
      if (x < min_x) continue;
      // the remaining x's are drawn from candidates above x in index order
      ElementSet next_x = x_cand;
      ElementSet next_y_base = y_cand & p_.up_set(ElementId(x));
      ElementSet y_options = y_cand - p_.up_set(ElementId(x));
      for (std::size_t y = y_options.find_first(); y != Bitset::npos && !found; y = y_options.find_next(y)) {
        ElementSet nx = next_x & p_.down_set(ElementId(y));
        if (remaining > 1 && nx.count() < remaining - 1) continue;
        if (extend(remaining - 1, nx, next_y_base, x + 1)) found = true;
      }
    }
    return found;
  }

  const Poset& p_;
};

}  // namespace

bool breadth_at_most(const Poset& p, std::size_t n) {
  if (p.size() <= n) return true;
  if (width(p) <= n) return true;
  return !ViolationSearch(p).exists(n + 1);
}

std::size_t breadth(const Poset& p) {
  const std::size_t w = width(p);
  ViolationSearch search(p);
  std::size_t b = 1;
  while (b < w && search.exists(b + 1)) ++b;
  return b;
}

}  // namespace ladder
