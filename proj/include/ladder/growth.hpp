#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ladder/poset.hpp"
#include "ladder/report.hpp"

namespace ladder {

/// Finite prefix of a tower of lattices in which every stage is a proper ideal
/// of the next. Ids of a stage are kept by its successor.
struct GrowthTrace {
  std::vector<Lattice> stages;
  std::vector<std::string> step_kind;  // how stage i was obtained; "seed" for stage 0
  std::vector<bool> atomistic;
  Report checks;

  const Lattice& last() const { return stages.back(); }
};

/// One finite step of the 2-ladder tower: a fresh atom p (above 0 only) and a
/// fresh top above everything.
Lattice two_ladder_step(const Lattice& f, std::size_t stage);

/// `stages` applications of two_ladder_step to `seed` (default {0}). Every
/// stage is checked to be a 2-ladder of breadth at most 2 containing its
/// predecessor as an ideal. PreconditionError if the seed is not a 2-ladder.
GrowthTrace grow_2ladder(std::size_t stages, const std::optional<Lattice>& seed = std::nullopt);

struct SkeletonExtension {
  Lattice lattice;              // K followed by the copy F*
  std::vector<ElementId> members;  // F, increasing
  std::vector<ElementId> copy;     // copy[i] = f(members[i])
  Report checks;
};

/// K + F* where x < f(y) iff x <= y, for x in K and y in F. F must be a
/// cofinal meet-subsemilattice of K and a 2-ladder (PreconditionError
/// otherwise). The result is verified to be a 3-ladder containing K as an
/// ideal, whose new atoms are at most f(0_F), and where each f(x) covers
/// exactly x and the copies of the lower covers of x in F.
SkeletonExtension extend_with_skeleton(const Lattice& k, const ElementSet& f, const std::string& copy_prefix = "f");

/// Starting from `seed` (default {0}, must be a 3-ladder): enumeration norm
/// in element order, skeleton from a generic filter for all Sk_a, then
/// extend_with_skeleton, `stages` times.
GrowthTrace grow_3ladder(std::size_t stages, const std::optional<Lattice>& seed = std::nullopt);

}  // namespace ladder
