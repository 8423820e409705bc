#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ladder/poset.hpp"
#include "ladder/report.hpp"

namespace ladder {

/// Finite truncation K'_N of a 3-ladder K' with an ideal K and a cofinal
/// meet-subsemilattice F of K that is a 2-ladder, such that no
/// meet-subsemilattice of K' containing F and one of t_0..t_{N-1} has
/// breadth at most two.
///
/// Realization (as a lattice of sets, meets are intersections). Block n < N
/// owns atoms a_n, b_n, c_n, s_n; D_n is the union of the a, b, c atoms of
/// the blocks below n.
///
///     x_n = D_n + {a_n, b_n}      y_n = D_n + {a_n, c_n}   z_n = D_n + {b_n, c_n}
///     x_n ^ y_n = D_n + {a_n}     x_n ^ z_n = D_n + {b_n}  y_n ^ z_n = D_n + {c_n}
///     x_n ^ y_n ^ z_n = D_n       t_n = z_n + {s_0, ..., s_n}
///     x_N = D_N (top of K)        t_N = everything (top of K')
///
/// so t_n ^ x_{n+1} = z_n and the t's form a chain of two-cover elements.
/// The top t_N is the finite stand-in for "cofinal" and carries no
/// constraint; only t_0..t_{N-1} take part in the contradiction.
struct CounterexampleFixture {
  std::size_t depth = 0;
  Lattice k_prime;
  ElementSet k;  // K' minus {t_0, ..., t_N}
  ElementSet f;  // {x_n} u {y_n} u {x_n ^ y_n}
  std::vector<ElementId> x, y, z, t;  // x and t have depth + 1 entries
  std::vector<ElementId> xy, xz, yz, xyz;
};

/// N >= 1; throws PreconditionError otherwise. The result has passed
/// verify_counterexample.
CounterexampleFixture build_counterexample(std::size_t depth);

/// Every structural constraint of the fixture, checked on the lattice itself.
Report verify_counterexample(const CounterexampleFixture& fx);

struct ExtensionSearchResult {
  bool exhausted = false;         // false when the cap stopped the search
  std::size_t closed_sets = 0;    // meet-closed supersets of F visited
  std::size_t candidates = 0;     // ... that contain some t_j, j < N
  std::size_t cofinal_candidates = 0;
  std::size_t escapes = 0;        // candidates without a breadth-3 witness
  std::size_t breadth_confirmed = 0;  // candidates with brute-force breadth >= 3
  std::vector<std::size_t> witness_histogram;  // by block index
  std::optional<std::vector<std::string>> first_witness;  // {x_n, y_n, z_n}
  std::optional<std::vector<std::string>> first_escape;   // members of an escaping F'
};

/// Visits every meet-closed F' with F <= F' <= K' (NextClosure order) and, for
/// each one containing some t_j with j < N, looks for a block n with
/// {x_n, y_n, z_n} in F', whose triple meet differs from the three pairwise
/// meets. With `confirm_breadth` the brute-force breadth of F' is computed as
/// well. Stops after `cap` closed sets.
ExtensionSearchResult search_breadth2_extension(const CounterexampleFixture& fx, std::size_t cap = 1u << 22,
                                                bool confirm_breadth = true);

}  // namespace ladder
