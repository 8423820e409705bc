#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ladder/normed.hpp"
#include "ladder/poset.hpp"

namespace ladder::fixtures {

/// Chain 0 < 1 < ... < n-1.
Lattice chain_lattice(std::size_t n);
/// The diamond 0 < a, b, c < 1.
Lattice m3();
/// The pentagon 0 < a < c < 1, 0 < b < 1.
Lattice n5();
/// Powerset of {0..k-1} under containment; elements in bitmask order, named
/// like "{0,2}".
Lattice boolean(std::size_t k);

/// Name of a subset of small integers, e.g. "{}" or "{0,1}".
std::string set_name(std::uint64_t mask);

/// Lattice of a family of subsets ordered by containment. The family must be
/// closed under union and contain the empty set when `add_empty` is false.
Lattice set_lattice(std::span<const std::uint64_t> family);
/// Union-closure of `generators` plus the empty set.
std::vector<std::uint64_t> union_closure(std::span<const std::uint64_t> generators);

/// Powerset of {0,1} normed by {} -> 0, {0} -> 1, {1} -> 2, {0,1} -> 2.
NormedLattice k0_standard();
/// Powerset of {0,1} normed by {} -> 0 and everything else -> 1.
NormedLattice k0_renormed();
/// Two-element chain 0 < a normed 0, 1.
NormedLattice two_chain();
/// Chain of n elements normed by position.
NormedLattice normed_chain(std::size_t n);

/// Random lattice: union-closure of random subsets of a small ground set,
/// retried until it has between 2 and `max_size` elements.
Lattice random_lattice(std::mt19937_64& rng, std::size_t max_size, std::size_t ground = 5);
/// Random lattice normed from a shuffled enumeration.
NormedLattice random_normed(std::mt19937_64& rng, std::size_t max_size, std::size_t ground = 5);

}  // namespace ladder::fixtures
