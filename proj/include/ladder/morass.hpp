#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ladder/amalgam.hpp"
#include "ladder/normed.hpp"
#include "ladder/report.hpp"

namespace ladder {

/// An order-embedding theta_a -> theta_b, stored as its values.
using OrdinalMap = std::vector<Ordinal>;

/// Levels 0..N of a simplified (kappa,1)-morass. Fields are public so that
/// tests can corrupt a truncation and watch the verifiers object.
struct MorassTruncation {
  std::vector<Ordinal> theta;  // N + 1 entries
  std::vector<Ordinal> delta;  // N entries
  std::map<std::pair<std::size_t, std::size_t>, std::vector<OrdinalMap>> maps;

  std::size_t top_level() const { return theta.size() - 1; }
  const std::vector<OrdinalMap>& family(std::size_t a, std::size_t b) const;
};

OrdinalMap identity_map(Ordinal theta_a);
/// tau(delta, theta, .) on theta.
OrdinalMap displacement(Ordinal delta, Ordinal theta);
/// (g o h)(xi) = g(h(xi)).
OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& h);

/// theta_{i+1} = theta_i + (theta_i - delta_i); maps(i, i+1) = {id, f_i}
/// and longer families are all compositions, without repeats. The usual
/// truncation starts at theta_0 = 2; `theta0` exists for the alternative base
/// of the ladder construction. PreconditionError unless 0 < delta_i < theta_i.
MorassTruncation build_truncated_morass(const std::vector<Ordinal>& deltas, Ordinal theta0 = 2);

/// (P0)-(P5) with witnesses. (P1) holds trivially for finite families and
/// (P4) is vacuous without limit levels; both are reported as such.
Report verify_axioms(const MorassTruncation& m);

/// Whenever f0(xi0) = f1(xi1) for f0, f1 in one family: xi0 = xi1 and f0, f1
/// agree below xi0.
Report check_mor2tree(const MorassTruncation& m);

enum class MorassBase {
  renormed,  // P({0,1}) with norms 0,1,1,1: range 2
  range3,    // P({0,1}) with norms 0,1,2,2: range 3, used with theta_0 = 3
};

MorassBase parse_base(const std::string& name);
NormedLattice base_lattice(MorassBase base);
/// theta_0 matching the base's norm range.
Ordinal base_theta0(MorassBase base);

/// Cofinal chain of K whose least element has norm delta.
using ChainPolicy = std::function<std::vector<ElementId>(const NormedLattice&, Ordinal)>;

/// The first-created element of level delta, then repeatedly its first
/// upper cover (in creation order) until the top.
std::vector<ElementId> default_chain_policy(const NormedLattice& k, Ordinal delta);

struct LadderSystem {
  MorassTruncation morass;
  MorassBase base = MorassBase::renormed;
  std::vector<NormedLattice> levels;
  std::vector<AmalgamResult> steps;  // steps[a] builds levels[a + 1]
  /// stars[(a,b)][i] is the star of morass.maps[(a,b)][i].
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ElementMap>> stars;
  Report checks;

  const ElementMap& star(std::size_t a, std::size_t b, const OrdinalMap& f) const;
};

/// K_0 from `base`, K_{a+1} = amalgamate(K_a, delta_a, policy(K_a, delta_a)),
/// stars of longer maps by composition through the last level. Every
/// decomposition of a map is checked to give the same star, including the
/// ambiguous case f = f_a o h = h where rng h* must lie in I_a. Conditions
/// (K0)-(K4) are recorded in `checks`; nothing is thrown for them.
LadderSystem morass_to_ladder(const MorassTruncation& m, MorassBase base,
                              const ChainPolicy& policy = default_chain_policy);

/// (K0)-(K4) on an existing system.
Report verify_ladder_system(const LadderSystem& s);

/// A thin directed diagram: at most one arrow per ordered pair of indices,
/// each with the ordinal map it transports norms along.
struct Diagram {
  struct Arrow {
    std::size_t from = 0, to = 0;
    ElementMap map;
    OrdinalMap norm_map;
  };
  std::vector<NormedLattice> objects;
  std::vector<Arrow> arrows;
};

struct DirectLimit {
  NormedLattice colimit;
  std::size_t top = 0;
  std::vector<ElementMap> cocone;  // cocone[i]: objects[i] -> colimit
  Report checks;
};

/// The index order must be transitive (arrows for every composable pair),
/// antisymmetric and have a top (PreconditionError otherwise). The colimit is
/// the top object; every square must commute and every arrow must be a lower
/// embedding transporting norms (VerificationError naming a witness).
DirectLimit direct_limit(const Diagram& d);

/// Indices (a, f) with f in maps(a, N), plus (N, id); (a,f) < (b,g) when
/// a < b and f = g o h for some h in maps(a, b), whose star is the arrow.
Diagram limit_diagram(const LadderSystem& s);

}  // namespace ladder
