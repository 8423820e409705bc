#include "ladder/counterexample.hpp"

#include <algorithm>

#include "ladder/ladders.hpp"

namespace ladder {

namespace {

struct NamedSet {
  std::string name;
  std::uint64_t mask;
};

}  // namespace

CounterexampleFixture build_counterexample(std::size_t depth) {
  if (depth < 1) throw PreconditionError("counterexample depth must be at least 1");
  if (depth > 15) throw PreconditionError("counterexample depth must be at most 15");
  const std::size_t n_blocks = depth;
  auto a = [](std::size_t n) { return std::uint64_t{1} << (3 * n); };
  auto b = [](std::size_t n) { return std::uint64_t{1} << (3 * n + 1); };
  auto c = [](std::size_t n) { return std::uint64_t{1} << (3 * n + 2); };
  auto s = [&](std::size_t n) { return std::uint64_t{1} << (3 * n_blocks + n); };

  std::vector<NamedSet> sets;
  std::uint64_t below = 0;  // D_n
  std::uint64_t specials = 0;
  for (std::size_t n = 0; n < n_blocks; ++n) {
    const auto idx = std::to_string(n);
    specials |= s(n);
    sets.push_back({"w" + idx, below});
    sets.push_back({"xy" + idx, below | a(n)});
    sets.push_back({"xz" + idx, below | b(n)});
    sets.push_back({"yz" + idx, below | c(n)});
    sets.push_back({"x" + idx, below | a(n) | b(n)});
    sets.push_back({"y" + idx, below | a(n) | c(n)});
    sets.push_back({"z" + idx, below | b(n) | c(n)});
    sets.push_back({"t" + idx, below | b(n) | c(n) | specials});
    below |= a(n) | b(n) | c(n);
  }
  sets.push_back({"x" + std::to_string(n_blocks), below});
  sets.push_back({"t" + std::to_string(n_blocks), below | specials});

  std::vector<std::string> names;
  std::vector<OrderPair> gens;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    names.push_back(sets[i].name);
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && (sets[i].mask & ~sets[j].mask) == 0) gens.emplace_back(ElementId(i), ElementId(j));
  }

  CounterexampleFixture fx;
  fx.depth = depth;
  fx.k_prime = Lattice(Poset::from_relation(std::move(names), gens));
  const Poset& p = fx.k_prime.poset();
  for (std::size_t n = 0; n <= n_blocks; ++n) {
    const auto idx = std::to_string(n);
    fx.x.push_back(p.id("x" + idx));
    fx.t.push_back(p.id("t" + idx));
    if (n == n_blocks) break;
    fx.y.push_back(p.id("y" + idx));
    fx.z.push_back(p.id("z" + idx));
    fx.xy.push_back(p.id("xy" + idx));
    fx.xz.push_back(p.id("xz" + idx));
    fx.yz.push_back(p.id("yz" + idx));
    fx.xyz.push_back(p.id("w" + idx));
  }
  fx.k = p.full_set() - p.make_set(fx.t);
  fx.f = p.make_set(fx.x) | p.make_set(fx.y) | p.make_set(fx.xy);

  const Report r = verify_counterexample(fx);
  if (!r.ok()) throw VerificationError("counterexample fixture: " + r.first_failure());
  return fx;
}

Report verify_counterexample(const CounterexampleFixture& fx) {
  Report r("counterexample fixture N=" + std::to_string(fx.depth));
  const Lattice& l = fx.k_prime;
  const Poset& p = l.poset();
  r.add("K' is a 3-ladder", is_k_ladder(l, 3));
  r.add("K is an ideal of K'", is_ideal(p, fx.k));
  r.add("F is contained in K", fx.f.is_subset_of(fx.k));
  r.add("F is a meet-subsemilattice of K", is_meet_subsemilattice(l, fx.f));
  ElementMap into_k;
  const Poset pk = induced(p, fx.k, &into_k);
  ElementSet f_in_k = pk.empty_set();
  for (std::size_t i = 0; i < into_k.size(); ++i)
    if (fx.f.test(into_k[i].value())) f_in_k.set(i);
  r.add("F is cofinal in K", is_cofinal(pk, f_in_k));
  r.add("F is a 2-ladder", is_k_ladder_subset(p, fx.f, 2));
  r.add("F has breadth at most 2", breadth_at_most(induced(p, fx.f), 2));
  r.add("t_N is the top of K'", fx.t.back() == l.top());
  r.add("x_N is the top of K", p.greatest_of(fx.k) == fx.x.back());
  for (std::size_t n = 0; n < fx.depth; ++n) {
    const auto idx = std::to_string(n);
    const ElementId x = fx.x[n], y = fx.y[n], z = fx.z[n];
    r.add("z_" + idx + " = t_" + idx + " ^ x_" + std::to_string(n + 1), l.meet(fx.t[n], fx.x[n + 1]) == z);
    r.add("x_" + idx + ", y_" + idx + ", z_" + idx + " pairwise incomparable",
          !p.comparable(x, y) && !p.comparable(x, z) && !p.comparable(y, z));
    const ElementId mxy = l.meet(x, y), mxz = l.meet(x, z), myz = l.meet(y, z);
    const ElementId triple = l.meet(mxy, z);
    r.add("pairwise meets of block " + idx + " are named as built",
          mxy == fx.xy[n] && mxz == fx.xz[n] && myz == fx.yz[n] && triple == fx.xyz[n]);
    r.add("pairwise meets of block " + idx + " are distinct", mxy != mxz && mxy != myz && mxz != myz);
    r.add("triple meet of block " + idx + " differs from every pairwise meet",
          triple != mxy && triple != mxz && triple != myz);
  }
  return r;
}

namespace {

class MeetClosure {
 public:
  explicit MeetClosure(const Lattice& l) : l_(l) {}

  ElementSet close(ElementSet s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      const auto members = s.indices();
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          const auto m = l_.meet(ElementId(members[i]), ElementId(members[j])).value();
          if (!s.test(m)) {
            s.set(m);
            changed = true;
          }
        }
    }
    return s;
  }

 private:
  const Lattice& l_;
};

ElementSet prefix_mask(std::size_t n, std::size_t upto) {
  ElementSet s(n);
  for (std::size_t i = 0; i < upto; ++i) s.set(i);
  return s;
}

}  // namespace

ExtensionSearchResult search_breadth2_extension(const CounterexampleFixture& fx, std::size_t cap,
                                                bool confirm_breadth) {
  const Lattice& l = fx.k_prime;
  const Poset& p = l.poset();
  const std::size_t n = p.size();
  const MeetClosure closure(l);
  ExtensionSearchResult out;
  out.witness_histogram.assign(fx.depth, 0);

  ElementSet constrained_t = p.empty_set();
  for (std::size_t j = 0; j < fx.depth; ++j) constrained_t.set(fx.t[j].value());

  auto visit = [&](const ElementSet& fp) {
    ++out.closed_sets;
    if (!fp.intersects(constrained_t)) return;
    ++out.candidates;
    if (fp.test(l.top().value())) ++out.cofinal_candidates;
    std::optional<std::size_t> witness;
    for (std::size_t b = 0; b < fx.depth && !witness; ++b) {
      if (!fp.test(fx.x[b].value()) || !fp.test(fx.y[b].value()) || !fp.test(fx.z[b].value())) continue;
      const ElementId mxy = l.meet(fx.x[b], fx.y[b]), mxz = l.meet(fx.x[b], fx.z[b]), myz = l.meet(fx.y[b], fx.z[b]);
      const ElementId triple = l.meet(mxy, fx.z[b]);
      if (triple != mxy && triple != mxz && triple != myz) witness = b;
    }
    if (witness) {
      ++out.witness_histogram[*witness];
      if (!out.first_witness)
        out.first_witness = std::vector<std::string>{p.name(fx.x[*witness]), p.name(fx.y[*witness]),
                                                     p.name(fx.z[*witness])};
    } else {
      ++out.escapes;
      if (!out.first_escape) {
        std::vector<std::string> members;
        fp.for_each([&](std::size_t i) { members.push_back(p.name(ElementId(i))); });
        out.first_escape = members;
      }
    }
    if (confirm_breadth && !breadth_at_most(induced(p, fp), 2)) ++out.breadth_confirmed;
  };

  // NextClosure over the closure operator A -> meet-closure(A u F).
  ElementSet current = closure.close(fx.f);
  visit(current);
  const ElementSet full = p.full_set();
  while (current != full) {
    if (out.closed_sets >= cap) return out;
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (current.test(i)) continue;
      const ElementSet prefix = prefix_mask(n, i);
      ElementSet seed = current & prefix;
      seed.set(i);
      ElementSet next = closure.close(seed | fx.f);
      if ((next & prefix) == (current & prefix)) {
        current = std::move(next);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    visit(current);
  }
  out.exhausted = true;
  return out;
}

}  // namespace ladder
