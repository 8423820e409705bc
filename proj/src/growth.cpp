#include "ladder/growth.hpp"

#include <algorithm>
#include <set>

#include "ladder/forcing.hpp"
#include "ladder/ladders.hpp"
#include "ladder/normed.hpp"

namespace ladder {

namespace {

std::string fresh(const std::set<std::string>& used, std::string name) {
  while (used.count(name)) name += "'";
  return name;
}

// Checks shared by both towers, for the stage just appended.
void check_stage(GrowthTrace& t, std::size_t k) {
  const std::size_t i = t.stages.size() - 1;
  const Lattice& cur = t.stages[i];
  const std::string tag = "stage " + std::to_string(i);
  t.atomistic.push_back(is_atomistic(cur));
  t.checks.add(tag + " is a " + std::to_string(k) + "-ladder", is_k_ladder(cur, k));
  t.checks.add(tag + " has breadth at most " + std::to_string(k), breadth_at_most(cur.poset(), k));
  if (i == 0) return;
  const Lattice& prev = t.stages[i - 1];
  const Poset& p = cur.poset();
  bool same = prev.size() < cur.size();
  for (std::size_t a = 0; a < prev.size() && same; ++a)
    for (std::size_t b = 0; b < prev.size() && same; ++b)
      same = prev.leq(ElementId(a), ElementId(b)) == cur.leq(ElementId(a), ElementId(b));
  ElementSet old = p.empty_set();
  for (std::size_t a = 0; a < prev.size(); ++a) old.set(a);
  t.checks.add(tag + " strictly extends stage " + std::to_string(i - 1), same);
  t.checks.add("stage " + std::to_string(i - 1) + " is an ideal of " + tag, is_ideal(p, old));
}

}  // namespace

Lattice two_ladder_step(const Lattice& f, std::size_t stage) {
  const Poset& p = f.poset();
  const std::size_t n = p.size();
  std::set<std::string> used(p.names().begin(), p.names().end());
  std::vector<std::string> names = p.names();
  names.push_back(fresh(used, "p" + std::to_string(stage)));
  names.push_back(fresh(used, "1_" + std::to_string(stage)));
  std::vector<OrderPair> gens;
  for (auto pr : p.cover_pairs()) gens.push_back(pr);
  const ElementId atom(n), top(n + 1);
  gens.emplace_back(f.bottom(), atom);
  gens.emplace_back(atom, top);
  gens.emplace_back(f.top(), top);
  return Lattice(Poset::from_relation(std::move(names), gens));
}

GrowthTrace grow_2ladder(std::size_t stages, const std::optional<Lattice>& seed) {
  GrowthTrace t;
  t.checks = Report("2-ladder tower");
  Lattice cur = seed ? *seed : Lattice(chain(1));
  if (!is_k_ladder(cur, 2)) throw PreconditionError("grow_2ladder: the seed is not a 2-ladder");
  t.stages.push_back(cur);
  t.step_kind.push_back("seed");
  check_stage(t, 2);
  for (std::size_t i = 1; i <= stages; ++i) {
    t.stages.push_back(two_ladder_step(t.stages.back(), i));
    t.step_kind.push_back("atom and top");
    check_stage(t, 2);
  }
  return t;
}

SkeletonExtension extend_with_skeleton(const Lattice& k, const ElementSet& f, const std::string& copy_prefix) {
  const Poset& p = k.poset();
  if (f.size() != p.size() || f.none()) throw PreconditionError("extend_with_skeleton: F must be a nonempty subset of K");
  if (!is_meet_subsemilattice(k, f)) throw PreconditionError("extend_with_skeleton: F is not meet-closed");
  if (!is_cofinal(p, f)) throw PreconditionError("extend_with_skeleton: F is not cofinal");
  if (!is_k_ladder_subset(p, f, 2)) throw PreconditionError("extend_with_skeleton: F is not a 2-ladder");

  const std::size_t n = p.size();
  SkeletonExtension out;
  out.members = [&] {
    std::vector<ElementId> m;
    f.for_each([&](std::size_t i) { m.emplace_back(i); });
    return m;
  }();
  std::set<std::string> used(p.names().begin(), p.names().end());
  std::vector<std::string> names = p.names();
  for (std::size_t i = 0; i < out.members.size(); ++i) {
    out.copy.emplace_back(n + i);
    std::string nm = fresh(used, copy_prefix + "(" + p.name(out.members[i]) + ")");
    used.insert(nm);
    names.push_back(std::move(nm));
  }
  std::vector<OrderPair> gens;
  for (auto pr : p.cover_pairs()) gens.push_back(pr);
  for (std::size_t i = 0; i < out.members.size(); ++i) {
    gens.emplace_back(out.members[i], out.copy[i]);  // x < f(x)
    for (std::size_t j = 0; j < out.members.size(); ++j)
      if (i != j && p.leq(out.members[i], out.members[j])) gens.emplace_back(out.copy[i], out.copy[j]);
  }
  Poset order = Poset::from_relation(std::move(names), gens);
  // the generated order must be exactly K, F* and x < f(y) iff x <= y
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < order.size(); ++b) {
      bool want;
      if (a < n && b < n) want = p.leq(ElementId(a), ElementId(b));
      else if (a >= n && b < n) want = false;
      else if (a < n) want = p.leq(ElementId(a), out.members[b - n]);
      else want = p.leq(out.members[a - n], out.members[b - n]);
      if (order.leq(ElementId(a), ElementId(b)) != want)
        throw VerificationError("extend_with_skeleton: order mismatch at (" + order.name(ElementId(a)) + ", " +
                                order.name(ElementId(b)) + ")");
    }
  try {
    out.lattice = Lattice(std::move(order));
  } catch (const PreconditionError& e) {
    throw VerificationError(std::string("extend_with_skeleton: ") + e.what());
  }

  const Poset& q = out.lattice.poset();
  Report& r = out.checks;
  r = Report("K + F*");
  r.add("result is a lattice", true);
  r.add("result is a 3-ladder", is_k_ladder(out.lattice, 3));
  ElementSet kset = q.empty_set();
  for (std::size_t a = 0; a < n; ++a) kset.set(a);
  r.add("K is an ideal", is_ideal(q, kset));
  const ElementId zero_f = out.members.front();  // least member: F is meet-closed
  const ElementId f_zero = out.copy.front();
  std::vector<ElementId> new_atoms;
  for (auto a : atoms(q))
    if (a.value() >= n) new_atoms.push_back(a);
  const bool zero_in_f = zero_f == k.bottom();
  r.add("the only new atom is f(0_F)",
        zero_in_f ? new_atoms == std::vector<ElementId>{f_zero} : new_atoms.empty(),
        zero_in_f ? "" : "0_K is not in F, so no new atoms");
  bool covers = true;
  std::string detail;
  const Poset sub = induced(p, f);
  for (std::size_t i = 0; i < out.members.size() && covers; ++i) {
    std::vector<ElementId> want{out.members[i]};
    for (auto y : sub.lower_covers(ElementId(i))) want.push_back(out.copy[y.value()]);
    std::vector<ElementId> got = q.lower_covers(out.copy[i]);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) {
      covers = false;
      detail = q.name(out.copy[i]);
    }
  }
  r.add("f(x) covers x and the copies of its lower covers in F", covers, detail);
  if (!r.ok()) throw VerificationError("extend_with_skeleton: " + r.first_failure());
  return out;
}

GrowthTrace grow_3ladder(std::size_t stages, const std::optional<Lattice>& seed) {
  GrowthTrace t;
  t.checks = Report("3-ladder tower");
  Lattice first = seed ? *seed : Lattice(chain(1));
  if (!is_k_ladder(first, 3)) throw PreconditionError("grow_3ladder: the seed is not a 3-ladder");
  t.stages.push_back(std::move(first));
  t.step_kind.push_back("seed");
  check_stage(t, 3);
  for (std::size_t i = 1; i <= stages; ++i) {
    const Lattice& cur = t.stages.back();
    const auto order = cur.poset().elements();
    const NormedLattice k = norm_from_enumeration(cur, order);
    const GenericFilter g = generic_filter(k, full_dense_family(k), cur.poset().empty_set());
    const ElementSet skeleton = skeleton_from_generic(k, g);
    SkeletonExtension ext = extend_with_skeleton(cur, skeleton, "f" + std::to_string(i));
    t.checks.merge(ext.checks, "stage " + std::to_string(i) + ": ");
    t.stages.push_back(std::move(ext.lattice));
    t.step_kind.push_back("skeleton copy");
    check_stage(t, 3);
  }
  return t;
}

}  // namespace ladder
