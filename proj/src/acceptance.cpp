#include "ladder/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "ladder/amalgam.hpp"
#include "ladder/catalogue.hpp"
#include "ladder/closure.hpp"
#include "ladder/counterexample.hpp"
#include "ladder/error.hpp"
#include "ladder/fixtures.hpp"
#include "ladder/forcing.hpp"
#include "ladder/growth.hpp"
#include "ladder/io.hpp"
#include "ladder/ladders.hpp"
#include "ladder/morass.hpp"
#include "ladder/normed.hpp"

namespace ladder::acceptance {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

using Body = std::function<Outcome()>;

CriterionResult run_one(int id, std::string name, double limit, const Body& body) {
  CriterionResult r{id, std::move(name), false, 0, limit, {}};
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.detail = o.detail;
  if (!o.failures.empty()) {
    r.detail += r.detail.empty() ? "" : "; ";
    r.detail += "first failure: " + o.failures.front();
    if (o.failures.size() > 1) r.detail += " (+" + std::to_string(o.failures.size() - 1) + " more)";
  }
  if (r.seconds > limit) r.detail += "; over the time limit";
  r.passed = o.ok && r.seconds <= limit;
  return r;
}

// Normed lattices used by the projection and round-trip criteria.
std::vector<std::pair<std::string, NormedLattice>> normed_fixtures() {
  std::vector<std::pair<std::string, NormedLattice>> out;
  out.emplace_back("k0", fixtures::k0_standard());
  out.emplace_back("k0-renormed", fixtures::k0_renormed());
  out.emplace_back("two-chain", fixtures::two_chain());
  for (std::size_t n = 3; n <= 6; ++n) out.emplace_back("normed-chain" + std::to_string(n), fixtures::normed_chain(n));
  for (auto [name, l] : {std::pair{"m3", fixtures::m3()}, {"n5", fixtures::n5()}, {"b3", fixtures::boolean(3)}}) {
    const auto order = l.poset().elements();
    out.emplace_back(std::string(name) + " (element order)", norm_from_enumeration(l, order));
    auto rev = order;
    std::reverse(rev.begin() + 1, rev.end());
    out.emplace_back(std::string(name) + " (reversed order)", norm_from_enumeration(l, rev));
  }
  out.emplace_back("2-chain amalgam", amalgamate({fixtures::two_chain(), 1, {ElementId(1)}}).kbar);
  {
    const auto k0 = fixtures::k0_standard();
    out.emplace_back("K0/delta=1 amalgam", amalgamate({k0, 1, {k0.poset().id("{0}"), k0.poset().id("{0,1}")}}).kbar);
  }
  const MorassTruncation m = build_truncated_morass({1, 2});
  const LadderSystem s = morass_to_ladder(m, MorassBase::renormed);
  for (std::size_t a = 0; a < s.levels.size(); ++a) out.emplace_back("morass [1,2] K_" + std::to_string(a), s.levels[a]);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) out.emplace_back("random " + std::to_string(i), fixtures::random_normed(rng, 24, 5));
  return out;
}

// 1
Outcome breadth_fixtures() {
  Outcome o;
  const Lattice m3 = fixtures::m3();
  o.require(breadth(m3.poset()) == 2, "breadth(M3) = " + std::to_string(breadth(m3.poset())));
  o.require(!is_k_ladder(m3, 2), "M3 is reported to be a 2-ladder");
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 12; ++n, ++checked)
    o.require(breadth(chain(n)) == 1, "breadth of the " + std::to_string(n) + "-chain is not 1");
  o.detail = "breadth(M3)=2, M3 not a 2-ladder, " + std::to_string(checked) + " chains of breadth 1";
  return o;
}

// 2
Outcome proj2meet() {
  Outcome o;
  std::size_t fixtures_checked = 0, pairs = 0;
  for (const auto& [name, k] : normed_fixtures()) {
    o.require(k.size() <= 50, name + " has more than 50 elements");
    const Lattice& l = k.lattice();
    std::size_t bad1 = 0, bad2 = 0;
    for (auto x : k.poset().elements())
      for (auto y : k.poset().elements()) {
        ++pairs;
        if (l.leq(x, y) && k.norm(k.projection(y, k.norm(x))) != k.norm(x)) ++bad1;
        const ElementId p = k.projection(x, k.norm(y));
        if (l.leq(p, y) != (l.meet(x, y) == p)) ++bad2;
      }
    o.require(bad1 == 0, name + ": " + std::to_string(bad1) + " violations of the first clause");
    o.require(bad2 == 0, name + ": " + std::to_string(bad2) + " violations of the second clause");
    ++fixtures_checked;
  }
  o.require(fixtures_checked >= 10, "fewer than 10 fixtures");
  o.detail = std::to_string(fixtures_checked) + " fixtures, " + std::to_string(pairs) + " pairs";
  return o;
}

// 3
Outcome skeleton_pipeline(std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::size_t largest = 0;
  for (int i = 0; i < 100; ++i) {
    const NormedLattice k = fixtures::random_normed(rng, 20, 5);
    largest = std::max(largest, k.size());
    const std::string tag = "lattice " + std::to_string(i);
    o.require(k.size() <= 20, tag + " exceeds 20 elements");
    const GenericFilter g = generic_filter(k, full_dense_family(k), k.poset().empty_set());
    const ElementSet s = skeleton_from_generic(k, g);
    o.require(is_skeleton(k, s), tag + ": not a skeleton");
    o.require(is_meet_subsemilattice(k.lattice(), s), tag + ": not meet-closed");
    o.require(max_lower_covers_within(k.poset(), s) <= 2, tag + ": an element has 3 lower covers in F");
  }
  o.detail = "100 lattices, seed " + std::to_string(seed) + ", up to " + std::to_string(largest) + " elements";
  return o;
}

// 4
Outcome amalgamation() {
  Outcome o;
  std::vector<std::pair<std::string, AmalgamInput>> inputs;
  inputs.emplace_back("2-chain", AmalgamInput{fixtures::two_chain(), 1, {ElementId(1)}});
  {
    const auto k0 = fixtures::k0_standard();
    const Poset& p = k0.poset();
    inputs.emplace_back("K0/delta=1", AmalgamInput{k0, 1, {p.id("{0}"), p.id("{0,1}")}});
    inputs.emplace_back("K0/delta=2", AmalgamInput{k0, 2, {p.id("{1}"), p.id("{0,1}")}});
    inputs.emplace_back("K0/delta=2, top only", AmalgamInput{k0, 2, {p.id("{0,1}")}});
    const auto kr = fixtures::k0_renormed();
    inputs.emplace_back("K0 renormed, {0}", AmalgamInput{kr, 1, {p.id("{0}"), p.id("{0,1}")}});
    inputs.emplace_back("K0 renormed, {1}", AmalgamInput{kr, 1, {p.id("{1}"), p.id("{0,1}")}});
    inputs.emplace_back("K0 renormed, top only", AmalgamInput{kr, 1, {p.id("{0,1}")}});
  }
  for (std::size_t n = 3; n <= 6; ++n)
    for (Ordinal d = 1; d < n; ++d) {
      std::vector<ElementId> c;
      for (std::size_t i = d; i < n; ++i) c.emplace_back(i);
      inputs.emplace_back(std::to_string(n) + "-chain/delta=" + std::to_string(d),
                          AmalgamInput{fixtures::normed_chain(n), d, c});
    }
  const LadderSystem s = morass_to_ladder(build_truncated_morass({1, 2}), MorassBase::renormed);
  for (std::size_t a = 1; a < s.levels.size(); ++a) {
    const NormedLattice& k = s.levels[a];
    for (Ordinal d = 1; d < k.theta(); ++d)
      inputs.emplace_back("morass K_" + std::to_string(a) + "/delta=" + std::to_string(d),
                          AmalgamInput{k, d, default_chain_policy(k, d)});
  }
  std::mt19937_64 rng(11);
  for (int found = 0, tries = 0; found < 8 && tries < 2000; ++tries) {
    const NormedLattice k = fixtures::random_normed(rng, 12, 4);
    if (!k.transitive() || k.theta() < 2 || !is_k_ladder(k.lattice(), 3)) continue;
    const Ordinal d = 1 + static_cast<Ordinal>(rng() % (k.theta() - 1));
    inputs.emplace_back("random " + std::to_string(found) + "/delta=" + std::to_string(d),
                        AmalgamInput{k, d, default_chain_policy(k, d)});
    ++found;
  }

  std::size_t checks = 0;
  for (const auto& [name, in] : inputs) {
    const AmalgamResult r = amalgamate(in);
    const Report conclusions = verify_amalgam(r);
    const Report covers = verify_lower_covers(r);
    checks += conclusions.checks().size() + covers.checks().size();
    o.require(conclusions.ok(), name + ": " + conclusions.first_failure());
    o.require(covers.ok(), name + ": " + covers.first_failure());
    const Ordinal theta = in.k.theta();
    o.require(r.kbar.transitive() && r.kbar.theta() == theta + (theta - in.delta),
              name + ": range is not theta + (theta - delta)");
    // the four join formulas, again against the brute-force least upper bound
    const Lattice& kb = r.kbar.lattice();
    std::size_t bad = 0;
    for (auto x : kb.poset().elements())
      for (auto y : kb.poset().elements()) {
        const ElementSet ub = kb.poset().up_set(x) & kb.poset().up_set(y);
        if (kb.poset().least_of(ub) != std::optional<ElementId>(kb.join(x, y))) ++bad;
      }
    o.require(bad == 0, name + ": " + std::to_string(bad) + " joins differ from the least upper bound");
  }
  o.require(inputs.size() >= 20, "fewer than 20 inputs");
  o.detail = std::to_string(inputs.size()) + " inputs, " + std::to_string(checks) + " checks";
  return o;
}

// 5
Outcome morass_coherence() {
  Outcome o;
  const std::vector<std::vector<Ordinal>> cases = {{1}, {1, 2}, {2, 1}, {1, 2, 2}};
  std::ostringstream detail;
  std::size_t runs = 0;
  for (const auto& deltas : cases) {
    std::string tag = "[";
    for (std::size_t i = 0; i < deltas.size(); ++i) tag += (i ? "," : "") + std::to_string(deltas[i]);
    tag += "]";
    std::size_t valid = 0;
    for (MorassBase base : {MorassBase::renormed, MorassBase::range3}) {
      const std::string btag = tag + (base == MorassBase::range3 ? " range-3" : " renormed");
      MorassTruncation m;
      try {
        m = build_truncated_morass(deltas, base_theta0(base));
      } catch (const PreconditionError&) {
        continue;  // deltas outside (0, theta) for this base
      }
      ++valid;
      ++runs;
      const Report axioms = verify_axioms(m);
      if (base == MorassBase::renormed) {
        o.require(axioms.ok(), btag + ": " + axioms.first_failure());
      } else {
        const auto f = axioms.failures();
        o.require(f.size() == 1 && f.front().name == "(P0)(a) theta_0 = 2",
                  btag + ": axioms other than theta_0 = 2 fail");
      }
      const Report tree = check_mor2tree(m);
      o.require(tree.ok(), btag + ": " + tree.first_failure());
      const LadderSystem s = morass_to_ladder(m, base);
      o.require(s.checks.ok(), btag + ": " + s.checks.first_failure());
      const Report again = verify_ladder_system(s);
      o.require(again.ok(), btag + ": " + again.first_failure());
      const DirectLimit lim = direct_limit(limit_diagram(s));
      o.require(lim.checks.ok(), btag + ": " + lim.checks.first_failure());
      o.require(lim.colimit == s.levels.back(), btag + ": the limit is not the top level");
      if (deltas == std::vector<Ordinal>{1, 2} && base == MorassBase::renormed) {
        o.require(m.family(0, 2).size() == 3, "|maps(0,2)| = " + std::to_string(m.family(0, 2).size()));
        detail << "|maps(0,2)|=" << m.family(0, 2).size() << " for [1,2]; ";
      }
    }
    o.require(valid > 0, tag + " is valid under no base");
  }
  detail << runs << " (deltas, base) runs";
  o.detail = detail.str();
  return o;
}

// 6
Outcome growth_towers() {
  Outcome o;
  const GrowthTrace t3 = grow_3ladder(6);
  o.require(t3.checks.ok(), "3-ladder tower: " + t3.checks.first_failure());
  o.require(t3.stages.size() == 7, "3-ladder tower has the wrong number of stages");
  for (std::size_t i = 0; i < t3.stages.size(); ++i) {
    const Lattice& cur = t3.stages[i];
    o.require(is_k_ladder(cur, 3), "stage " + std::to_string(i) + " is not a 3-ladder");
    if (i == 0) continue;
    const Lattice& prev = t3.stages[i - 1];
    o.require(prev.size() < cur.size(), "stage " + std::to_string(i) + " does not grow");
    ElementSet old = cur.poset().empty_set();
    for (std::size_t a = 0; a < prev.size(); ++a) old.set(a);
    o.require(is_ideal(cur.poset(), old), "stage " + std::to_string(i - 1) + " is not an ideal of the next");
  }
  const GrowthTrace t2 = grow_2ladder(6, fixtures::boolean(2));
  o.require(t2.checks.ok(), "2-ladder tower: " + t2.checks.first_failure());
  for (std::size_t i = 0; i < t2.stages.size(); ++i) {
    o.require(is_atomistic(t2.stages[i]), "2-ladder stage " + std::to_string(i) + " is not atomistic");
    o.require(is_k_ladder(t2.stages[i], 2), "2-ladder stage " + std::to_string(i) + " is not a 2-ladder");
  }
  std::string sizes;
  for (const auto& s : t3.stages) sizes += (sizes.empty() ? "" : ",") + std::to_string(s.size());
  o.detail = "3-ladder sizes " + sizes + "; 2-ladder from B2 reaches " + std::to_string(t2.last().size());
  return o;
}

// 7
Outcome breadth_generators() {
  Outcome o;
  std::set<std::vector<std::uint64_t>> families;
  std::size_t cases = 0, disagreements = 0;
  const std::size_t universe = 15;  // nonempty subsets of {0,1,2,3}
  auto run_case = [&](const std::vector<std::uint64_t>& gens) {
    const auto family = fixtures::union_closure(gens);
    if (family.size() > 8) return;
    families.insert(family);
    const Lattice l = fixtures::set_lattice(family);
    std::vector<ElementId> g;
    for (auto m : gens)
      g.emplace_back(static_cast<std::size_t>(std::find(family.begin(), family.end(), m) - family.begin()));
    const std::size_t b = breadth(l.poset());
    for (std::size_t n = 1; n <= 4; ++n) {
      ++cases;
      if (breadth_at_most_via_generators(l, g, n) != (b <= n)) ++disagreements;
    }
  };
  std::vector<std::uint64_t> pick;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t next) {
    if (!pick.empty()) run_case(pick);
    if (pick.size() == 4) return;
    for (std::uint64_t m = next; m <= universe; ++m) {
      pick.push_back(m);
      rec(m + 1);
      pick.pop_back();
    }
  };
  rec(1);
  // lattices that are not families of sets, with the whole lattice as G
  for (const Lattice& l : {fixtures::m3(), fixtures::n5()}) {
    const auto g = l.poset().elements();
    const std::size_t b = breadth(l.poset());
    for (std::size_t n = 1; n <= 4; ++n) {
      ++cases;
      if (breadth_at_most_via_generators(l, g, n) != (b <= n)) ++disagreements;
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.require(cases >= 200, "fewer than 200 cases");
  o.detail = std::to_string(cases) + " cases over " + std::to_string(families.size() + 2) + " semilattices";
  return o;
}

// 8
Outcome closure_semilattice() {
  Outcome o;
  std::string sizes;
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{5, 1}, {6, 1}, {6, 2}}) {
    const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    const ClosedSetLattice c = build_semilattice(closure_from_f0(f0_linear(m, n)));
    o.require(c.checks.ok(), tag + ": " + c.checks.first_failure());
    o.require(is_atomistic(c.lattice), tag + ": not atomistic");
    const std::size_t b = breadth(c.lattice.poset());
    o.require(b <= n + 1, tag + ": breadth above n + 1");
    if (m >= n + 3) o.require(b == n + 1, tag + ": breadth " + std::to_string(b) + ", expected n + 1");
    if (m == 5 && n == 1) o.require(c.lattice.size() == 10, "|L| = " + std::to_string(c.lattice.size()) + " for (5,1)");
    sizes += (sizes.empty() ? "" : ", ") + tag + " |L|=" + std::to_string(c.lattice.size()) + " breadth " +
             std::to_string(b);
  }
  o.detail = sizes;
  return o;
}

// 9
Outcome counterexample_replay() {
  Outcome o;
  std::string detail;
  for (std::size_t depth = 1; depth <= 3; ++depth) {
    const std::string tag = "N=" + std::to_string(depth);
    const CounterexampleFixture fx = build_counterexample(depth);
    const Report structure = verify_counterexample(fx);
    o.require(structure.ok(), tag + ": " + structure.first_failure());
    const ExtensionSearchResult r = search_breadth2_extension(fx, std::size_t{1} << 22, true);
    o.require(r.exhausted, tag + ": the search hit its cap");
    o.require(r.candidates > 0, tag + ": no candidate extensions");
    o.require(r.escapes == 0, tag + ": " + std::to_string(r.escapes) + " escapes");
    o.require(r.breadth_confirmed == r.candidates, tag + ": brute-force breadth disagrees with the witnesses");
    o.require(r.first_witness.has_value(), tag + ": no witness reported");
    detail += (detail.empty() ? "" : "; ") + tag + " " + std::to_string(r.candidates) + " candidates";
    if (r.first_witness) {
      detail += ", witness {";
      for (std::size_t i = 0; i < r.first_witness->size(); ++i) detail += (i ? "," : "") + (*r.first_witness)[i];
      detail += "}";
    }
  }
  o.detail = detail;
  return o;
}

// 10
Outcome round_trips(const std::string& dir) {
  Outcome o;
  std::size_t docs = 0, files = 0, norms = 0;
  for (const auto& name : catalogue::standard_names()) {
    const std::string text = io::dump(io::to_json(catalogue::build(name)));
    const std::string again = io::dump(io::to_json(io::parse_document_text(text, name)));
    o.require(text == again, name + ": JSON -> memory -> JSON changed the text");
    ++docs;
    if (dir.empty()) continue;
    const auto path = std::filesystem::path(dir) / (name + ".json");
    if (!std::filesystem::exists(path)) {
      o.require(false, path.string() + " is missing");
      continue;
    }
    const std::string disk = io::read_text(path.string());
    o.require(disk == text, path.string() + " differs from the built fixture");
    o.require(io::dump(io::to_json(io::parse_document_text(disk, path.string()))) == disk,
              path.string() + " is not canonical");
    ++files;
  }
  for (const auto& [name, k] : normed_fixtures()) {
    const auto chain = extended_ideals(k);
    o.require(norm_from_ideal_chain(k.lattice(), chain) == k, name + ": ideal chain does not give back the norm");
    const std::string text = io::dump(io::to_json(k));
    o.require(io::dump(io::to_json(io::parse_document_text(text, name))) == text, name + ": normed round-trip");
    ++norms;
  }
  o.detail = std::to_string(docs) + " fixtures, " + std::to_string(files) + " files, " + std::to_string(norms) +
             " normed lattices";
  return o;
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "breadth fixtures", 1, breadth_fixtures));
  out.push_back(run_one(2, "projection/meet lemma", 5, proj2meet));
  out.push_back(run_one(3, "skeleton pipeline", 30, [&] { return skeleton_pipeline(options.seed); }));
  out.push_back(run_one(4, "amalgamation conformance", 60, amalgamation));
  out.push_back(run_one(5, "morass-to-ladder coherence", 30, morass_coherence));
  out.push_back(run_one(6, "growth towers", 30, growth_towers));
  out.push_back(run_one(7, "breadth via generators", 120, breadth_generators));
  out.push_back(run_one(8, "closure semilattice", 10, closure_semilattice));
  out.push_back(run_one(9, "counterexample replay", 60, counterexample_replay));
  out.push_back(run_one(10, "round-trips", 5, [&] { return round_trips(options.fixture_dir); }));
  return out;
}

void print(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs/%gs", r.seconds, r.limit_seconds);
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << "  " << timing << "  " << r.detail
        << "\n";
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  out << passed << "/" << results.size() << " criteria passed\n";
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

}  // namespace ladder::acceptance
