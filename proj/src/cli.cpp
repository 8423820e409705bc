#include "ladder/cli.hpp"

#include <filesystem>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "ladder/acceptance.hpp"
#include "ladder/amalgam.hpp"
#include "ladder/catalogue.hpp"
#include "ladder/closure.hpp"
#include "ladder/counterexample.hpp"
#include "ladder/error.hpp"
#include "ladder/forcing.hpp"
#include "ladder/growth.hpp"
#include "ladder/io.hpp"
#include "ladder/ladders.hpp"
#include "ladder/morass.hpp"

#ifndef LADDER_FIXTURE_DIR
#define LADDER_FIXTURE_DIR ""
#endif

namespace ladder::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

struct Globals {
  std::uint64_t seed = acceptance::Options{}.seed;
  std::string out_dir;
  std::string format = "json";
};

// What a build command produces: a poset document, its drawing and a report.
struct Product {
  std::string stem;
  Json doc;
  std::string dot;
  Report report;
};

// Splits "a,b,{0,1}" at commas outside braces, so set names survive.
std::vector<std::string> split_names(const std::vector<std::string>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) {
    std::string cur;
    int depth = 0;
    for (char ch : v) {
      if (ch == '{') ++depth;
      if (ch == '}') --depth;
      if (ch == ',' && depth == 0) {
        out.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    out.push_back(std::move(cur));
  }
  return out;
}

std::vector<ElementId> ids_of(const Poset& p, const std::vector<std::string>& values) {
  std::vector<ElementId> out;
  for (const auto& n : split_names(values)) out.push_back(p.id(n));
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  io::write_text(path.string(), text);
}

// Without --out the document (or drawing) goes to stdout and the summary to
// stderr; with --out DIR both files plus report.json are written and the
// summary goes to stdout.
int finish(const Globals& g, const Product& p, std::ostream& out, std::ostream& err) {
  if (!g.out_dir.empty()) {
    const fs::path dir(g.out_dir);
    write_file(dir / (p.stem + ".json"), io::dump(p.doc));
    if (!p.dot.empty()) write_file(dir / (p.stem + ".dot"), p.dot);
    write_file(dir / "report.json", io::dump(p.report.to_json()));
    out << p.report.summary() << "\n";
  } else {
    if (g.format == "dot") {
      if (p.dot.empty()) throw InputError("this command has no DOT output");
      out << p.dot;
    } else {
      out << io::dump(p.doc);
    }
    err << p.report.summary() << "\n";
  }
  return p.report.ok() ? Status::ok : Status::verification_failed;
}

Product skeleton_cmd(const std::string& file, const std::vector<std::string>& enumeration) {
  const Lattice l = io::load_lattice(file);
  const std::vector<ElementId> order = enumeration.empty() ? l.poset().elements() : ids_of(l.poset(), enumeration);
  const NormedLattice k = norm_from_enumeration(l, order);
  const GenericFilter g = generic_filter(k, full_dense_family(k), k.poset().empty_set());
  const ElementSet s = skeleton_from_generic(k, g);
  Product p{"skeleton", {}, {}, verify_generic_skeleton(k, s)};
  Json meta;
  meta["enumeration"] = io::names_of(k.poset(), order);
  meta["filter_length"] = g.chain.size();
  meta["skeleton"] = io::names_of(k.poset(), s);
  p.doc = io::to_json(k, meta);
  p.dot = io::to_dot(k.poset(), {&k.norms(), &s, "skeleton"});
  return p;
}

Product amalgamate_cmd(const std::string& file, Ordinal delta, const std::vector<std::string>& chain_names) {
  const NormedLattice k = io::load_normed(file);
  const AmalgamResult r = amalgamate({k, delta, ids_of(k.poset(), chain_names)});
  Product p{"amalgam", {}, {}, verify_amalgam(r)};
  p.report.merge(verify_lower_covers(r), "lower covers: ");
  const Poset& q = r.kbar.poset();
  Json meta;
  meta["delta"] = delta;
  meta["theta"] = r.setup.theta;
  meta["chain"] = io::names_of(k.poset(), r.setup.chain);
  Json f = Json::object();
  for (auto x : k.poset().elements()) f[k.poset().name(x)] = q.name(r.f[x.value()]);
  meta["f"] = std::move(f);
  meta["pairs"] = io::names_of(q, r.f_block);
  p.doc = io::to_json(r.kbar, meta);
  p.dot = io::to_dot(q, {&r.kbar.norms(), &r.f_block, "amalgam"});
  return p;
}

Product grow_cmd(const std::string& kind, std::size_t stages, const std::string& seed_file) {
  std::optional<Lattice> seed;
  if (!seed_file.empty()) seed = io::load_lattice(seed_file);
  GrowthTrace t;
  if (kind == "2ladder") t = grow_2ladder(stages, seed);
  else if (kind == "3ladder") t = grow_3ladder(stages, seed);
  else throw InputError("unknown --kind '" + kind + "' (expected 2ladder or 3ladder)");
  Product p{"grow", {}, {}, t.checks};
  Json meta;
  meta["kind"] = kind;
  Json sizes = Json::array(), atomistic = Json::array(), steps = Json::array();
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    sizes.push_back(t.stages[i].size());
    atomistic.push_back(static_cast<bool>(t.atomistic[i]));
    steps.push_back(t.step_kind[i]);
  }
  meta["stage_sizes"] = std::move(sizes);
  meta["atomistic"] = std::move(atomistic);
  meta["steps"] = std::move(steps);
  p.doc = io::to_json(t.last().poset(), nullptr, meta);
  p.dot = io::to_dot(t.last().poset(), {nullptr, nullptr, "stage" + std::to_string(t.stages.size() - 1)});
  return p;
}

Product morass_cmd(const std::vector<Ordinal>& deltas, const std::string& base_name, const std::string& emit_dir) {
  const MorassBase base = parse_base(base_name);
  const MorassTruncation m = build_truncated_morass(deltas, base_theta0(base));
  const LadderSystem s = morass_to_ladder(m, base);
  Product p{"morass", {}, {}, Report("morass " + base_name)};
  p.report.merge(verify_axioms(m), "axioms: ");
  p.report.merge(check_mor2tree(m), "tree: ");
  p.report.merge(s.checks, "system: ");
  const DirectLimit lim = direct_limit(limit_diagram(s));
  p.report.merge(lim.checks, "limit: ");
  p.report.add("limit: colimit is the top level", lim.colimit == s.levels.back());

  Json meta;
  meta["base"] = base_name;
  meta["theta"] = m.theta;
  meta["delta"] = m.delta;
  Json families = Json::object();
  for (const auto& [ab, fam] : m.maps)
    families[std::to_string(ab.first) + "->" + std::to_string(ab.second)] = fam;
  meta["maps"] = std::move(families);
  Json sizes = Json::array();
  for (const auto& k : s.levels) sizes.push_back(k.size());
  meta["level_sizes"] = std::move(sizes);
  p.doc = io::to_json(s.levels.back(), meta);
  p.dot = io::to_dot(s.levels.back().poset(), {&s.levels.back().norms(), nullptr, "morass"});
  if (!emit_dir.empty()) {
    const fs::path dir(emit_dir);
    for (std::size_t a = 0; a < s.levels.size(); ++a) {
      const NormedLattice& k = s.levels[a];
      write_file(dir / ("K_" + std::to_string(a) + ".json"), io::dump(io::to_json(k, Json{{"level", a}})));
      write_file(dir / ("K_" + std::to_string(a) + ".dot"),
                 io::to_dot(k.poset(), {&k.norms(), nullptr, "K_" + std::to_string(a)}));
    }
    write_file(dir / "report.json", io::dump(p.report.to_json()));
  }
  return p;
}

Product closure_cmd(std::size_t m, std::size_t n) {
  const ClosureOperator cl = closure_from_f0(f0_linear(m, n));
  const ClosedSetLattice c = build_semilattice(cl);
  Product p{"closure", {}, {}, cl.verify()};
  p.report.merge(c.checks, "semilattice: ");
  const std::size_t b = breadth(c.lattice.poset());
  if (m >= n + 3) p.report.add("breadth is exactly n + 1", b == n + 1, "breadth " + std::to_string(b));
  Json meta;
  meta["ground"] = m;
  meta["n"] = n;
  meta["breadth"] = b;
  p.doc = io::to_json(c.lattice.poset(), nullptr, meta);
  p.dot = io::to_dot(c.lattice.poset(), {nullptr, nullptr, "closure"});
  return p;
}

Product verify_cmd(const std::string& file, std::optional<std::size_t> ladder, std::optional<std::size_t> max_breadth) {
  const io::PosetDocument doc = io::load_document(file);
  Product p{"verify", {}, {}, Report("verify " + fs::path(file).filename().string())};
  Report& r = p.report;
  const bool lattice = is_lattice(doc.poset);
  r.add("is a lattice", lattice);
  if (lattice && doc.norm) {
    try {
      const NormedLattice k = check_norm(Lattice(doc.poset), *doc.norm);
      r.add("norm is a join-homomorphism with finite levels", true);
      r.add("norm range is transitive", k.transitive(), "range max " + std::to_string(k.theta() - 1));
    } catch (const Error& e) {
      r.add("norm is a join-homomorphism with finite levels", false, e.what());
    }
  }
  if (ladder) {
    const std::size_t most = max_lower_covers_within(doc.poset, doc.poset.full_set());
    r.add("is a " + std::to_string(*ladder) + "-ladder", lattice && is_k_ladder(doc.poset, *ladder),
          "at most " + std::to_string(most) + " lower covers");
  }
  if (max_breadth) {
    const std::size_t b = breadth(doc.poset);
    r.add("breadth at most " + std::to_string(*max_breadth), b <= *max_breadth, "breadth " + std::to_string(b));
  }
  p.doc = r.to_json();
  return p;
}

Product counterexample_cmd(std::size_t depth, std::size_t cap, bool confirm) {
  io::PosetDocument doc = catalogue::build("counterexample" + std::to_string(depth));
  const CounterexampleFixture fx = build_counterexample(depth);
  const ExtensionSearchResult s = search_breadth2_extension(fx, cap, confirm);
  Product p{"counterexample", {}, {}, verify_counterexample(fx)};
  p.report.add("search exhausted within the cap", s.exhausted,
               std::to_string(s.closed_sets) + " closed sets visited");
  p.report.add("no escapes", s.escapes == 0, std::to_string(s.escapes) + " of " + std::to_string(s.candidates));
  if (confirm) p.report.add("brute-force breadth confirms every candidate", s.breadth_confirmed == s.candidates);
  Json search;
  search["cap"] = cap;
  search["exhausted"] = s.exhausted;
  search["closed_sets"] = s.closed_sets;
  search["candidates"] = s.candidates;
  search["cofinal_candidates"] = s.cofinal_candidates;
  search["escapes"] = s.escapes;
  if (confirm) search["breadth_confirmed"] = s.breadth_confirmed;
  search["witness_histogram"] = s.witness_histogram;
  if (s.first_witness) search["first_witness"] = *s.first_witness;
  if (s.first_escape) search["first_escape"] = *s.first_escape;
  doc.meta["search"] = std::move(search);
  p.doc = io::to_json(doc);
  p.dot = io::to_dot(fx.k_prime.poset(), {nullptr, &fx.f, "counterexample"});
  return p;
}

int export_cmd(const Globals& g, const std::string& file, std::ostream& out) {
  const io::PosetDocument doc = io::load_document(file);
  const std::string text = g.format == "dot" ? io::to_dot(doc.poset, {doc.norm ? &*doc.norm : nullptr})
                                             : io::dump(io::to_json(doc));
  if (g.out_dir.empty()) {
    out << text;
  } else {
    const fs::path path = fs::path(g.out_dir) / (fs::path(file).stem().string() + (g.format == "dot" ? ".dot" : ".json"));
    write_file(path, text);
    out << "wrote " << path.string() << "\n";
  }
  return Status::ok;
}

int fixture_cmd(const Globals& g, std::vector<std::string> names, bool list, std::ostream& out) {
  if (list) {
    for (const auto& n : catalogue::standard_names()) out << n << "\n";
    return Status::ok;
  }
  if (names.empty()) {
    if (g.out_dir.empty()) throw InputError("fixture: give a name, or --out DIR to write every standard fixture");
    names = catalogue::standard_names();
  }
  for (const auto& n : names) {
    const io::PosetDocument doc = catalogue::build(n);
    const std::string text = g.format == "dot" ? io::to_dot(doc.poset, {doc.norm ? &*doc.norm : nullptr, nullptr, "fixture"})
                                               : io::dump(io::to_json(doc));
    if (g.out_dir.empty()) {
      out << text;
    } else {
      const fs::path path = fs::path(g.out_dir) / (n + (g.format == "dot" ? ".dot" : ".json"));
      write_file(path, text);
      out << "wrote " << path.string() << "\n";
    }
  }
  return Status::ok;
}

int accept_cmd(const Globals& g, const std::string& fixture_dir, std::ostream& out) {
  acceptance::Options opt;
  opt.fixture_dir = fixture_dir;
  opt.seed = g.seed;
  const auto results = acceptance::run_all(opt);
  acceptance::print(out, results);
  if (!g.out_dir.empty()) {
    Json j = Json::array();
    for (const auto& r : results)
      j.push_back({{"id", r.id},
                   {"name", r.name},
                   {"passed", r.passed},
                   {"seconds", r.seconds},
                   {"limit_seconds", r.limit_seconds},
                   {"detail", r.detail}});
    write_file(fs::path(g.out_dir) / "acceptance.json", io::dump(j));
  }
  return acceptance::all_passed(results) ? Status::ok : Status::verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ladders, skeletons, amalgams and morass truncations", "ladderlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized property runs");
  app.add_option("--out", g.out_dir, "Write outputs under DIR instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "dot"}));

  std::function<int()> action;

  std::string file;
  std::vector<std::string> names;

  auto* sk = app.add_subcommand("skeleton", "Skeleton of a lattice normed by an enumeration");
  sk->add_option("lattice", file, "Lattice JSON")->required()->check(CLI::ExistingFile);
  sk->add_option("--enumeration", names, "Element names in enumeration order");
  sk->callback([&] { action = [&] { return finish(g, skeleton_cmd(file, names), out, err); }; });

  Ordinal delta = 0;
  auto* am = app.add_subcommand("amalgamate", "Amalgam of a normed 3-ladder over a cofinal chain");
  am->add_option("lattice", file, "Normed lattice JSON")->required()->check(CLI::ExistingFile);
  am->add_option("--delta", delta, "Norm of the least chain element")->required()->check(CLI::PositiveNumber);
  am->add_option("--chain", names, "Chain element names")->required();
  am->callback([&] { action = [&] { return finish(g, amalgamate_cmd(file, delta, names), out, err); }; });

  std::string kind;
  std::size_t stages = 0;
  std::string seed_file;
  auto* gr = app.add_subcommand("grow", "Tower of 2-ladders or 3-ladders");
  gr->add_option("--kind", kind, "2ladder or 3ladder")->required()->check(CLI::IsMember({"2ladder", "3ladder"}));
  gr->add_option("--stages", stages, "Number of steps")->required()->check(CLI::Range(0, 64));
  gr->add_option("--seed", seed_file, "Seed lattice JSON")->check(CLI::ExistingFile);
  gr->callback([&] { action = [&] { return finish(g, grow_cmd(kind, stages, seed_file), out, err); }; });

  std::vector<Ordinal> deltas;
  std::string base = "renormed";
  std::string emit_dir;
  auto* mo = app.add_subcommand("morass", "Morass truncation and its ladder system");
  mo->add_option("--deltas", deltas, "delta_0,...,delta_{N-1}")->required()->delimiter(',');
  mo->add_option("--base", base, "Base normed lattice")->check(CLI::IsMember({"renormed", "paper"}));
  mo->add_option("--emit-system", emit_dir, "Write every level K_a and the report under DIR");
  mo->callback([&] { action = [&] { return finish(g, morass_cmd(deltas, base, emit_dir), out, err); }; });

  std::size_t ground = 0, n = 0;
  auto* cl = app.add_subcommand("closure", "Closed-set semilattice of the linear f0");
  cl->add_option("--ground", ground, "Ground set size m")->required()->check(CLI::Range(3, 20));
  cl->add_option("--n", n, "Arity parameter n")->required()->check(CLI::Range(1, 18));
  cl->callback([&] { action = [&] { return finish(g, closure_cmd(ground, n), out, err); }; });

  std::optional<std::size_t> ladder, max_breadth;
  auto* ve = app.add_subcommand("verify", "Check a poset file");
  ve->add_option("file", file, "Poset JSON")->required()->check(CLI::ExistingFile);
  ve->add_option("--ladder", ladder, "Require a k-ladder")->check(CLI::PositiveNumber);
  ve->add_option("--breadth", max_breadth, "Require breadth at most n")->check(CLI::PositiveNumber);
  ve->callback([&] { action = [&] { return finish(g, verify_cmd(file, ladder, max_breadth), out, err); }; });

  auto* ex = app.add_subcommand("export", "Rewrite a poset file canonically, or as DOT");
  ex->add_option("file", file, "Poset JSON")->required()->check(CLI::ExistingFile);
  ex->callback([&] { action = [&] { return export_cmd(g, file, out); }; });

  std::string fixture_dir = LADDER_FIXTURE_DIR;
  auto* ac = app.add_subcommand("accept", "Run the acceptance suite");
  ac->add_option("--fixtures", fixture_dir, "Fixture directory checked for round-trips (empty to skip)");
  ac->callback([&] { action = [&] { return accept_cmd(g, fixture_dir, out); }; });

  std::size_t depth = 1;
  std::size_t cap = std::size_t{1} << 22;
  bool no_confirm = false;
  auto* ce = app.add_subcommand("counterexample", "Replay the breadth-2 extension search");
  ce->add_option("--depth", depth, "Number of blocks N")->check(CLI::Range(1, 15));
  ce->add_option("--cap", cap, "Closed sets visited at most")->check(CLI::PositiveNumber);
  ce->add_flag("--no-confirm", no_confirm, "Skip the brute-force breadth of each candidate");
  ce->callback([&] { action = [&] { return finish(g, counterexample_cmd(depth, cap, !no_confirm), out, err); }; });

  bool list = false;
  auto* fx = app.add_subcommand("fixture", "Emit built-in fixtures");
  fx->add_option("names", names, "Fixture names (all standard ones with --out)");
  fx->add_flag("--list", list, "List the standard fixture names");
  fx->callback([&] { action = [&] { return fixture_cmd(g, names, list, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Status::ok : Status::input_error;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return Status::input_error;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return Status::input_error;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return Status::verification_failed;
  } catch (const fs::filesystem_error& e) {
    err << "file error: " << e.what() << "\n";
    return Status::input_error;
  }
}

}  // namespace ladder::cli
