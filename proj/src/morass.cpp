#include "ladder/morass.hpp"

#include <algorithm>
#include <set>

#include "ladder/fixtures.hpp"
#include "ladder/ladders.hpp"

namespace ladder {

namespace {

std::string show(const OrdinalMap& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

std::string level_pair(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

ElementMap compose_maps(const ElementMap& g, const ElementMap& h) {
  ElementMap out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i].value()];
  return out;
}

void push_unique(std::vector<OrdinalMap>& family, OrdinalMap f) {
  if (std::find(family.begin(), family.end(), f) == family.end()) family.push_back(std::move(f));
}

bool same_family(const std::vector<OrdinalMap>& a, const std::vector<OrdinalMap>& b) {
  const std::set<OrdinalMap> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  return sa == sb;
}

}  // namespace

const std::vector<OrdinalMap>& MorassTruncation::family(std::size_t a, std::size_t b) const {
  const auto it = maps.find({a, b});
  if (it == maps.end()) throw PreconditionError("no map family " + level_pair(a, b));
  return it->second;
}

OrdinalMap identity_map(Ordinal theta_a) {
  OrdinalMap f(theta_a);
  for (Ordinal i = 0; i < theta_a; ++i) f[i] = i;
  return f;
}

OrdinalMap displacement(Ordinal delta, Ordinal theta) {
  OrdinalMap f(theta);
  for (Ordinal i = 0; i < theta; ++i) f[i] = tau(delta, theta, i);
  return f;
}

OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& h) {
  OrdinalMap out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] >= g.size()) throw PreconditionError("compose: maps are not composable");
    out[i] = g[h[i]];
  }
  return out;
}

MorassTruncation build_truncated_morass(const std::vector<Ordinal>& deltas, Ordinal theta0) {
  if (theta0 == 0) throw PreconditionError("theta_0 must be positive");
  MorassTruncation m;
  m.theta.push_back(theta0);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const Ordinal th = m.theta.back();
    const Ordinal d = deltas[i];
    if (d == 0 || d >= th)
      throw PreconditionError("delta_" + std::to_string(i) + " = " + std::to_string(d) + " is not in (0, " +
                              std::to_string(th) + ")");
    m.delta.push_back(d);
    m.theta.push_back(th + (th - d));
    m.maps[{i, i + 1}] = {identity_map(th), displacement(d, th)};
  }
  const std::size_t top = m.top_level();
  for (std::size_t b = 2; b <= top; ++b)
    for (std::size_t a = 0; a + 1 < b; ++a) {
      std::vector<OrdinalMap> family;
      for (const auto& h : m.maps.at({a, b - 1}))
        for (const auto& g : m.maps.at({b - 1, b})) push_unique(family, compose(g, h));
      m.maps[{a, b}] = std::move(family);
    }
  return m;
}

Report verify_axioms(const MorassTruncation& m) {
  Report r("morass axioms");
  const std::size_t top = m.top_level();
  r.add("(P0)(a) theta_0 = 2", !m.theta.empty() && m.theta[0] == 2,
        m.theta.empty() ? "no levels" : "theta_0 = " + std::to_string(m.theta[0]));
  bool positive = true;
  for (auto t : m.theta) positive = positive && t > 0;
  r.add("(P0)(a) every theta is positive", positive);

  {
    bool ok = true;
    std::string detail;
    for (std::size_t a = 0; a < top && ok; ++a)
      for (std::size_t b = a + 1; b <= top && ok; ++b) {
        const auto it = m.maps.find({a, b});
        if (it == m.maps.end()) {
          ok = false;
          detail = "missing family " + level_pair(a, b);
          break;
        }
        for (const auto& f : it->second) {
          bool emb = f.size() == m.theta[a];
          for (std::size_t i = 0; i < f.size() && emb; ++i)
            emb = f[i] < m.theta[b] && (i == 0 || f[i - 1] < f[i]);
          if (!emb) {
            ok = false;
            detail = show(f) + " in " + level_pair(a, b) + " is not an order-embedding";
            break;
          }
        }
      }
    r.add("(P0)(b) maps are order-embeddings theta_a -> theta_b", ok, detail);
  }

  r.add("(P1) every family is finite", true, "finite truncation");

  {
    bool ok = true;
    std::string detail;
    for (std::size_t a = 0; a < top && ok; ++a)
      for (std::size_t b = a + 1; b < top && ok; ++b)
        for (std::size_t c = b + 1; c <= top && ok; ++c) {
          if (!m.maps.count({a, b}) || !m.maps.count({b, c}) || !m.maps.count({a, c})) {
            ok = false;
            detail = "missing family";
            break;
          }
          std::vector<OrdinalMap> comp;
          for (const auto& g : m.maps.at({a, b}))
            for (const auto& f : m.maps.at({b, c})) {
              try {
                push_unique(comp, compose(f, g));
              } catch (const PreconditionError&) {
                ok = false;
                detail = "non-composable maps through level " + std::to_string(b);
              }
            }
          if (ok && !same_family(comp, m.maps.at({a, c}))) {
            ok = false;
            const auto& have = m.maps.at({a, c});
            detail = "F" + level_pair(a, c) + " differs from compositions through level " + std::to_string(b);
            for (const auto& f : comp)
              if (std::find(have.begin(), have.end(), f) == have.end()) {
                detail += ": missing " + show(f);
                break;
              }
            for (const auto& f : have)
              if (std::find(comp.begin(), comp.end(), f) == comp.end()) {
                detail += ": extra " + show(f);
                break;
              }
          }
        }
    r.add("(P2) families are closed compositions", ok, detail);
  }

  {
    bool ok = m.delta.size() == top;
    std::string detail = ok ? "" : "delta has the wrong length";
    for (std::size_t a = 0; a < top && ok; ++a) {
      const Ordinal th = m.theta[a], d = m.delta[a];
      if (d == 0 || d >= th) {
        ok = false;
        detail = "delta_" + std::to_string(a) + " out of range";
      } else if (m.theta[a + 1] != th + (th - d)) {
        ok = false;
        detail = "theta_" + std::to_string(a + 1) + " != theta + (theta - delta)";
      } else if (!m.maps.count({a, a + 1}) ||
                 !same_family(m.maps.at({a, a + 1}), {identity_map(th), displacement(d, th)}) ||
                 m.maps.at({a, a + 1}).size() != 2) {
        ok = false;
        detail = "F" + level_pair(a, a + 1) + " is not {id, f_" + std::to_string(a) + "}";
      }
    }
    r.add("(P3) successor levels", ok, detail);
  }

  r.add("(P4) limit levels", true, "vacuous: no limit levels");

  {
    bool ok = true;
    std::string detail;
    for (std::size_t b = 1; b <= top && ok; ++b) {
      std::set<Ordinal> covered;
      for (std::size_t a = 0; a < b; ++a) {
        const auto it = m.maps.find({a, b});
        if (it == m.maps.end()) continue;
        for (const auto& f : it->second) covered.insert(f.begin(), f.end());
      }
      for (Ordinal xi = 0; xi < m.theta[b]; ++xi)
        if (!covered.count(xi)) {
          ok = false;
          detail = std::to_string(xi) + " is not in the image of any map into level " + std::to_string(b);
          break;
        }
    }
    r.add("(P5) each theta is covered by images", ok, detail);
  }
  return r;
}

Report check_mor2tree(const MorassTruncation& m) {
  Report r("tree lemma");
  bool ok = true;
  std::string detail;
  std::size_t cases = 0;
  for (const auto& [key, family] : m.maps) {
    for (std::size_t i = 0; i < family.size() && ok; ++i)
      for (std::size_t j = 0; j < family.size() && ok; ++j) {
        const auto& f0 = family[i];
        const auto& f1 = family[j];
        for (std::size_t x0 = 0; x0 < f0.size() && ok; ++x0)
          for (std::size_t x1 = 0; x1 < f1.size() && ok; ++x1) {
            if (f0[x0] != f1[x1]) continue;
            ++cases;
            const bool agree = x0 == x1 && std::equal(f0.begin(), f0.begin() + x0, f1.begin());
            if (!agree) {
              ok = false;
              detail = "F" + level_pair(key.first, key.second) + ": f0 = " + show(f0) + ", f1 = " + show(f1) +
                       ", xi0 = " + std::to_string(x0) + ", xi1 = " + std::to_string(x1);
            }
          }
      }
  }
  r.add("equal values force equal arguments and equal restrictions", ok,
        ok ? std::to_string(cases) + " coincidences" : detail);
  return r;
}

MorassBase parse_base(const std::string& name) {
  if (name == "renormed") return MorassBase::renormed;
  if (name == "paper") return MorassBase::range3;
  throw InputError("unknown base '" + name + "' (expected paper or renormed)");
}

NormedLattice base_lattice(MorassBase base) {
  return base == MorassBase::range3 ? fixtures::k0_standard() : fixtures::k0_renormed();
}

Ordinal base_theta0(MorassBase base) { return base == MorassBase::range3 ? 3 : 2; }

std::vector<ElementId> default_chain_policy(const NormedLattice& k, Ordinal delta) {
  const ElementSet level = k.level(delta);
  if (level.none()) throw PreconditionError("chain policy: level " + std::to_string(delta) + " is empty");
  std::vector<ElementId> chain{ElementId(level.find_first())};
  const Poset& p = k.poset();
  while (!p.upper_covers(chain.back()).empty()) chain.push_back(p.upper_covers(chain.back()).front());
  return chain;
}

const ElementMap& LadderSystem::star(std::size_t a, std::size_t b, const OrdinalMap& f) const {
  const auto& family = morass.family(a, b);
  const auto it = std::find(family.begin(), family.end(), f);
  if (it == family.end()) throw PreconditionError(show(f) + " is not in F" + level_pair(a, b));
  return stars.at({a, b})[static_cast<std::size_t>(it - family.begin())];
}

LadderSystem morass_to_ladder(const MorassTruncation& m, MorassBase base, const ChainPolicy& policy) {
  LadderSystem s;
  s.morass = m;
  s.base = base;
  s.levels.push_back(base_lattice(base));
  const std::size_t top = m.top_level();
  Report guards("star construction");

  for (std::size_t a = 0; a < top; ++a) {
    const NormedLattice k = s.levels[a];
    AmalgamInput in{k, m.delta[a], policy(k, m.delta[a])};
    s.steps.push_back(amalgamate(in, AmalgamOptions{"f" + std::to_string(a)}));
    s.levels.push_back(s.steps.back().kbar);

    ElementMap inclusion(k.size());
    for (std::size_t x = 0; x < k.size(); ++x) inclusion[x] = ElementId(x);
    const OrdinalMap id = identity_map(m.theta[a]);
    const OrdinalMap fa = displacement(m.delta[a], m.theta[a]);
    auto& one = s.stars[{a, a + 1}];
    for (const auto& f : m.family(a, a + 1)) {
      if (f == id) one.push_back(inclusion);
      else if (f == fa) one.push_back(s.steps.back().f);
      else throw PreconditionError("F" + level_pair(a, a + 1) + " contains " + show(f) + ", neither id nor f_a");
    }
  }

  for (std::size_t c = 2; c <= top; ++c) {
    const std::size_t b = c - 1;
    const ElementSet ideal = s.levels[b].extended_ideal(m.delta[b] - 1);
    for (std::size_t a = 0; a < b; ++a) {
      auto& out = s.stars[{a, c}];
      bool unique = true, guard = true;
      std::string detail;
      for (const auto& f : m.family(a, c)) {
        std::optional<ElementMap> chosen;
        std::size_t decompositions = 0;
        for (std::size_t i = 0; i < m.family(a, b).size(); ++i) {
          const auto& h = m.family(a, b)[i];
          for (std::size_t j = 0; j < m.family(b, c).size(); ++j) {
            const auto& g = m.family(b, c)[j];
            if (compose(g, h) != f) continue;
            ++decompositions;
            const ElementMap star = compose_maps(s.stars.at({b, c})[j], s.stars.at({a, b})[i]);
            if (!chosen) chosen = star;
            else if (*chosen != star) {
              unique = false;
              detail = show(f) + " in F" + level_pair(a, c);
            }
          }
          // f = f_b o h = h: the range of h* must stay inside I_b
          if (compose(displacement(m.delta[b], m.theta[b]), h) == h && h == f) {
            for (auto y : s.stars.at({a, b})[i])
              if (!ideal.test(y.value())) {
                guard = false;
                detail = "rng of the star of " + show(h) + " leaves I_" + std::to_string(b);
              }
          }
        }
        if (!chosen) throw VerificationError(show(f) + " in F" + level_pair(a, c) + " has no decomposition");
        out.push_back(*chosen);
      }
      guards.add("stars into level " + std::to_string(c) + " from level " + std::to_string(a) +
                     " do not depend on the decomposition",
                 unique, detail);
      guards.add("ambiguous decompositions into level " + std::to_string(c) + " from level " + std::to_string(a) +
                     " map into I_" + std::to_string(b),
                 guard, detail);
    }
  }
  s.checks = verify_ladder_system(s);
  s.checks.merge(guards);
  return s;
}

Report verify_ladder_system(const LadderSystem& s) {
  Report r("ladder system");
  const MorassTruncation& m = s.morass;
  const std::size_t top = m.top_level();
  for (std::size_t a = 0; a < s.levels.size(); ++a) {
    const NormedLattice& k = s.levels[a];
    const std::string tag = "(K0) K_" + std::to_string(a);
    r.add(tag + " is a 3-ladder", is_k_ladder(k.lattice(), 3));
    r.add(tag + " is atomistic", is_atomistic(k.lattice()));
    r.add(tag + " has range theta_" + std::to_string(a),
          a < m.theta.size() && k.transitive() && k.theta() == m.theta[a],
          "range " + std::to_string(k.range().size()) + ", theta " +
              (a < m.theta.size() ? std::to_string(m.theta[a]) : std::string("?")));
  }
  r.add("(K1) every level is finite", true, "finite truncation");

  bool k2 = true, k4 = true;
  std::string d2, d4;
  for (std::size_t a = 0; a < top; ++a)
    for (std::size_t b = a + 1; b <= top; ++b) {
      const auto& family = m.family(a, b);
      const auto& stars = s.stars.at({a, b});
      for (std::size_t i = 0; i < family.size(); ++i) {
        const NormedLattice& ka = s.levels[a];
        const NormedLattice& kb = s.levels[b];
        if (k2 && !is_lower_embedding(ka.poset(), kb.poset(), stars[i])) {
          k2 = false;
          d2 = "star of " + show(family[i]) + " in F" + level_pair(a, b);
        }
        for (std::size_t x = 0; x < ka.size() && k4; ++x) {
          const Ordinal nx = ka.norm(ElementId(x));
          if (nx >= family[i].size() || kb.norm(stars[i][x]) != family[i][nx]) {
            k4 = false;
            d4 = "f = " + show(family[i]) + " at " + ka.poset().name(ElementId(x));
          }
        }
      }
    }
  r.add("(K2) every star is a lower embedding", k2, d2);

  bool k3 = true;
  std::string d3;
  for (std::size_t a = 0; a < top && k3; ++a)
    for (std::size_t b = a + 1; b < top && k3; ++b)
      for (std::size_t c = b + 1; c <= top && k3; ++c)
        for (const auto& f : m.family(b, c))
          for (const auto& g : m.family(a, b)) {
            if (!k3) break;
            const ElementMap lhs = s.star(a, c, compose(f, g));
            const ElementMap rhs = compose_maps(s.star(b, c, f), s.star(a, b, g));
            if (lhs != rhs) {
              k3 = false;
              d3 = "f = " + show(f) + ", g = " + show(g);
            }
          }
  r.add("(K3) (f o g)* = f* o g*", k3, d3);
  r.add("(K4) norm after f* = f after norm", k4, d4);
  return r;
}

Diagram limit_diagram(const LadderSystem& s) {
  const MorassTruncation& m = s.morass;
  const std::size_t top = m.top_level();
  struct Index {
    std::size_t level;
    OrdinalMap f;
  };
  std::vector<Index> idx;
  for (std::size_t a = 0; a < top; ++a)
    for (const auto& f : m.family(a, top)) idx.push_back({a, f});
  idx.push_back({top, identity_map(m.theta[top])});

  Diagram d;
  for (const auto& i : idx) d.objects.push_back(s.levels[i.level]);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const auto& from = idx[i];
      const auto& to = idx[j];
      if (from.level >= to.level) continue;
      if (to.level == top) {
        // the top index is (N, id): f = id o f
        d.arrows.push_back({i, j, s.star(from.level, top, from.f), from.f});
        continue;
      }
      for (const auto& h : m.family(from.level, to.level))
        if (compose(to.f, h) == from.f) {
          d.arrows.push_back({i, j, s.star(from.level, to.level, h), h});
          break;
        }
    }
  return d;
}

DirectLimit direct_limit(const Diagram& d) {
  const std::size_t n = d.objects.size();
  if (n == 0) throw PreconditionError("direct limit of an empty diagram");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrow;
  for (std::size_t a = 0; a < d.arrows.size(); ++a) {
    const auto& ar = d.arrows[a];
    if (ar.from >= n || ar.to >= n) throw PreconditionError("arrow with an unknown index");
    if (ar.from == ar.to) throw PreconditionError("arrow from an index to itself");
    if (!arrow.emplace(std::make_pair(ar.from, ar.to), a).second)
      throw PreconditionError("two arrows " + level_pair(ar.from, ar.to));
  }
  for (const auto& [key, a] : arrow) {
    if (arrow.count({key.second, key.first})) throw PreconditionError("index order is not antisymmetric");
    for (std::size_t k = 0; k < n; ++k)
      if (arrow.count({key.second, k}) && !arrow.count({key.first, k}))
        throw PreconditionError("index order is not transitive at " + level_pair(key.first, k));
  }
  std::optional<std::size_t> top;
  for (std::size_t t = 0; t < n && !top; ++t) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) all = all && (i == t || arrow.count({i, t}));
    if (all) top = t;
  }
  if (!top) throw PreconditionError("the index set has no top, so it is not finite directed");

  for (const auto& ar : d.arrows) {
    const NormedLattice& src = d.objects[ar.from];
    const NormedLattice& dst = d.objects[ar.to];
    if (ar.map.size() != src.size() || !is_lower_embedding(src.poset(), dst.poset(), ar.map))
      throw VerificationError("arrow " + level_pair(ar.from, ar.to) + " is not a lower embedding");
    for (std::size_t x = 0; x < src.size(); ++x) {
      const Ordinal nx = src.norm(ElementId(x));
      if (nx >= ar.norm_map.size() || dst.norm(ar.map[x]) != ar.norm_map[nx])
        throw VerificationError("arrow " + level_pair(ar.from, ar.to) + " does not transport the norm at " +
                                src.poset().name(ElementId(x)));
    }
  }
  for (const auto& [ij, a] : arrow)
    for (std::size_t k = 0; k < n; ++k) {
      const auto jk = arrow.find({ij.second, k});
      if (jk == arrow.end()) continue;
      const auto& first = d.arrows[a].map;
      const auto& second = d.arrows[jk->second].map;
      const auto& direct = d.arrows[arrow.at({ij.first, k})].map;
      for (std::size_t x = 0; x < first.size(); ++x)
        if (second[first[x].value()] != direct[x])
          throw VerificationError("square " + std::to_string(ij.first) + " -> " + std::to_string(ij.second) +
                                  " -> " + std::to_string(k) + " does not commute at " +
                                  d.objects[ij.first].poset().name(ElementId(x)));
    }

  DirectLimit out;
  out.top = *top;
  out.colimit = d.objects[*top];
  for (std::size_t i = 0; i < n; ++i) {
    if (i == *top) {
      ElementMap id(d.objects[i].size());
      for (std::size_t x = 0; x < id.size(); ++x) id[x] = ElementId(x);
      out.cocone.push_back(std::move(id));
    } else {
      out.cocone.push_back(d.arrows[arrow.at({i, *top})].map);
    }
  }
  out.checks = Report("direct limit");
  out.checks.add("index order is a finite directed poset with a top", true, "top index " + std::to_string(*top));
  out.checks.add("every arrow is a lower embedding transporting norms", true);
  out.checks.add("every square commutes", true, std::to_string(d.arrows.size()) + " arrows");
  out.checks.add("the colimit contains every image", true);
  return out;
}

}  // namespace ladder
