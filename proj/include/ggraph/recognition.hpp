#pragma once

// Recognising G-graphs from a group of automorphisms H and a clique C.
//
// check_with_loops / check_simple evaluate the characterisation conditions for a
// caller-supplied (H, C); reconstruct builds (H, S) with Γ ≅ Ψ(H,S) (or Φ(H,S))
// and returns a verified isomorphism.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ggraph/algebra.hpp"
#include "ggraph/ggraph.hpp"
#include "ggraph/multigraph.hpp"

namespace ggraph {

inline constexpr std::size_t kDefaultWitnessCap = 100000;

struct RecognitionWitness {
  std::vector<Automorphism> generators;
  std::vector<Automorphism> H;  ///< closed under composition, identity first
  std::vector<int> C;
};

/// Closes `gens` under composition starting from the identity. Partial maps (entries -1)
/// are kept as they are so that broken witnesses can still be reported on.
inline std::vector<Automorphism> close_under_composition(const Multigraph& g, const std::vector<Automorphism>& gens,
                                                         std::size_t cap = kDefaultWitnessCap) {
  std::vector<Automorphism> out{GraphMap::identity(g)};
  std::set<Automorphism> seen{out.front()};
  for (const Automorphism& a : gens) {
    detail::require(a.vertex_map.size() == static_cast<std::size_t>(g.vertex_count()) &&
                        a.edge_map.size() == static_cast<std::size_t>(g.edge_count()),
                    "automorphism has wrong size");
  }
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Automorphism& a : gens) {
      Automorphism x = compose(out[head], a);
      if (seen.insert(x).second) {
        if (out.size() >= cap) throw CapExceeded("automorphism group closure exceeds cap of " + std::to_string(cap));
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

inline RecognitionWitness make_witness(const Multigraph& g, std::vector<Automorphism> gens, std::vector<int> C) {
  RecognitionWitness w;
  w.H = close_under_composition(g, gens);
  w.generators = std::move(gens);
  w.C = std::move(C);
  return w;
}

/// H = all shifts δ_g, C = C_e.
inline RecognitionWitness shifts_of(const GGraph& gg) {
  std::vector<Automorphism> gens;
  for (Element g = 0; g < gg.G().order(); ++g) gens.push_back(shift(gg, g).map);
  return make_witness(gg.multigraph(), std::move(gens), colour_clique(gg, gg.G().identity()));
}

struct RecognitionReport {
  std::vector<CheckResult> conditions;

  bool all_pass() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const CheckResult& r) { return r.pass; });
  }
  const CheckResult& condition(std::string_view name) const {
    for (const auto& c : conditions)
      if (c.name == name) return c;
    throw PreconditionFailed("no condition named " + std::string(name));
  }
  std::optional<CheckResult> first_failure() const {
    for (const auto& c : conditions)
      if (!c.pass) return c;
    return std::nullopt;
  }
};

namespace recognition_names {
inline constexpr std::string_view kGroup = "H is a group of automorphisms";
inline constexpr std::string_view kClique = "C is a clique";
inline constexpr std::string_view kStables = "orbits are stables";
inline constexpr std::string_view kMeets = "C meets every orbit";
inline constexpr std::string_view kCyclic = "stabilisers are cyclic";
inline constexpr std::string_view kRegular = "stabilisers act regularly on edges";
}  // namespace recognition_names

namespace detail {

inline int automorphism_order(const Automorphism& a, std::size_t bound) {
  Automorphism p = a;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p.is_identity()) return static_cast<int>(k);
    p = compose(p, a);
  }
  return -1;
}

inline std::vector<int> vertex_orbit_ids(const Multigraph& g, const std::vector<Automorphism>& H) {
  const int n = g.vertex_count();
  std::vector<int> orbit(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (orbit[static_cast<std::size_t>(s)] >= 0) continue;
    for (const Automorphism& h : H) {
      const int t = h.v(s);
      if (t >= 0 && t < n && orbit[static_cast<std::size_t>(t)] < 0) orbit[static_cast<std::size_t>(t)] = next;
    }
    orbit[static_cast<std::size_t>(s)] = next;
    ++next;
  }
  return orbit;
}

inline RecognitionReport run_checks(const Multigraph& g, const RecognitionWitness& w, bool loops) {
  namespace rn = recognition_names;
  RecognitionReport rep;
  rep.conditions.reserve(8);
  auto add = [&](std::string_view name) -> CheckResult& {
    rep.conditions.push_back({std::string(name), true, {}});
    return rep.conditions.back();
  };
  auto fail = [](CheckResult& r, std::string why) {
    if (r.pass) {
      r.pass = false;
      r.detail = std::move(why);
    }
  };

  // H ⊆ Aut(Γ) and closed
  CheckResult& grp = add(rn::kGroup);
  std::set<Automorphism> hset(w.H.begin(), w.H.end());
  if (w.H.empty() || !w.H.front().is_identity()) fail(grp, "identity missing");
  for (std::size_t i = 0; i < w.H.size() && grp.pass; ++i)
    if (auto why = check_isomorphism(g, g, w.H[i])) fail(grp, "element " + std::to_string(i) + ": " + *why);
  for (std::size_t i = 0; i < w.H.size() && grp.pass; ++i)
    for (std::size_t j = 0; j < w.H.size() && grp.pass; ++j)
      if (!hset.count(compose(w.H[i], w.H[j]))) fail(grp, "not closed under composition");

  // C
  CheckResult& clique = add(loops ? "C is a clique with loops" : rn::kClique);
  for (std::size_t i = 0; i < w.C.size(); ++i) {
    if (!g.valid_vertex(w.C[i])) {
      fail(clique, "vertex " + std::to_string(w.C[i]) + " out of range");
      continue;
    }
    if (loops && g.multiplicity(w.C[i], w.C[i]) == 0) fail(clique, "no loop on " + std::to_string(w.C[i]));
    for (std::size_t j = i + 1; j < w.C.size(); ++j)
      if (w.C[i] == w.C[j] || (g.valid_vertex(w.C[j]) && g.multiplicity(w.C[i], w.C[j]) == 0))
        fail(clique, std::to_string(w.C[i]) + " and " + std::to_string(w.C[j]) + " are not adjacent");
  }

  const auto orbit = vertex_orbit_ids(g, w.H);
  const int orbit_count = orbit.empty() ? 0 : *std::max_element(orbit.begin(), orbit.end()) + 1;

  if (!loops) {
    CheckResult& st = add(rn::kStables);
    if (g.has_loops()) fail(st, "graph has loops");
    for (const Edge& e : g.edges())
      if (!e.is_loop() && orbit[static_cast<std::size_t>(e.u)] == orbit[static_cast<std::size_t>(e.v)]) {
        fail(st, "edge " + std::to_string(e.id) + " lies inside an orbit");
        break;
      }
  }

  CheckResult& meets = add(rn::kMeets);
  {
    std::vector<bool> hit(static_cast<std::size_t>(orbit_count), false);
    for (int u : w.C)
      if (g.valid_vertex(u)) hit[static_cast<std::size_t>(orbit[static_cast<std::size_t>(u)])] = true;
    for (int o = 0; o < orbit_count; ++o)
      if (!hit[static_cast<std::size_t>(o)]) {
        int example = 0;
        while (orbit[static_cast<std::size_t>(example)] != o) ++example;
        fail(meets, "orbit of vertex " + std::to_string(example) + " misses C");
        break;
      }
  }

  CheckResult& cyc = add(rn::kCyclic);
  CheckResult& reg = add(rn::kRegular);
  for (int u : w.C) {
    if (!g.valid_vertex(u)) continue;
    std::vector<const Automorphism*> stab;
    for (const Automorphism& h : w.H)
      if (h.v(u) == u) stab.push_back(&h);
    bool cyclic = false;
    for (const Automorphism* h : stab)
      if (automorphism_order(*h, stab.size()) == static_cast<int>(stab.size())) {
        cyclic = true;
        break;
      }
    if (!cyclic) fail(cyc, "Stab_H(" + std::to_string(u) + ") of order " + std::to_string(stab.size()) + " is not cyclic");

    for (int o = 0; o < orbit_count; ++o) {
      if (!loops && orbit[static_cast<std::size_t>(u)] == o) continue;
      std::vector<int> es;
      for (int e : g.incident(u))
        if (orbit[static_cast<std::size_t>(g.edge(e).other(u))] == o) es.push_back(e);
      std::sort(es.begin(), es.end());
      const std::string where = "Stab_H(" + std::to_string(u) + ") on edges toward orbit " + std::to_string(o);
      if (es.size() != stab.size()) {
        fail(reg, where + ": " + std::to_string(es.size()) + " edges for a stabiliser of order " + std::to_string(stab.size()));
        continue;
      }
      std::vector<int> img;
      for (const Automorphism* h : stab) img.push_back(h->e(es.front()));
      std::sort(img.begin(), img.end());
      if (img != es) fail(reg, where + ": not transitive");
    }
  }
  return rep;
}

}  // namespace detail

/// Characterisation with loops: C meets every H-orbit, each Stab_H u (u in C) is cyclic
/// and acts regularly on the edges from u toward each orbit.
inline RecognitionReport check_with_loops(const Multigraph& g, const RecognitionWitness& w) {
  return detail::run_checks(g, w, true);
}

/// Characterisation for loop-free multigraphs: as above, plus orbits are stables, and
/// regularity is required only toward orbits not containing u.
inline RecognitionReport check_simple(const Multigraph& g, const RecognitionWitness& w) {
  return detail::run_checks(g, w, false);
}

struct ReconstructionResult {
  GroupPtr group;                     ///< H as a multiplication table, mul(a,b) = elements[a] ∘ elements[b]
  std::vector<Automorphism> elements;
  GenMultiset gens;                   ///< σ_u for u in C, in the order of C
  GGraph graph;                       ///< Ψ(H,S), or Φ(H,S) for loop-free input
  IsoWitness iso;                     ///< input graph -> graph.multigraph()
};

/// Builds (H, S) and an isomorphism Γ -> Ψ(H,S) (Φ(H,S) when `loops` is false) following
/// <σ_u>h -> h⁻¹(u). Throws WitnessInvalid if the conditions fail and AssertionFailure if
/// the produced map does not verify.
inline ReconstructionResult reconstruct(const Multigraph& g, const RecognitionWitness& w, bool loops) {
  const RecognitionReport rep = loops ? check_with_loops(g, w) : check_simple(g, w);
  if (auto f = rep.first_failure()) throw WitnessInvalid(f->name + ": " + f->detail);
  detail::require(!w.C.empty(), "C must be nonempty");

  ReconstructionResult r;
  r.elements = w.H;
  std::sort(r.elements.begin() + 1, r.elements.end());
  std::map<Automorphism, int> index;
  for (std::size_t i = 0; i < r.elements.size(); ++i) index.emplace(r.elements[i], static_cast<int>(i));
  const int n = static_cast<int>(r.elements.size());
  std::vector<Element> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a * n + b)] =
          index.at(compose(r.elements[static_cast<std::size_t>(a)], r.elements[static_cast<std::size_t>(b)]));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back("h" + std::to_string(a));
  names[0] = "id";
  r.group = share(FiniteGroup::from_table("H", n, std::move(table), std::move(names)));
  const FiniteGroup& H = *r.group;

  std::vector<Element> sigma;
  for (int u : w.C) {
    std::vector<Element> stab;
    for (Element h = 0; h < n; ++h)
      if (r.elements[static_cast<std::size_t>(h)].v(u) == u) stab.push_back(h);
    std::optional<Element> best;
    for (Element h : stab)
      if (element_order(H, h) == static_cast<int>(stab.size()) &&
          (!best || r.elements[static_cast<std::size_t>(h)] < r.elements[static_cast<std::size_t>(*best)]))
        best = h;
    detail::ensure(best.has_value(), "cyclic stabiliser without generator");
    sigma.push_back(*best);
  }
  r.gens = GenMultiset::from_elements(H, sigma);
  r.graph = loops ? build_psi(r.group, r.gens) : build_phi(r.group, r.gens);

  // f : <σ_u>h -> h⁻¹(u),  f# : (.., h'') -> h''⁻¹#(x_0)
  GraphMap f;
  f.vertex_map.resize(static_cast<std::size_t>(r.graph.vertex_count()));
  for (int v = 0; v < r.graph.vertex_count(); ++v) {
    const int u = w.C[static_cast<std::size_t>(r.graph.level_of(v))];
    const Element h = r.graph.coset(v).rep;
    f.vertex_map[static_cast<std::size_t>(v)] = r.elements[static_cast<std::size_t>(H.inv(h))].v(u);
  }
  f.edge_map.resize(static_cast<std::size_t>(r.graph.edge_count()));
  for (int e = 0; e < r.graph.edge_count(); ++e) {
    const GEdge& ed = r.graph.edges[static_cast<std::size_t>(e)];
    const int u = w.C[static_cast<std::size_t>(r.graph.level_of(ed.u))];
    const int v = w.C[static_cast<std::size_t>(r.graph.level_of(ed.v))];
    const auto& between = g.edges_between(u, v);
    detail::ensure(!between.empty(), "C vertices without an edge");
    const int x0 = *std::min_element(between.begin(), between.end());
    f.edge_map[static_cast<std::size_t>(e)] = r.elements[static_cast<std::size_t>(H.inv(ed.label))].e(x0);
  }
  if (auto why = check_isomorphism(r.graph.multigraph(), g, f))
    throw AssertionFailure("reconstructed isomorphism does not verify: " + *why);
  r.iso = f.inverse();
  detail::ensure(verify_isomorphism(g, r.graph.multigraph(), r.iso), "inverse isomorphism does not verify");
  return r;
}

// ---------------------------------------------------------------------------
// Witness JSON: {"H_generators":[[...]], "H_edge_maps":[[...]], "C":[...]}
//
// Edge maps may be omitted; each edge is then sent to the unique edge joining the images
// of its endpoints, which requires every target multi-edge to be a single edge.

inline nlohmann::json witness_to_json(const RecognitionWitness& w) {
  nlohmann::json gens = nlohmann::json::array(), emaps = nlohmann::json::array();
  for (const Automorphism& a : w.generators) {
    gens.push_back(a.vertex_map);
    emaps.push_back(a.edge_map);
  }
  return {{"H_generators", gens}, {"H_edge_maps", emaps}, {"C", w.C}};
}

inline RecognitionWitness witness_from_json(const Multigraph& g, const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("H_generators") || !j.contains("C"))
      throw ParseError("witness JSON needs \"H_generators\" and \"C\"");
    std::vector<Automorphism> gens;
    const auto& hg = j.at("H_generators");
    const bool explicit_edges = j.contains("H_edge_maps");
    if (explicit_edges && j.at("H_edge_maps").size() != hg.size())
      throw ParseError("H_edge_maps must have one entry per generator");
    for (std::size_t i = 0; i < hg.size(); ++i) {
      Automorphism a;
      a.vertex_map = hg[i].get<std::vector<int>>();
      if (a.vertex_map.size() != static_cast<std::size_t>(g.vertex_count()))
        throw ParseError("generator " + std::to_string(i) + " has " + std::to_string(a.vertex_map.size()) +
                         " entries for " + std::to_string(g.vertex_count()) + " vertices");
      for (int x : a.vertex_map)
        if (!g.valid_vertex(x)) throw ParseError("generator " + std::to_string(i) + " maps outside the vertex set");
      if (explicit_edges) {
        a.edge_map = j.at("H_edge_maps")[i].get<std::vector<int>>();
        if (a.edge_map.size() != static_cast<std::size_t>(g.edge_count()))
          throw ParseError("edge map " + std::to_string(i) + " has wrong length");
      } else {
        a.edge_map.assign(static_cast<std::size_t>(g.edge_count()), -1);
        for (const Edge& e : g.edges()) {
          const auto& tgt = g.edges_between(a.v(e.u), a.v(e.v));
          if (tgt.size() > 1)
            throw ParseError("edge map of generator " + std::to_string(i) + " is not determined at edge " +
                             std::to_string(e.id) + "; supply H_edge_maps");
          if (tgt.size() == 1) a.edge_map[static_cast<std::size_t>(e.id)] = tgt.front();
        }
      }
      gens.push_back(std::move(a));
    }
    return make_witness(g, std::move(gens), j.at("C").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed witness JSON: ") + ex.what());
  }
}

}  // namespace ggraph
