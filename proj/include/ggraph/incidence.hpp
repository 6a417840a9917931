#pragma once

// Incidence (Levi) graphs and the bipartite incidence tests.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ggraph/algebra.hpp"
#include "ggraph/ggraph.hpp"
#include "ggraph/multigraph.hpp"
#include "ggraph/recognition.hpp"

namespace ggraph {

inline constexpr int kOrigVertex = 0;
inline constexpr int kOrigEdge = 1;

/// IΓ: vertices 0..|V|-1 are the source vertices (part 0), then one vertex per source edge
/// (part 1). A source loop contributes a single incidence edge.
struct IncidenceGraph {
  Multigraph graph;
  int source_vertices = 0;
  int source_edges = 0;
  bool has_source_loops = false;  ///< outside the setting of the incidence theorems
  std::vector<std::array<int, 2>> incidences;  ///< per source edge: incidence edge at its u end, at its v end (-1 for a loop)

  int edge_vertex(int e) const { return source_vertices + e; }
  bool is_edge_vertex(int v) const { return v >= source_vertices; }
  int source_edge(int v) const { return v - source_vertices; }
};

inline IncidenceGraph incidence_graph(const Multigraph& g) {
  IncidenceGraph ig;
  ig.source_vertices = g.vertex_count();
  ig.source_edges = g.edge_count();
  for (const Vertex& v : g.vertices()) ig.graph.add_vertex(v.label, kOrigVertex);
  for (const Edge& e : g.edges()) ig.graph.add_vertex("e" + std::to_string(e.id), kOrigEdge);
  for (const Edge& e : g.edges()) {
    std::array<int, 2> inc{-1, -1};
    inc[0] = ig.graph.add_edge(e.u, ig.edge_vertex(e.id));
    if (e.is_loop())
      ig.has_source_loops = true;
    else
      inc[1] = ig.graph.add_edge(e.v, ig.edge_vertex(e.id));
    ig.incidences.push_back(inc);
  }
  return ig;
}

inline bool stabilises_parts(const IncidenceGraph& ig, const GraphMap& m) {
  for (int v = 0; v < ig.graph.vertex_count(); ++v)
    if (ig.is_edge_vertex(v) != ig.is_edge_vertex(m.v(v))) return false;
  return true;
}

/// The canonical lift f -> f̃: f on source vertices, f# on edge-vertices.
inline Automorphism lift_automorphism(const Multigraph& g, const IncidenceGraph& ig, const Automorphism& f) {
  if (auto why = check_isomorphism(g, g, f)) throw PreconditionFailed("not an automorphism: " + *why);
  Automorphism r;
  r.vertex_map.resize(static_cast<std::size_t>(ig.graph.vertex_count()));
  for (int v = 0; v < ig.source_vertices; ++v) r.vertex_map[static_cast<std::size_t>(v)] = f.v(v);
  for (int e = 0; e < ig.source_edges; ++e)
    r.vertex_map[static_cast<std::size_t>(ig.edge_vertex(e))] = ig.edge_vertex(f.e(e));
  r.edge_map.resize(static_cast<std::size_t>(ig.graph.edge_count()));
  for (const Edge& a : ig.graph.edges()) {
    const auto& tgt = ig.graph.edges_between(r.v(a.u), r.v(a.v));
    detail::ensure(tgt.size() == 1, "incidence graph is not simple");
    r.edge_map[static_cast<std::size_t>(a.id)] = tgt.front();
  }
  detail::ensure(is_automorphism(ig.graph, r) && stabilises_parts(ig, r), "lift is not a part-stabilising automorphism");
  return r;
}

struct PreimageResult {
  Multigraph source;       ///< Γ' on V_s, one edge per <t>x
  IncidenceGraph incidence;
  IsoWitness iso;          ///< gg.multigraph() -> incidence.graph
};

/// For a simple Φ(G,{s,t}) with o(t) = 2 (either generator may play t), builds Γ' with
/// edge <t>x = {<s>x, <s>tx} and a verified isomorphism gg ≅ IΓ'.
inline PreimageResult incidence_preimage(const GGraph& gg) {
  detail::require(gg.level_count() == 2 && !gg.with_loops, "need Φ(G,S) with |S| = 2");
  const FiniteGroup& G = gg.G();
  int ls = 0, lt = 1;
  if (element_order(G, gg.gens[1].element) != 2) std::swap(ls, lt);
  detail::require(element_order(G, gg.gens[static_cast<std::size_t>(lt)].element) == 2, "need o(t) = 2");
  detail::require(gg.multigraph().is_simple(), "G-graph is not simple");
  const Element t = gg.gens[static_cast<std::size_t>(lt)].element;
  const Level& Ls = gg.levels[static_cast<std::size_t>(ls)];
  const Level& Lt = gg.levels[static_cast<std::size_t>(lt)];

  PreimageResult r;
  for (std::size_t c = 0; c < Ls.cosets.size(); ++c)
    r.source.add_vertex(gg.multigraph().vertex(Ls.first_vertex + static_cast<int>(c)).label);
  for (const Coset& c : Lt.cosets) {
    const Element x = c.rep;
    r.source.add_edge(Ls.coset_of[static_cast<std::size_t>(x)], Ls.coset_of[static_cast<std::size_t>(G.mul(t, x))]);
  }
  r.incidence = incidence_graph(r.source);

  r.iso.vertex_map.resize(static_cast<std::size_t>(gg.vertex_count()));
  for (int v = 0; v < gg.vertex_count(); ++v) {
    const int c = gg.vertices[static_cast<std::size_t>(v)].coset;
    r.iso.vertex_map[static_cast<std::size_t>(v)] = gg.level_of(v) == ls ? c : r.incidence.edge_vertex(c);
  }
  r.iso.edge_map.resize(static_cast<std::size_t>(gg.edge_count()));
  for (int e = 0; e < gg.edge_count(); ++e) {
    const GEdge& ed = gg.edges[static_cast<std::size_t>(e)];
    const auto& tgt = r.incidence.graph.edges_between(r.iso.v(ed.u), r.iso.v(ed.v));
    detail::ensure(tgt.size() == 1, "preimage incidence is not simple");
    r.iso.edge_map[static_cast<std::size_t>(e)] = tgt.front();
  }
  if (auto why = check_isomorphism(gg.multigraph(), r.incidence.graph, r.iso))
    throw AssertionFailure("preimage isomorphism does not verify: " + *why);
  return r;
}

struct IncidenceWitnessMap {
  std::vector<Element> f;
  int m = 0;  ///< f(s) = t^m  (sufficient direction)
  int n = 0;  ///< f(t) = s^n
  bool involutive = false;
  bool fixes_identity = false;
  bool is_homomorphism = false;
};

inline bool is_involutive(const std::vector<Element>& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[static_cast<std::size_t>(f[x])] != static_cast<Element>(x)) return false;
  return true;
}

inline bool is_homomorphism(const FiniteGroup& g, const std::vector<Element>& f) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (f[static_cast<std::size_t>(g.mul(a, b))] != g.mul(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

namespace detail {

/// The homomorphism with f(s) = fs, f(t) = ft, if it is well defined on G = <s,t>.
inline std::optional<std::vector<Element>> extend_homomorphism(const FiniteGroup& g, Element s, Element t, Element fs,
                                                               Element ft) {
  std::vector<Element> f(static_cast<std::size_t>(g.order()), -1);
  f[0] = g.identity();
  std::vector<Element> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (auto [gen, img] : {std::pair{s, fs}, std::pair{t, ft}}) {
      const Element y = g.mul(x, gen);
      const Element fy = g.mul(f[static_cast<std::size_t>(x)], img);
      if (f[static_cast<std::size_t>(y)] < 0) {
        f[static_cast<std::size_t>(y)] = fy;
        queue.push_back(y);
      } else if (f[static_cast<std::size_t>(y)] != fy) {
        return std::nullopt;
      }
    }
  }
  if (!is_homomorphism(g, f)) return std::nullopt;
  return f;
}

}  // namespace detail

/// Searches involutive endomorphisms f of G = <s,t> with f(s) = t^m, f(t) = s^n; candidates
/// in lexicographic (m, n) order. A result means IΦ(G,{s,t}) is a G-graph; no result proves nothing.
inline std::optional<IncidenceWitnessMap> sufficient_bipartite_test(const FiniteGroup& g, Element s, Element t) {
  detail::require(g.valid(s) && g.valid(t), "element out of range");
  detail::require(static_cast<int>(generated_subgroup(g, {s, t}).size()) == g.order(), "G is not generated by s and t");
  const int os = element_order(g, s), ot = element_order(g, t);
  for (int m = 0; m < ot; ++m) {
    for (int n = 0; n < os; ++n) {
      auto f = detail::extend_homomorphism(g, s, t, g.pow(t, m), g.pow(s, n));
      if (!f || !is_involutive(*f)) continue;
      IncidenceWitnessMap w;
      w.f = std::move(*f);
      w.m = m;
      w.n = n;
      w.involutive = true;
      w.fixes_identity = w.f[0] == g.identity();
      w.is_homomorphism = true;
      return w;
    }
  }
  return std::nullopt;
}

struct NecessaryResult {
  std::optional<IncidenceWitnessMap> witness;
  std::optional<Automorphism> tau;  ///< the level-swapping involution f was read from
  bool obstruction = false;         ///< certified: IΓ is not a G-graph
  std::uint64_t nodes = 0;
};

/// Searches order-2 automorphisms of a connected Φ(G,{s,t}) swapping the levels and
/// exchanging <s>e and <t>e, then reads f off the edge labels. If none exists the
/// contrapositive certifies that IΓ is not a G-graph.
inline NecessaryResult necessary_bipartite_witness(const GGraph& gg, std::uint64_t budget = 10'000'000) {
  detail::require(gg.level_count() == 2 && !gg.with_loops, "need Φ(G,S) with |S| = 2");
  const Multigraph& g = gg.multigraph();
  detail::require(connected_components(g).size() == 1, "G-graph is not connected");
  const FiniteGroup& G = gg.G();
  const Element s = gg.gens[0].element, t = gg.gens[1].element;
  const int a = gg.vertex_of(0, G.identity()), b = gg.vertex_of(1, G.identity());

  IsoOptions opts;
  opts.node_budget = budget;
  opts.allow = [&](int v, int w) {
    if (gg.level_of(v) == gg.level_of(w)) return false;
    if (v == a) return w == b;
    if (v == b) return w == a;
    return w != a && w != b;
  };

  NecessaryResult res;
  std::optional<std::vector<int>> found;
  std::uint64_t visits = 0;
  for_each_isomorphism(g, g, opts, [&](const GraphMap& m) {
    ++visits;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (m.v(m.v(v)) != v) return true;
    found = m.vertex_map;
    return false;
  });
  res.nodes = visits;
  if (!found) {
    res.obstruction = true;
    return res;
  }

  Automorphism tau;
  tau.vertex_map = *found;
  tau.edge_map.assign(static_cast<std::size_t>(g.edge_count()), -1);
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (const auto& [v, ids] : g.neighbors(u)) {
      if (v < u || tau.e(ids.front()) >= 0) continue;
      const auto& img = g.edges_between(tau.v(u), tau.v(v));
      detail::ensure(img.size() == ids.size(), "vertex map does not preserve multiplicity");
      const bool self = (tau.v(u) == u && tau.v(v) == v) || (tau.v(u) == v && tau.v(v) == u);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const int x = ids[i], y = self ? ids[i] : img[i];
        tau.edge_map[static_cast<std::size_t>(x)] = y;
        tau.edge_map[static_cast<std::size_t>(y)] = x;
      }
    }
  }
  if (auto why = check_isomorphism(g, g, tau)) throw AssertionFailure("level swap is not an automorphism: " + *why);

  IncidenceWitnessMap w;
  w.f.resize(static_cast<std::size_t>(G.order()));
  for (int e = 0; e < gg.edge_count(); ++e)
    w.f[static_cast<std::size_t>(gg.edges[static_cast<std::size_t>(e)].label)] =
        gg.edges[static_cast<std::size_t>(tau.e(e))].label;
  w.involutive = is_involutive(w.f);
  w.fixes_identity = w.f[0] == G.identity();
  w.is_homomorphism = is_homomorphism(G, w.f);
  const auto hs = cyclic_subgroup(G, s), ht = cyclic_subgroup(G, t);
  auto in = [](const std::vector<Element>& sorted, Element x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
  for (Element x = 0; x < G.order(); ++x) {
    const Element fx_inv = G.inv(w.f[static_cast<std::size_t>(x)]);
    detail::ensure(in(ht, G.mul(w.f[static_cast<std::size_t>(G.mul(s, x))], fx_inv)), "displacement by s fails");
    detail::ensure(in(hs, G.mul(w.f[static_cast<std::size_t>(G.mul(t, x))], fx_inv)), "displacement by t fails");
  }
  detail::ensure(w.involutive && w.fixes_identity, "witness is not an involution fixing e");
  res.witness = std::move(w);
  res.tau = std::move(tau);
  return res;
}

struct IncidenceRecognition {
  IncidenceGraph incidence;
  RecognitionWitness witness;  ///< H = <τ̃, δ̃_s>, C = {edge-vertex of the e edge, <s>e}
};

/// The (H, C) of the converse direction, built on IΦ(G,{s,t}) from a homomorphism witness.
inline IncidenceRecognition incidence_recognition_witness(const GGraph& gg, const IncidenceWitnessMap& w) {
  detail::require(gg.level_count() == 2 && !gg.with_loops, "need Φ(G,S) with |S| = 2");
  detail::require(w.is_homomorphism && w.involutive, "witness must be an involutive homomorphism");
  const FiniteGroup& G = gg.G();
  const Multigraph& g = gg.multigraph();
  IncidenceRecognition r;
  r.incidence = incidence_graph(g);

  Automorphism tau;
  tau.vertex_map.resize(static_cast<std::size_t>(gg.vertex_count()));
  for (int v = 0; v < gg.vertex_count(); ++v)
    tau.vertex_map[static_cast<std::size_t>(v)] =
        gg.vertex_of(1 - gg.level_of(v), w.f[static_cast<std::size_t>(gg.coset(v).rep)]);
  tau.edge_map.resize(static_cast<std::size_t>(gg.edge_count()));
  for (int e = 0; e < gg.edge_count(); ++e)
    tau.edge_map[static_cast<std::size_t>(e)] =
        gg.link_id(0, 1, w.f[static_cast<std::size_t>(gg.edges[static_cast<std::size_t>(e)].label)]);

  const Automorphism lt = lift_automorphism(g, r.incidence, tau);
  const Automorphism ls = lift_automorphism(g, r.incidence, shift(gg, gg.gens[0].element).map);
  r.witness = make_witness(r.incidence.graph, {lt, ls},
                           {r.incidence.edge_vertex(gg.link_id(0, 1, G.identity())), gg.vertex_of(0, G.identity())});
  return r;
}

inline nlohmann::json to_json(const IncidenceWitnessMap& w) {
  return {{"f", w.f}, {"involutive", w.involutive}, {"homomorphism", w.is_homomorphism}};
}

inline IncidenceWitnessMap incidence_witness_from_json(const FiniteGroup& g, const nlohmann::json& j) {
  try {
    IncidenceWitnessMap w;
    w.f = j.at("f").get<std::vector<Element>>();
    if (w.f.size() != static_cast<std::size_t>(g.order())) throw ParseError("\"f\" must have one entry per element");
    for (Element x : w.f)
      if (!g.valid(x)) throw ParseError("\"f\" has an entry outside the group");
    w.involutive = is_involutive(w.f);
    w.fixes_identity = w.f[0] == g.identity();
    w.is_homomorphism = is_homomorphism(g, w.f);
    return w;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed witness JSON: ") + ex.what());
  }
}

}  // namespace ggraph
