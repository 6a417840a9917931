#pragma once

// G-graphs Φ(G,S) and Ψ(G,S).
//
// Every occurrence of a generator in S is a level whose vertices are the right
// cosets <s>x. Two vertices on distinct levels are joined by one edge labeled g
// for each g in their intersection; Ψ adds o(s) labeled loops per vertex.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ggraph/algebra.hpp"
#include "ggraph/multigraph.hpp"
#include "ggraph/numtheory.hpp"

namespace ggraph {

struct Level {
  GenItem gen;
  std::vector<Coset> cosets;    ///< ordered by representative
  std::vector<int> coset_of;    ///< element -> index into `cosets`
  int first_vertex = 0;
};

struct GVertex {
  int level = 0;
  int coset = 0;
};

struct GEdge {
  int u = 0;
  int v = 0;
  Element label = 0;
  bool is_loop() const noexcept { return u == v; }
};

class GGraph {
 public:
  GroupPtr group;
  GenMultiset gens;
  std::vector<Level> levels;
  std::vector<GVertex> vertices;
  std::vector<GEdge> edges;
  bool with_loops = false;

  const FiniteGroup& G() const { return *group; }
  int vertex_count() const noexcept { return static_cast<int>(vertices.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges.size()); }
  int level_count() const noexcept { return static_cast<int>(levels.size()); }

  /// Vertex of level i containing element x.
  int vertex_of(int level, Element x) const {
    const Level& lv = levels[static_cast<std::size_t>(level)];
    return lv.first_vertex + lv.coset_of[static_cast<std::size_t>(x)];
  }

  int level_of(int v) const { return vertices[static_cast<std::size_t>(v)].level; }

  const Coset& coset(int v) const {
    const GVertex& gv = vertices[static_cast<std::size_t>(v)];
    return levels[static_cast<std::size_t>(gv.level)].cosets[static_cast<std::size_t>(gv.coset)];
  }

  /// Id of the link between levels i < j labeled x, as laid out by the builders.
  int link_id(int i, int j, Element x) const {
    if (i > j) std::swap(i, j);
    const int k = level_count();
    const int pair = i * k - i * (i + 1) / 2 + (j - i - 1);
    return pair * G().order() + x;
  }

  int loop_id(int i, Element x) const {
    const int k = level_count();
    return (k * (k - 1) / 2 + i) * G().order() + x;
  }

  /// Underlying multigraph: part tag = level index, edge labels = element names.
  const Multigraph& multigraph() const { return view_; }

  /// Rebuilds the multigraph view after `edges` was modified directly.
  void refresh_view() {
    Multigraph m;
    for (const GVertex& v : vertices) {
      const Level& lv = levels[static_cast<std::size_t>(v.level)];
      std::string label = "<" + G().element_name(lv.gen.element) + ">" +
                          G().element_name(lv.cosets[static_cast<std::size_t>(v.coset)].rep);
      if (lv.gen.occurrence > 0) label += "#" + std::to_string(lv.gen.occurrence);
      m.add_vertex(std::move(label), v.level);
    }
    for (const GEdge& e : edges) m.add_edge(e.u, e.v, G().element_name(e.label));
    view_ = std::move(m);
  }

 private:
  Multigraph view_;
};

namespace detail {

inline GGraph build_ggraph(GroupPtr group, const GenMultiset& gens, bool loops) {
  detail::require(gens.size() > 0, "generator multiset must be nonempty");
  const FiniteGroup& g = *group;
  GGraph gg;
  gg.group = std::move(group);
  gg.gens = gens;
  gg.with_loops = loops;
  for (const GenItem& item : gens) {
    Level lv;
    lv.gen = item;
    lv.cosets = right_cosets(g, item.element);
    lv.coset_of.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t c = 0; c < lv.cosets.size(); ++c)
      for (Element x : lv.cosets[c].elements) lv.coset_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
    lv.first_vertex = static_cast<int>(gg.vertices.size());
    for (std::size_t c = 0; c < lv.cosets.size(); ++c)
      gg.vertices.push_back({static_cast<int>(gg.levels.size()), static_cast<int>(c)});
    gg.levels.push_back(std::move(lv));
  }
  const int k = gg.level_count();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (Element x = 0; x < g.order(); ++x) gg.edges.push_back({gg.vertex_of(i, x), gg.vertex_of(j, x), x});
  if (loops)
    for (int i = 0; i < k; ++i)
      for (Element x = 0; x < g.order(); ++x) {
        const int v = gg.vertex_of(i, x);
        gg.edges.push_back({v, v, x});
      }
  gg.refresh_view();
  return gg;
}

}  // namespace detail

/// Φ(G,S).
inline GGraph build_phi(GroupPtr group, const GenMultiset& gens) { return detail::build_ggraph(std::move(group), gens, false); }

/// Ψ(G,S): Φ(G,S) plus one loop labeled x on <s>x for each x in the coset.
inline GGraph build_psi(GroupPtr group, const GenMultiset& gens) { return detail::build_ggraph(std::move(group), gens, true); }

inline GGraph build_phi(GroupPtr group, const std::vector<Element>& gens) {
  auto s = GenMultiset::from_elements(*group, gens);
  return build_phi(std::move(group), s);
}

inline GGraph build_psi(GroupPtr group, const std::vector<Element>& gens) {
  auto s = GenMultiset::from_elements(*group, gens);
  return build_psi(std::move(group), s);
}

/// The shift δ_g: <s>x -> <s>xg on vertices, label h -> hg on edges.
struct Shift {
  Element g = 0;
  GraphMap map;
};

inline Shift shift(const GGraph& gg, Element g) {
  detail::require(gg.G().valid(g), "element out of range");
  Shift s;
  s.g = g;
  s.map.vertex_map.resize(static_cast<std::size_t>(gg.vertex_count()));
  for (int v = 0; v < gg.vertex_count(); ++v)
    s.map.vertex_map[static_cast<std::size_t>(v)] = gg.vertex_of(gg.level_of(v), gg.G().mul(gg.coset(v).rep, g));
  s.map.edge_map.resize(static_cast<std::size_t>(gg.edge_count()));
  for (int e = 0; e < gg.edge_count(); ++e) {
    const GEdge& ed = gg.edges[static_cast<std::size_t>(e)];
    const Element h = gg.G().mul(ed.label, g);
    const int a = gg.level_of(ed.u), b = gg.level_of(ed.v);
    s.map.edge_map[static_cast<std::size_t>(e)] = ed.is_loop() ? gg.loop_id(a, h) : gg.link_id(a, b, h);
  }
  return s;
}

/// C_g: the vertex of each level that contains g.
inline std::vector<int> colour_clique(const GGraph& gg, Element g) {
  detail::require(gg.G().valid(g), "element out of range");
  std::vector<int> out;
  for (int i = 0; i < gg.level_count(); ++i) out.push_back(gg.vertex_of(i, g));
  return out;
}

/// Vertex ids of level i (the i-th occurrence in S).
inline std::vector<int> level(const GGraph& gg, int i) {
  detail::require(i >= 0 && i < gg.level_count(), "level out of range");
  const Level& lv = gg.levels[static_cast<std::size_t>(i)];
  std::vector<int> out(lv.cosets.size());
  std::iota(out.begin(), out.end(), lv.first_vertex);
  return out;
}

// ---------------------------------------------------------------------------
// Structure report

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct StructureReport {
  std::array<CheckResult, 5> items;
  bool all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckResult& r) { return r.pass; });
  }
};

/// Checks the five structural properties of a G-graph against its raw edge list:
///  1. g -> δ_g is injective, each δ_g an automorphism, δ_h ∘ δ_g = δ_{gh};
///  2. every shift stabilises every level;
///  3. δ_{g'}(C_g) = C_{gg'};
///  4. |G| edges between any two distinct levels, one per label (and |G| loops per level for Ψ);
///  5. the labels of every multi-edge <s>x<t>y form the coset (<s>∩<t>)h = <s>x ∩ <t>y.
inline StructureReport verify_structure(const GGraph& gg) {
  StructureReport rep;
  rep.items[0].name = "shifts form a group isomorphic to G";
  rep.items[1].name = "shifts stabilise levels";
  rep.items[2].name = "shifts permute colour cliques";
  rep.items[3].name = "edge counts per level pair";
  rep.items[4].name = "multi-edge labels form a coset";
  const FiniteGroup& G = gg.G();
  const Multigraph& mg = gg.multigraph();
  const int n = G.order();
  auto fail = [](CheckResult& r, std::string why) {
    if (r.pass) {
      r.pass = false;
      r.detail = std::move(why);
    }
  };

  std::vector<Shift> shifts;
  shifts.reserve(static_cast<std::size_t>(n));
  for (Element g = 0; g < n; ++g) shifts.push_back(shift(gg, g));

  // 1
  {
    auto& r = rep.items[0];
    for (Element g = 0; g < n && r.pass; ++g)
      if (auto why = check_isomorphism(mg, mg, shifts[static_cast<std::size_t>(g)].map))
        fail(r, "δ_" + G.element_name(g) + " is not an automorphism: " + *why);
    std::set<GraphMap> distinct;
    for (const Shift& s : shifts) distinct.insert(s.map);
    if (static_cast<int>(distinct.size()) != n)
      fail(r, "only " + std::to_string(distinct.size()) + " distinct shifts for |G| = " + std::to_string(n));
    if (!shifts.front().map.is_identity()) fail(r, "δ_e is not the identity");
    for (Element g = 0; g < n && r.pass; ++g)
      for (Element h = 0; h < n && r.pass; ++h)
        if (compose(shifts[static_cast<std::size_t>(h)].map, shifts[static_cast<std::size_t>(g)].map) !=
            shifts[static_cast<std::size_t>(G.mul(g, h))].map)
          fail(r, "δ_" + G.element_name(h) + " ∘ δ_" + G.element_name(g) + " != δ_" + G.element_name(G.mul(g, h)));
  }
  // 2
  {
    auto& r = rep.items[1];
    for (Element g = 0; g < n && r.pass; ++g)
      for (int i = 0; i < gg.level_count() && r.pass; ++i)
        for (int v : level(gg, i))
          if (gg.level_of(shifts[static_cast<std::size_t>(g)].map.v(v)) != i) {
            fail(r, "δ_" + G.element_name(g) + " moves vertex " + std::to_string(v) + " off level " + std::to_string(i));
            break;
          }
  }
  // 3
  {
    auto& r = rep.items[2];
    for (Element g = 0; g < n && r.pass; ++g) {
      const auto cg = colour_clique(gg, g);
      for (Element h = 0; h < n && r.pass; ++h) {
        std::vector<int> img;
        for (int v : cg) img.push_back(shifts[static_cast<std::size_t>(h)].map.v(v));
        if (img != colour_clique(gg, G.mul(g, h)))
          fail(r, "δ_" + G.element_name(h) + "(C_" + G.element_name(g) + ") != C_" + G.element_name(G.mul(g, h)));
      }
    }
  }
  // 4
  {
    auto& r = rep.items[3];
    const int k = gg.level_count();
    std::vector<std::vector<std::vector<int>>> seen(
        static_cast<std::size_t>(k), std::vector<std::vector<int>>(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0)));
    for (const GEdge& e : gg.edges) {
      int a = gg.level_of(e.u), b = gg.level_of(e.v);
      if (a > b) std::swap(a, b);
      if (e.label < 0 || e.label >= n) {
        fail(r, "edge label out of range");
        continue;
      }
      ++seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(e.label)];
    }
    long long total_expected = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a; b < k; ++b) {
        if (a == b && !gg.with_loops) {
          for (int c : seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
            if (c) fail(r, "edge inside level " + std::to_string(a));
          continue;
        }
        total_expected += n;
        for (Element x = 0; x < n; ++x)
          if (seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(x)] != 1)
            fail(r, "levels " + std::to_string(a) + "," + std::to_string(b) + " carry label " + G.element_name(x) + " " +
                        std::to_string(seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(x)]) +
                        " times");
      }
    if (static_cast<long long>(gg.edges.size()) != total_expected)
      fail(r, "edge count " + std::to_string(gg.edges.size()) + " != |G| * |P2(S)| = " + std::to_string(total_expected));
  }
  // 5
  {
    auto& r = rep.items[4];
    std::map<std::pair<int, int>, std::vector<Element>> multi;
    for (const GEdge& e : gg.edges)
      if (!e.is_loop()) multi[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.label);
    for (auto& [uv, labels] : multi) {
      if (!r.pass) break;
      const auto [u, v] = uv;
      const Coset& cu = gg.coset(u);
      const Coset& cv = gg.coset(v);
      std::vector<Element> common;
      std::set_intersection(cu.elements.begin(), cu.elements.end(), cv.elements.begin(), cv.elements.end(),
                            std::back_inserter(common));
      std::sort(labels.begin(), labels.end());
      const auto su = cyclic_subgroup(G, cu.generator), sv = cyclic_subgroup(G, cv.generator);
      std::vector<Element> meet;
      std::set_intersection(su.begin(), su.end(), sv.begin(), sv.end(), std::back_inserter(meet));
      std::vector<Element> coset;
      for (Element w : meet) coset.push_back(G.mul(w, labels.front()));
      std::sort(coset.begin(), coset.end());
      if (labels != coset || labels != common)
        fail(r, "labels of multi-edge " + std::to_string(u) + "-" + std::to_string(v) + " are not <s>x ∩ <t>y");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Components

struct ComponentReport {
  int count = 0;
  int expected_count = 0;                       ///< [G : <S>]
  std::vector<std::vector<int>> components;     ///< vertex ids
  std::vector<std::vector<Element>> cosets;     ///< right coset of <S> covered by each component
  bool cosets_ok = true;
  bool isomorphic_ok = true;
  bool pass() const { return count == expected_count && cosets_ok && isomorphic_ok; }
};

/// Splits Φ(G,S) into components, checks there are [G:<S>] of them, each covering one
/// right coset of <S>, each isomorphic to Φ(<S>,S).
inline ComponentReport component_analysis(const GGraph& gg, const IsoOptions& opts = {}) {
  const FiniteGroup& G = gg.G();
  ComponentReport rep;
  const auto sub_elems = generated_subgroup(G, gg.gens.elements());
  rep.expected_count = G.order() / static_cast<int>(sub_elems.size());
  rep.components = connected_components(gg.multigraph());
  rep.count = static_cast<int>(rep.components.size());

  Subgroup sub = make_subgroup(G, sub_elems, "<S>");
  std::vector<Element> sub_gens;
  for (Element s : gg.gens.elements()) sub_gens.push_back(sub.from_parent[static_cast<std::size_t>(s)]);
  const GroupPtr sub_group = share(std::move(sub.group));
  const GGraph model = detail::build_ggraph(sub_group, GenMultiset::from_elements(*sub_group, sub_gens), gg.with_loops);

  std::set<std::vector<Element>> seen_cosets;
  for (const auto& comp : rep.components) {
    std::vector<Element> cov;
    for (int v : comp)
      if (gg.level_of(v) == 0) cov.insert(cov.end(), gg.coset(v).elements.begin(), gg.coset(v).elements.end());
    std::sort(cov.begin(), cov.end());
    std::vector<Element> expect;
    for (Element w : sub_elems) expect.push_back(G.mul(w, cov.empty() ? 0 : cov.front()));
    std::sort(expect.begin(), expect.end());
    if (cov != expect || !seen_cosets.insert(cov).second) rep.cosets_ok = false;
    rep.cosets.push_back(std::move(cov));
    if (rep.isomorphic_ok && !isomorphic(induced_subgraph(gg.multigraph(), comp), model.multigraph(), opts))
      rep.isomorphic_ok = false;
  }
  return rep;
}

/// k disjoint copies of a connected Φ(G,S), realised as Φ(G × Z/k, {(s,0)}).
inline GGraph replicate_components(const GGraph& gg0, int k) {
  detail::require(k >= 1, "number of copies must be positive");
  detail::require(connected_components(gg0.multigraph()).size() == 1, "replicate_components needs a connected G-graph");
  FiniteGroup prod = direct_product(gg0.G(), cyclic_group(k));
  std::vector<Element> gens;
  for (Element s : gg0.gens.elements()) gens.push_back(s * k);
  auto group = share(std::move(prod));
  return detail::build_ggraph(group, GenMultiset::from_elements(*group, gens), gg0.with_loops);
}

/// True iff every element of <s,t> is s^m t^n.
inline bool is_pairwise_product_closed(const FiniteGroup& g, Element s, Element t) {
  const auto sub = generated_subgroup(g, {s, t});
  std::vector<bool> hit(static_cast<std::size_t>(g.order()), false);
  const int os = element_order(g, s), ot = element_order(g, t);
  for (int m = 0; m < os; ++m)
    for (int n = 0; n < ot; ++n) hit[static_cast<std::size_t>(g.mul(g.pow(s, m), g.pow(t, n)))] = true;
  return std::all_of(sub.begin(), sub.end(), [&](Element x) { return hit[static_cast<std::size_t>(x)]; });
}

/// Whether Φ(<s,t>,{s,t}) is complete bipartite, decided on the graph itself.
inline bool generated_pair_is_complete_bipartite(const FiniteGroup& g, Element s, Element t) {
  const auto elems = generated_subgroup(g, {s, t});
  Subgroup sub = make_subgroup(g, elems);
  const Element ss = sub.from_parent[static_cast<std::size_t>(s)], tt = sub.from_parent[static_cast<std::size_t>(t)];
  const GGraph gg = build_phi(share(std::move(sub.group)), std::vector<Element>{ss, tt});
  return is_complete_bipartite_multi(gg.multigraph()).has_value();
}

// ---------------------------------------------------------------------------
// K^l_{m,n} as an abelian G-graph

struct KmnPlan {
  int m = 0, n = 0, l = 0;
  std::vector<std::int64_t> I, J;   ///< primes of l with v_p(m) >= v_p(n), resp. <
  std::int64_t l1 = 1, l2 = 1, d1 = 1, d2 = 1;
  GroupPtr group;                   ///< Z/(m l1) x Z/(n l2)
  Element s = 0, t = 0;
  int order_s = 0, order_t = 0;
};

inline KmnPlan kmn_plan(int m, int n, int l) {
  detail::require(m >= 1 && n >= 1 && l >= 1, "m, n, l must be positive");
  using numtheory::ipow;
  using numtheory::valuation;
  KmnPlan p;
  p.m = m;
  p.n = n;
  p.l = l;
  for (std::int64_t q : numtheory::prime_factors(l)) {
    if (valuation(q, m) >= valuation(q, n)) {
      p.I.push_back(q);
      p.l1 *= ipow(q, valuation(q, l));
      p.d2 *= ipow(q, valuation(q, n));
    } else {
      p.J.push_back(q);
      p.l2 *= ipow(q, valuation(q, l));
      p.d1 *= ipow(q, valuation(q, m));
    }
  }
  const int a = static_cast<int>(m * p.l1), b = static_cast<int>(n * p.l2);
  p.group = share(direct_product(cyclic_group(a), cyclic_group(b)));
  // (x, y) is encoded as x * b + y
  const int s_second = static_cast<int>(numtheory::mod(n / p.d1, b));
  const int t_first = static_cast<int>(numtheory::mod(m / p.d2, a));
  p.s = (1 % a) * b + s_second;
  p.t = t_first * b + (1 % b);
  p.order_s = element_order(*p.group, p.s);
  p.order_t = element_order(*p.group, p.t);
  return p;
}

struct KmnResult {
  GGraph graph;
  CompleteBipartite shape;   ///< (|V_t|, |V_s|, l), read from the part holding V_t
  int level_s_size = 0;
  int level_t_size = 0;
};

/// Builds Φ(G,{s,t}) from the plan and checks it is K^l_{m,n} with |V_s| = n and |V_t| = m.
/// Throws AssertionFailure if any of the guaranteed properties fails.
inline KmnResult kmn_build(const KmnPlan& p) {
  KmnResult r{build_phi(p.group, std::vector<Element>{p.s, p.t}), {}, 0, 0};
  r.level_s_size = static_cast<int>(r.graph.levels[0].cosets.size());
  r.level_t_size = static_cast<int>(r.graph.levels[1].cosets.size());
  const auto shape = is_complete_bipartite_multi(r.graph.multigraph(), r.graph.levels[1].first_vertex);
  detail::ensure(shape.has_value(), "kmn: graph is not complete bipartite");
  r.shape = *shape;
  detail::ensure(p.order_s == p.m * p.l && p.order_t == p.n * p.l, "kmn: generator orders differ from ml, nl");
  detail::ensure(p.l1 * p.l2 == p.l, "kmn: l1 * l2 != l");
  const int g = std::gcd(p.m, p.n);
  detail::ensure(g % p.d1 == 0 && g % p.d2 == 0, "kmn: d1 or d2 does not divide gcd(m,n)");
  detail::ensure(r.level_s_size == p.n && r.level_t_size == p.m, "kmn: level sizes differ from (n, m)");
  detail::ensure(r.shape == CompleteBipartite{p.m, p.n, p.l}, "kmn: shape differs from K^l_{m,n}");
  return r;
}

// ---------------------------------------------------------------------------
// JSON: the multigraph format plus "levels" and a per-edge "glabel"

inline nlohmann::json to_json(const GGraph& gg) {
  nlohmann::json j = to_json(gg.multigraph());
  for (std::size_t e = 0; e < gg.edges.size(); ++e) j["edges"][e]["glabel"] = gg.edges[e].label;
  nlohmann::json levels = nlohmann::json::array();
  for (const Level& lv : gg.levels) {
    nlohmann::json cosets = nlohmann::json::array();
    for (const Coset& c : lv.cosets) cosets.push_back(c.elements);
    levels.push_back({{"gen", gg.G().element_name(lv.gen.element)}, {"occurrence", lv.gen.occurrence}, {"cosets", cosets}});
  }
  j["levels"] = std::move(levels);
  return j;
}

}  // namespace ggraph
