#pragma once

// Undirected labeled multigraphs with loops and parallel edges.
//
// Vertex and edge ids are dense (0..count-1). Each parallel edge is stored on
// its own so it can carry its own label.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ggraph/errors.hpp"

namespace ggraph {

struct Vertex {
  int id = 0;
  std::string label;
  std::optional<int> part;
};

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  std::optional<std::string> label;

  bool is_loop() const noexcept { return u == v; }
  int other(int w) const noexcept { return w == u ? v : u; }
};

class Multigraph {
 public:
  int add_vertex(std::string label = {}, std::optional<int> part = std::nullopt) {
    const int id = vertex_count();
    vertices_.push_back({id, label.empty() ? std::to_string(id) : std::move(label), part});
    incident_.emplace_back();
    neighbors_.emplace_back();
    return id;
  }

  int add_edge(int u, int v, std::optional<std::string> label = std::nullopt) {
    detail::require(valid_vertex(u) && valid_vertex(v), "edge endpoint out of range");
    const int id = edge_count();
    edges_.push_back({id, u, v, std::move(label)});
    incident_[static_cast<std::size_t>(u)].push_back(id);
    neighbors_[static_cast<std::size_t>(u)][v].push_back(id);
    if (u != v) {
      incident_[static_cast<std::size_t>(v)].push_back(id);
      neighbors_[static_cast<std::size_t>(v)][u].push_back(id);
    }
    return id;
  }

  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  bool valid_vertex(int v) const noexcept { return v >= 0 && v < vertex_count(); }

  const Vertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Ids of edges incident to v (a loop appears once).
  const std::vector<int>& incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }

  /// Neighbor -> ids of the edges joining v to it (including v itself for loops).
  const std::map<int, std::vector<int>>& neighbors(int v) const { return neighbors_[static_cast<std::size_t>(v)]; }

  const std::vector<int>& edges_between(int u, int v) const {
    static const std::vector<int> none;
    const auto& nb = neighbors_[static_cast<std::size_t>(u)];
    auto it = nb.find(v);
    return it == nb.end() ? none : it->second;
  }

  int multiplicity(int u, int v) const { return static_cast<int>(edges_between(u, v).size()); }

  bool has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
  }

  /// No loops and no parallel edges.
  bool is_simple() const {
    for (int v = 0; v < vertex_count(); ++v)
      for (const auto& [w, ids] : neighbors(v))
        if (w == v || ids.size() > 1) return false;
    return true;
  }

  void set_edge_label(int e, std::optional<std::string> label) { edges_[static_cast<std::size_t>(e)].label = std::move(label); }
  void set_part(int v, std::optional<int> part) { vertices_[static_cast<std::size_t>(v)].part = part; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::map<int, std::vector<int>>> neighbors_;
};

/// Number of incident edges, loops counted twice.
inline int degree(const Multigraph& g, int v) {
  detail::require(g.valid_vertex(v), "vertex out of range");
  int d = 0;
  for (int e : g.incident(v)) d += g.edge(e).is_loop() ? 2 : 1;
  return d;
}

inline int loop_count(const Multigraph& g, int v) { return g.multiplicity(v, v); }

/// Connected components, each sorted, ordered by least vertex.
inline std::vector<std::vector<int>> connected_components(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = c;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (const auto& [w, ids] : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

/// A proper 2-colouring (colour 0 on the least vertex of each component), if any.
inline std::optional<std::vector<int>> is_bipartite(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [w, ids] : g.neighbors(v)) {
        if (w == v) return std::nullopt;
        int& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

/// Parameters of a complete bipartite multigraph K^l_{m,n}. `m` is the size of the
/// part holding the anchor vertex (vertex 0 unless asked otherwise).
struct CompleteBipartite {
  int m = 0;
  int n = 0;
  int l = 0;
  bool operator==(const CompleteBipartite&) const = default;
};

/// (m, n, l) when g is loop-free, bipartite with parts of sizes m and n, every cross pair
/// adjacent, and every multi-edge of the same multiplicity l.
inline std::optional<CompleteBipartite> is_complete_bipartite_multi(const Multigraph& g, int anchor = 0) {
  if (g.vertex_count() < 2 || g.has_loops()) return std::nullopt;
  detail::require(g.valid_vertex(anchor), "anchor vertex out of range");
  const auto color = is_bipartite(g);
  if (!color) return std::nullopt;
  const int side = (*color)[static_cast<std::size_t>(anchor)];
  std::vector<int> a, b;
  for (int v = 0; v < g.vertex_count(); ++v) ((*color)[static_cast<std::size_t>(v)] == side ? a : b).push_back(v);
  if (a.empty() || b.empty()) return std::nullopt;
  const int l = g.multiplicity(a.front(), b.front());
  if (l == 0) return std::nullopt;
  for (int u : a)
    for (int v : b)
      if (g.multiplicity(u, v) != l) return std::nullopt;
  return CompleteBipartite{static_cast<int>(a.size()), static_cast<int>(b.size()), l};
}

/// Γ[X]: vertices X (renumbered in ascending order) and every edge with both ends in X.
inline Multigraph induced_subgraph(const Multigraph& g, std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  Multigraph h;
  for (int x : xs) {
    detail::require(g.valid_vertex(x), "vertex out of range");
    pos[static_cast<std::size_t>(x)] = h.add_vertex(g.vertex(x).label, g.vertex(x).part);
  }
  for (const Edge& e : g.edges())
    if (pos[static_cast<std::size_t>(e.u)] >= 0 && pos[static_cast<std::size_t>(e.v)] >= 0)
      h.add_edge(pos[static_cast<std::size_t>(e.u)], pos[static_cast<std::size_t>(e.v)], e.label);
  return h;
}

/// A pair (f, f#) of vertex and edge maps. Used for isomorphisms and automorphisms.
struct GraphMap {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;

  bool operator==(const GraphMap&) const = default;
  auto operator<=>(const GraphMap&) const = default;

  static GraphMap identity(const Multigraph& g) {
    GraphMap m;
    m.vertex_map.resize(static_cast<std::size_t>(g.vertex_count()));
    m.edge_map.resize(static_cast<std::size_t>(g.edge_count()));
    for (int i = 0; i < g.vertex_count(); ++i) m.vertex_map[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < g.edge_count(); ++i) m.edge_map[static_cast<std::size_t>(i)] = i;
    return m;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < vertex_map.size(); ++i)
      if (vertex_map[i] != static_cast<int>(i)) return false;
    for (std::size_t i = 0; i < edge_map.size(); ++i)
      if (edge_map[i] != static_cast<int>(i)) return false;
    return true;
  }

  int v(int x) const { return vertex_map[static_cast<std::size_t>(x)]; }
  int e(int x) const { return edge_map[static_cast<std::size_t>(x)]; }

  GraphMap inverse() const {
    GraphMap r;
    r.vertex_map.assign(vertex_map.size(), -1);
    r.edge_map.assign(edge_map.size(), -1);
    for (std::size_t i = 0; i < vertex_map.size(); ++i)
      if (vertex_map[i] >= 0) r.vertex_map[static_cast<std::size_t>(vertex_map[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < edge_map.size(); ++i)
      if (edge_map[i] >= 0) r.edge_map[static_cast<std::size_t>(edge_map[i])] = static_cast<int>(i);
    return r;
  }
};

using IsoWitness = GraphMap;
using Automorphism = GraphMap;

/// (a ∘ b): apply b first, then a. Entries of -1 (undefined) propagate.
inline GraphMap compose(const GraphMap& a, const GraphMap& b) {
  GraphMap r;
  r.vertex_map.resize(b.vertex_map.size());
  r.edge_map.resize(b.edge_map.size());
  for (std::size_t i = 0; i < b.vertex_map.size(); ++i)
    r.vertex_map[i] = b.vertex_map[i] < 0 ? -1 : a.vertex_map[static_cast<std::size_t>(b.vertex_map[i])];
  for (std::size_t i = 0; i < b.edge_map.size(); ++i)
    r.edge_map[i] = b.edge_map[i] < 0 ? -1 : a.edge_map[static_cast<std::size_t>(b.edge_map[i])];
  return r;
}

/// Independent check that (f, f#) maps g1 isomorphically onto g2. In strict mode edge
/// labels and vertex part tags must also be preserved. Returns a failure description.
inline std::optional<std::string> check_isomorphism(const Multigraph& g1, const Multigraph& g2, const GraphMap& w,
                                                    bool strict = false) {
  if (g1.vertex_count() != g2.vertex_count()) return "vertex counts differ";
  if (g1.edge_count() != g2.edge_count()) return "edge counts differ";
  if (w.vertex_map.size() != static_cast<std::size_t>(g1.vertex_count())) return "vertex map has wrong size";
  if (w.edge_map.size() != static_cast<std::size_t>(g1.edge_count())) return "edge map has wrong size";
  std::vector<bool> hit(static_cast<std::size_t>(g2.vertex_count()), false);
  for (int v = 0; v < g1.vertex_count(); ++v) {
    const int fv = w.v(v);
    if (!g2.valid_vertex(fv) || hit[static_cast<std::size_t>(fv)]) return "vertex map is not a bijection at " + std::to_string(v);
    hit[static_cast<std::size_t>(fv)] = true;
    if (strict && g1.vertex(v).part != g2.vertex(fv).part) return "part tag differs at vertex " + std::to_string(v);
  }
  std::vector<bool> ehit(static_cast<std::size_t>(g2.edge_count()), false);
  for (const Edge& a : g1.edges()) {
    const int fa = w.e(a.id);
    if (fa < 0 || fa >= g2.edge_count() || ehit[static_cast<std::size_t>(fa)])
      return "edge map is not a bijection at " + std::to_string(a.id);
    ehit[static_cast<std::size_t>(fa)] = true;
    const Edge& b = g2.edge(fa);
    const int x = w.v(a.u), y = w.v(a.v);
    if (!((b.u == x && b.v == y) || (b.u == y && b.v == x)))
      return "edge " + std::to_string(a.id) + " is not mapped compatibly with its endpoints";
    if (strict && a.label != b.label) return "edge label differs at edge " + std::to_string(a.id);
  }
  return std::nullopt;
}

inline bool verify_isomorphism(const Multigraph& g1, const Multigraph& g2, const GraphMap& w, bool strict = false) {
  return !check_isomorphism(g1, g2, w, strict).has_value();
}

inline bool is_automorphism(const Multigraph& g, const GraphMap& w) { return verify_isomorphism(g, g, w); }

struct IsoOptions {
  bool strict = false;                          ///< match edge labels and part tags
  std::size_t vertex_cap = 2000;                ///< on the combined vertex count
  std::uint64_t node_budget = 10'000'000;       ///< backtracking nodes before CapExceeded
  std::function<bool(int, int)> allow;          ///< optional extra filter on (g1 vertex, g2 vertex)
};

namespace detail {

inline std::vector<std::string> label_multiset(const Multigraph& g, const std::vector<int>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int e : ids) out.push_back(g.edge(e).label.value_or(std::string{"\x01"}));
  std::sort(out.begin(), out.end());
  return out;
}

/// Refinement key: (part tag if strict, degree, loop count, sorted neighbor multiplicities).
inline std::vector<int> vertex_key(const Multigraph& g, int v, bool strict) {
  std::vector<int> key;
  key.push_back(strict ? g.vertex(v).part.value_or(-1) : 0);
  key.push_back(ggraph::degree(g, v));
  key.push_back(g.multiplicity(v, v));
  std::vector<int> mults;
  for (const auto& [w, ids] : g.neighbors(v))
    if (w != v) mults.push_back(static_cast<int>(ids.size()));
  std::sort(mults.begin(), mults.end());
  key.insert(key.end(), mults.begin(), mults.end());
  return key;
}

/// Pairs the edges of every multi-edge of g1 with those of its image under vmap.
inline std::optional<std::vector<int>> complete_edge_map(const Multigraph& g1, const Multigraph& g2,
                                                         const std::vector<int>& vmap, bool strict) {
  std::vector<int> emap(static_cast<std::size_t>(g1.edge_count()), -1);
  for (int u = 0; u < g1.vertex_count(); ++u) {
    for (const auto& [v, ids] : g1.neighbors(u)) {
      if (v < u) continue;
      std::vector<int> src = ids;
      std::vector<int> dst = g2.edges_between(vmap[static_cast<std::size_t>(u)], vmap[static_cast<std::size_t>(v)]);
      if (src.size() != dst.size()) return std::nullopt;
      if (strict) {
        auto by_label = [](const Multigraph& g) {
          return [&g](int a, int b) {
            return std::make_pair(g.edge(a).label, a) < std::make_pair(g.edge(b).label, b);
          };
        };
        std::sort(src.begin(), src.end(), by_label(g1));
        std::sort(dst.begin(), dst.end(), by_label(g2));
      }
      for (std::size_t i = 0; i < src.size(); ++i) {
        if (strict && g1.edge(src[i]).label != g2.edge(dst[i]).label) return std::nullopt;
        emap[static_cast<std::size_t>(src[i])] = dst[i];
      }
    }
  }
  return emap;
}

class IsoMatcher {
 public:
  IsoMatcher(const Multigraph& g1, const Multigraph& g2, const IsoOptions& opts) : g1_(g1), g2_(g2), opts_(opts) {}

  /// Calls `visit` with each complete vertex bijection in deterministic order until it returns false.
  void run(const std::function<bool(const std::vector<int>&)>& visit) {
    if (static_cast<std::size_t>(g1_.vertex_count() + g2_.vertex_count()) > opts_.vertex_cap)
      throw CapExceeded("isomorphism test exceeds vertex cap of " + std::to_string(opts_.vertex_cap));
    if (g1_.vertex_count() != g2_.vertex_count() || g1_.edge_count() != g2_.edge_count()) return;
    const int n = g1_.vertex_count();
    std::map<std::vector<int>, int> key_ids;
    std::vector<int> class1(static_cast<std::size_t>(n)), class2(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto k = vertex_key(g1_, v, opts_.strict);
      class1[static_cast<std::size_t>(v)] = key_ids.emplace(k, static_cast<int>(key_ids.size())).first->second;
    }
    candidates_.assign(key_ids.size(), {});
    for (int v = 0; v < n; ++v) {
      auto k = vertex_key(g2_, v, opts_.strict);
      auto it = key_ids.find(k);
      if (it == key_ids.end()) return;
      class2[static_cast<std::size_t>(v)] = it->second;
      candidates_[static_cast<std::size_t>(it->second)].push_back(v);
    }
    std::vector<int> count1(key_ids.size(), 0);
    for (int c : class1) ++count1[static_cast<std::size_t>(c)];
    for (std::size_t c = 0; c < key_ids.size(); ++c)
      if (static_cast<int>(candidates_[c].size()) != count1[c]) return;
    class1_ = std::move(class1);

    // breadth-first order from the least vertex of each component
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      seen[static_cast<std::size_t>(s)] = true;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        const int v = order_[head++];
        for (const auto& [w, ids] : g1_.neighbors(v))
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            order_.push_back(w);
          }
      }
    }
    fwd_.assign(static_cast<std::size_t>(n), -1);
    bwd_.assign(static_cast<std::size_t>(n), -1);
    visit_ = &visit;
    stop_ = false;
    recurse(0);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool consistent(int v, int w) const {
    if (opts_.allow && !opts_.allow(v, w)) return false;
    int mapped_v = 0;
    for (const auto& [u, ids] : g1_.neighbors(v)) {
      if (u == v) continue;
      const int fu = fwd_[static_cast<std::size_t>(u)];
      if (fu < 0) continue;
      ++mapped_v;
      const auto& other = g2_.edges_between(w, fu);
      if (other.size() != ids.size()) return false;
      if (opts_.strict && label_multiset(g1_, ids) != label_multiset(g2_, other)) return false;
    }
    int mapped_w = 0;
    for (const auto& [x, ids] : g2_.neighbors(w))
      if (x != w && bwd_[static_cast<std::size_t>(x)] >= 0) ++mapped_w;
    if (mapped_v != mapped_w) return false;
    if (opts_.strict && label_multiset(g1_, g1_.edges_between(v, v)) != label_multiset(g2_, g2_.edges_between(w, w)))
      return false;
    return true;
  }

  void recurse(std::size_t depth) {
    if (stop_) return;
    if (++nodes_ > opts_.node_budget)
      throw CapExceeded("isomorphism search exceeded node budget of " + std::to_string(opts_.node_budget));
    if (depth == order_.size()) {
      if (!(*visit_)(fwd_)) stop_ = true;
      return;
    }
    const int v = order_[depth];
    for (int w : candidates_[static_cast<std::size_t>(class1_[static_cast<std::size_t>(v)])]) {
      if (bwd_[static_cast<std::size_t>(w)] >= 0 || !consistent(v, w)) continue;
      fwd_[static_cast<std::size_t>(v)] = w;
      bwd_[static_cast<std::size_t>(w)] = v;
      recurse(depth + 1);
      fwd_[static_cast<std::size_t>(v)] = -1;
      bwd_[static_cast<std::size_t>(w)] = -1;
      if (stop_) return;
    }
  }

  const Multigraph& g1_;
  const Multigraph& g2_;
  const IsoOptions& opts_;
  std::vector<int> class1_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> order_;
  std::vector<int> fwd_, bwd_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  bool stop_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Enumerates every isomorphism g1 -> g2 (vertex maps in lexicographic order; edge maps
/// pair parallel edges in id order, or by label in strict mode). Stops when `visit` returns false.
inline void for_each_isomorphism(const Multigraph& g1, const Multigraph& g2, const IsoOptions& opts,
                                 const std::function<bool(const GraphMap&)>& visit) {
  detail::IsoMatcher m(g1, g2, opts);
  m.run([&](const std::vector<int>& vmap) {
    auto emap = detail::complete_edge_map(g1, g2, vmap, opts.strict);
    if (!emap) return true;
    return visit(GraphMap{vmap, std::move(*emap)});
  });
}

/// A verified isomorphism g1 -> g2, or nullopt when none exists.
inline std::optional<IsoWitness> isomorphic(const Multigraph& g1, const Multigraph& g2, const IsoOptions& opts = {}) {
  std::optional<IsoWitness> found;
  for_each_isomorphism(g1, g2, opts, [&](const GraphMap& w) {
    found = w;
    return false;
  });
  if (found) detail::ensure(verify_isomorphism(g1, g2, *found, opts.strict), "isomorphism search returned an invalid witness");
  return found;
}

/// All automorphisms of g (vertex maps enumerated; parallel edges paired canonically).
inline std::vector<Automorphism> automorphisms(const Multigraph& g, const IsoOptions& opts = {}) {
  std::vector<Automorphism> out;
  for_each_isomorphism(g, g, opts, [&](const GraphMap& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Import / export

inline std::string export_dot(const Multigraph& g) {
  std::ostringstream os;
  auto quote = [](const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '"' || c == '\\') r += '\\';
      r += c;
    }
    return r;
  };
  os << "graph {\n";
  for (const Vertex& v : g.vertices()) os << "  " << v.id << " [label=\"" << quote(v.label) << "\"];\n";
  for (const Edge& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (e.label) os << " [label=\"" << quote(*e.label) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline nlohmann::json to_json(const Multigraph& g) {
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
  for (const Vertex& v : g.vertices())
    vs.push_back({{"id", v.id}, {"label", v.label}, {"part", v.part ? nlohmann::json(*v.part) : nlohmann::json(nullptr)}});
  for (const Edge& e : g.edges())
    es.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"label", e.label ? nlohmann::json(*e.label) : nlohmann::json(nullptr)}});
  return {{"vertices", vs}, {"edges", es}};
}

inline std::string export_json(const Multigraph& g) { return to_json(g).dump(); }

/// Reads the multigraph JSON format. Arbitrary integer ids are renumbered densely in the
/// order vertices (and edges) appear. Extra keys are ignored.
inline Multigraph from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
      throw ParseError("graph JSON needs \"vertices\" and \"edges\"");
    Multigraph g;
    std::unordered_map<long long, int> ids;
    for (const auto& v : j.at("vertices")) {
      const long long id = v.at("id").get<long long>();
      if (ids.count(id)) throw ParseError("duplicate vertex id " + std::to_string(id));
      std::optional<int> part;
      if (v.contains("part") && !v.at("part").is_null()) part = v.at("part").get<int>();
      std::string label = v.contains("label") && v.at("label").is_string() ? v.at("label").get<std::string>() : std::string{};
      ids.emplace(id, g.add_vertex(label.empty() ? std::to_string(id) : label, part));
    }
    std::unordered_map<long long, bool> eids;
    for (const auto& e : j.at("edges")) {
      const long long id = e.at("id").get<long long>();
      if (eids.count(id)) throw ParseError("duplicate edge id " + std::to_string(id));
      eids.emplace(id, true);
      auto endpoint = [&](const char* key) {
        const long long x = e.at(key).get<long long>();
        auto it = ids.find(x);
        if (it == ids.end()) throw ParseError("edge " + std::to_string(id) + " has unknown endpoint " + std::to_string(x));
        return it->second;
      };
      std::optional<std::string> label;
      if (e.contains("label") && !e.at("label").is_null()) label = e.at("label").get<std::string>();
      g.add_edge(endpoint("u"), endpoint("v"), label);
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed graph JSON: ") + ex.what());
  }
}

inline Multigraph import_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(ex.byte, ex.what());
  }
  return from_json(j);
}

// ---------------------------------------------------------------------------
// Small constructors

inline Multigraph cycle_graph(int n) {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Multigraph complete_graph(int n) {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// K^l_{m,n}: parts tagged 0 (m vertices, ids 0..m-1) and 1.
inline Multigraph complete_bipartite(int m, int n, int l = 1) {
  Multigraph g;
  for (int i = 0; i < m; ++i) g.add_vertex({}, 0);
  for (int i = 0; i < n; ++i) g.add_vertex({}, 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < l; ++k) g.add_edge(i, m + j);
  return g;
}

inline Multigraph path_graph(int n) {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace ggraph
