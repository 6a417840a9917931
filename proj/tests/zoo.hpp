#pragma once

// Groups and generator multisets shared by the structure, recognition and acceptance suites.

#include <string>
#include <vector>

#include "ggraph/algebra.hpp"
#include "ggraph/ggraph.hpp"
#include "ggraph/recognition.hpp"

namespace zoo {

struct Case {
  std::string group;
  std::vector<std::string> gens;
};

struct Family {
  std::string group;
  std::vector<std::string> seeds;
};

inline const std::vector<Family>& families() {
  static const std::vector<Family> f = {
      {"Z6", {"1", "2", "3"}},
      {"Z8", {"1", "2", "4"}},
      {"Z2xZ4", {"(1,0)", "(0,1)", "(1,1)"}},
      {"S3", {"(1,2,3)", "(1,2)", "(2,3)"}},
      {"D4", {"(1,2,3,4)", "(1,4)(2,3)", "(1,3)"}},
      {"Q8", {"i", "j", "k"}},
  };
  return f;
}

/// Every multiset of size 2 or 3 over each family's seed list (16 per family).
inline std::vector<Case> cases() {
  std::vector<Case> out;
  for (const Family& fam : families()) {
    const std::size_t k = fam.seeds.size();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        out.push_back({fam.group, {fam.seeds[a], fam.seeds[b]}});
        for (std::size_t c = b; c < k; ++c) out.push_back({fam.group, {fam.seeds[a], fam.seeds[b], fam.seeds[c]}});
      }
  }
  return out;
}

inline std::string describe(const Case& c) {
  std::string s = c.group + " {";
  for (std::size_t i = 0; i < c.gens.size(); ++i) s += (i ? "; " : "") + c.gens[i];
  return s + "}";
}

inline ggraph::GGraph build(const Case& c, bool loops = false) {
  auto g = ggraph::share(ggraph::parse_group(c.group));
  std::vector<ggraph::Element> gens;
  for (const auto& s : c.gens) gens.push_back(ggraph::parse_element(*g, s));
  return loops ? ggraph::build_psi(g, gens) : ggraph::build_phi(g, gens);
}

/// Φ(<S>,S): the generators re-indexed inside the subgroup they generate.
inline ggraph::GGraph build_generated(const Case& c) {
  using namespace ggraph;
  const FiniteGroup g = parse_group(c.group);
  std::vector<Element> gens;
  for (const auto& x : c.gens) gens.push_back(parse_element(g, x));
  Subgroup sub = make_subgroup(g, generated_subgroup(g, gens));
  for (Element& x : gens) x = sub.from_parent[static_cast<std::size_t>(x)];
  return build_phi(share(std::move(sub.group)), gens);
}

/// Simple Φ(G,{s,t}) with o(t) = 2 and G = <s,t>.
inline std::vector<Case> incidence_cases() {
  return {
      {"S3", {"(1,2)", "(2,3)"}},
      {"S3", {"(1,2,3)", "(1,2)"}},
      {"Z6", {"2", "3"}},
      {"Z2xZ2", {"(1,0)", "(0,1)"}},
      {"Z2xZ4", {"(0,1)", "(1,0)"}},
      {"D4", {"(1,2,3,4)", "(1,3)"}},
      {"D4", {"(1,3)", "(1,2)(3,4)"}},
      {"D5", {"(1,2,3,4,5)", "(2,5)(3,4)"}},
      {"D5", {"(2,5)(3,4)", "(1,2)(3,5)"}},
      {"D6", {"(1,2,3,4,5,6)", "(1,2)(3,6)(4,5)"}},
      {"D6", {"(2,6)(3,5)", "(1,2)(3,6)(4,5)"}},
      {"S4", {"(1,2,3,4)", "(1,2)"}},
      {"perm:4:(1,2,3),(3,4)", {"(1,2,3)", "(3,4)"}},
      {"perm:5:(1,2,3,4),(2,3)(4,5)", {"(1,2,3,4)", "(2,3)(4,5)"}},
  };
}

struct Mutant {
  ggraph::Multigraph graph;
  ggraph::RecognitionWitness witness;
  std::string_view broken;  ///< condition expected to fail
};

/// The last edge removed; H keeps its maps with the missing edge dropped.
inline Mutant delete_edge(const ggraph::GGraph& gg, const ggraph::RecognitionWitness& w) {
  using namespace ggraph;
  const Multigraph& g = gg.multigraph();
  const int gone = g.edge_count() - 1;
  Mutant m;
  for (const Vertex& v : g.vertices()) m.graph.add_vertex(v.label, v.part);
  for (const Edge& e : g.edges())
    if (e.id != gone) m.graph.add_edge(e.u, e.v, e.label);
  m.witness = w;
  for (Automorphism& h : m.witness.H) {
    h.edge_map.pop_back();
    for (int& x : h.edge_map)
      if (x == gone) x = -1;
  }
  m.broken = recognition_names::kGroup;
  return m;
}

/// One element of H sends edge 0 to the image of another edge (with different endpoints when possible).
inline Mutant relabel_edge(const ggraph::GGraph& gg, const ggraph::RecognitionWitness& w) {
  using namespace ggraph;
  const Multigraph& g = gg.multigraph();
  Mutant m{g, w, recognition_names::kGroup};
  Automorphism& h = m.witness.H.back();
  const Edge& e0 = g.edge(0);
  // with a single multi-edge the swap keeps h an automorphism but breaks closure
  std::size_t other = 1;
  for (const Edge& e : g.edges())
    if (std::minmax(e.u, e.v) != std::minmax(e0.u, e0.v)) {
      other = static_cast<std::size_t>(e.id);
      break;
    }
  std::swap(h.edge_map[0], h.edge_map[other]);
  return m;
}

/// C without its last vertex.
inline Mutant shrink_clique(const ggraph::GGraph& gg, const ggraph::RecognitionWitness& w) {
  Mutant m{gg.multigraph(), w, ggraph::recognition_names::kMeets};
  m.witness.C.pop_back();
  return m;
}

}  // namespace zoo
