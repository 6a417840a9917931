#include <gtest/gtest.h>

#include <set>

#include "ggraph/recognition.hpp"
#include "zoo.hpp"

using namespace ggraph;
namespace rn = ggraph::recognition_names;

namespace {

GroupPtr grp(const std::string& spec) { return share(parse_group(spec)); }

GraphMap cycle_map(int n, int mul, int add) {
  // vertex i -> mul*i + add, edge (i,i+1) -> the edge between the images
  GraphMap m;
  for (int i = 0; i < n; ++i) m.vertex_map.push_back(((mul * i + add) % n + n) % n);
  for (int i = 0; i < n; ++i) {
    const int a = m.vertex_map[static_cast<std::size_t>(i)], b = m.vertex_map[static_cast<std::size_t>((i + 1) % n)];
    m.edge_map.push_back((b - a + n) % n == 1 ? a : b);
  }
  return m;
}

}  // namespace

TEST(Closure, ShiftsFormTheGroup) {
  const GGraph gg = zoo::build({"S3", {"(1,2,3)", "(1,2)"}});
  const auto w = shifts_of(gg);
  EXPECT_EQ(w.H.size(), 6u);
  EXPECT_TRUE(w.H.front().is_identity());
  EXPECT_THROW(close_under_composition(gg.multigraph(), w.generators, 3), CapExceeded);
}

TEST(CheckWithLoops, ShiftsOnPsi) {
  for (const zoo::Case& c : {zoo::Case{"Z6", {"2", "3"}}, zoo::Case{"S3", {"(1,2,3)", "(1,2)"}}}) {
    const GGraph gg = zoo::build(c, true);
    const auto rep = check_with_loops(gg.multigraph(), shifts_of(gg));
    EXPECT_TRUE(rep.all_pass()) << zoo::describe(c);
  }
}

TEST(CheckSimple, ShiftsOnPhi) {
  const GGraph gg = zoo::build({"Z6", {"2", "3"}});
  EXPECT_TRUE(check_simple(gg.multigraph(), shifts_of(gg)).all_pass());
}

TEST(CheckSimple, HexagonIsAGGraph) {
  const Multigraph c6 = cycle_graph(6);
  const auto w = make_witness(c6, {cycle_map(6, 1, 2), cycle_map(6, -1, 0)}, {0, 1});
  EXPECT_EQ(w.H.size(), 6u);
  const auto rep = check_simple(c6, w);
  ASSERT_TRUE(rep.all_pass()) << rep.first_failure()->detail;
  const auto r = reconstruct(c6, w, false);
  EXPECT_EQ(r.group->order(), 6);
  EXPECT_FALSE(r.group->is_abelian());
  EXPECT_TRUE(verify_isomorphism(c6, r.graph.multigraph(), r.iso));

  // the rotation subgroup of order 3 leaves the orbits {0,2,4}, {1,3,5} but has trivial
  // stabilisers, so each vertex sees two edges toward the other orbit
  const auto rot = make_witness(c6, {cycle_map(6, 1, 2)}, {0, 3});
  EXPECT_FALSE(check_simple(c6, rot).all_pass());
}

TEST(CheckSimple, Triangle) {
  const Multigraph k3 = complete_graph(3);
  const auto trivial = make_witness(k3, {}, {0, 1, 2});
  EXPECT_TRUE(check_simple(k3, trivial).all_pass());
  const auto r = reconstruct(k3, trivial, false);
  EXPECT_EQ(r.group->order(), 1);
  EXPECT_EQ(r.gens.size(), 3u);

  const auto rot = make_witness(k3, {cycle_map(3, 1, 1)}, {0});
  const auto rep = check_simple(k3, rot);
  EXPECT_FALSE(rep.condition(rn::kStables).pass);
  EXPECT_THROW(reconstruct(k3, rot, false), WitnessInvalid);
}

TEST(CheckSimple, NotAnAutomorphism) {
  const Multigraph p3 = path_graph(3);
  GraphMap bad;
  bad.vertex_map = {1, 0, 2};
  bad.edge_map = {0, 1};
  const auto rep = check_simple(p3, RecognitionWitness{{bad}, {GraphMap::identity(p3), bad}, {0, 1}});
  EXPECT_FALSE(rep.condition(rn::kGroup).pass);
}

TEST(Reconstruct, Z6RoundTrip) {
  const GGraph gg = zoo::build({"Z6", {"2", "3"}});
  const auto r = reconstruct(gg.multigraph(), shifts_of(gg), false);
  EXPECT_EQ(r.group->order(), 6);
  std::multiset<int> orders;
  for (Element s : r.gens.elements()) orders.insert(element_order(*r.group, s));
  EXPECT_EQ(orders, (std::multiset<int>{2, 3}));
  EXPECT_TRUE(verify_isomorphism(gg.multigraph(), r.graph.multigraph(), r.iso));
}

TEST(Reconstruct, RepeatedGenerator) {
  const GGraph gg = build_phi(grp("Z2"), std::vector<Element>{1, 1});
  const auto r = reconstruct(gg.multigraph(), shifts_of(gg), false);
  ASSERT_EQ(r.gens.size(), 2u);
  EXPECT_EQ(r.gens.elements()[0], r.gens.elements()[1]);
  EXPECT_TRUE(verify_isomorphism(gg.multigraph(), r.graph.multigraph(), r.iso));
}

TEST(Reconstruct, QuaternionWithLoops) {
  const GGraph gg = zoo::build({"Q8", {"i", "j"}}, true);
  const auto r = reconstruct(gg.multigraph(), shifts_of(gg), true);
  EXPECT_EQ(r.group->order(), 8);
  EXPECT_TRUE(verify_isomorphism(gg.multigraph(), r.graph.multigraph(), r.iso));
}

TEST(Reconstruct, WholeZoo) {
  for (const zoo::Case& c : zoo::cases())
    for (bool loops : {false, true}) {
      const GGraph gg = zoo::build(c, loops);
      const auto w = shifts_of(gg);
      const auto rep = loops ? check_with_loops(gg.multigraph(), w) : check_simple(gg.multigraph(), w);
      ASSERT_TRUE(rep.all_pass()) << zoo::describe(c) << ": " << rep.first_failure()->name;
      const auto r = reconstruct(gg.multigraph(), w, loops);
      EXPECT_EQ(r.group->order(), gg.G().order());
      EXPECT_TRUE(verify_isomorphism(gg.multigraph(), r.graph.multigraph(), r.iso)) << zoo::describe(c);
    }
}

TEST(Mutations, EachBreaksItsCondition) {
  for (const zoo::Case& c : zoo::cases()) {
    const GGraph gg = zoo::build(c);
    const auto w = shifts_of(gg);
    for (const auto& m : {zoo::delete_edge(gg, w), zoo::relabel_edge(gg, w), zoo::shrink_clique(gg, w)}) {
      const auto rep = check_simple(m.graph, m.witness);
      EXPECT_FALSE(rep.condition(m.broken).pass) << zoo::describe(c) << " " << m.broken;
      EXPECT_THROW(reconstruct(m.graph, m.witness, false), WitnessInvalid);
    }
  }
}

TEST(Json, WitnessRoundTrip) {
  const GGraph gg = zoo::build({"Z6", {"2", "3"}});
  const auto w = shifts_of(gg);
  const auto back = witness_from_json(gg.multigraph(), witness_to_json(w));
  EXPECT_EQ(std::set<Automorphism>(back.H.begin(), back.H.end()), std::set<Automorphism>(w.H.begin(), w.H.end()));
  EXPECT_EQ(back.C, w.C);

  // edge maps are implied on a simple graph
  nlohmann::json j = witness_to_json(w);
  j.erase("H_edge_maps");
  EXPECT_EQ(witness_from_json(gg.multigraph(), j).H.size(), 6u);

  const GGraph multi = build_phi(grp("Z2"), std::vector<Element>{1, 1});
  nlohmann::json jm = witness_to_json(shifts_of(multi));
  jm.erase("H_edge_maps");
  EXPECT_THROW(witness_from_json(multi.multigraph(), jm), ParseError);
  EXPECT_THROW(witness_from_json(gg.multigraph(), nlohmann::json{{"C", {0}}}), ParseError);
  EXPECT_THROW(witness_from_json(gg.multigraph(), nlohmann::json{{"H_generators", {{0, 1}}}, {"C", {0}}}), ParseError);
}
