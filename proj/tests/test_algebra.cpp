#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ggraph/algebra.hpp"
#include "ggraph/numtheory.hpp"
#include "ggraph/perm.hpp"

using namespace ggraph;

namespace {

Perm cyc(int n, const char* text) { return parse_cycles(n, text); }

std::vector<Element> brute_coset(const FiniteGroup& g, Element s, Element x) {
  std::set<Element> out;
  Element p = g.identity();
  for (int k = 0; k < g.order(); ++k) {
    out.insert(g.mul(p, x));
    p = g.mul(p, s);
  }
  return {out.begin(), out.end()};
}

}  // namespace

TEST(Cyclic, TrivialGroup) {
  const FiniteGroup g = cyclic_group(1);
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.mul(0, 0), 0);
  EXPECT_EQ(g.inv(0), 0);
}

TEST(Cyclic, ModularArithmetic) {
  const FiniteGroup z6 = cyclic_group(6);
  EXPECT_EQ(z6.mul(2, 3), 5);
  EXPECT_EQ(z6.mul(4, 4), 2);
  EXPECT_EQ(cyclic_group(4).inv(3), 1);
  for (int n : {1, 2, 5, 12})
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) EXPECT_EQ(cyclic_group(n).mul(a, b), (a + b) % n);
}

TEST(DirectProduct, Z2xZ3IsCyclic) {
  const FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(3));
  EXPECT_EQ(g.order(), 6);
  const Element x = parse_element(g, "(1,1)");
  EXPECT_EQ(x, 1 * 3 + 1);
  EXPECT_EQ(element_order(g, x), 6);
}

TEST(DirectProduct, TrivialFactorAndOrders) {
  const FiniteGroup s3 = symmetric_group(3);
  const FiniteGroup p = direct_product(cyclic_group(1), s3);
  ASSERT_EQ(p.order(), s3.order());
  for (Element a = 0; a < s3.order(); ++a)
    for (Element b = 0; b < s3.order(); ++b) EXPECT_EQ(p.mul(a, b), s3.mul(a, b));
  const FiniteGroup z42 = direct_product(cyclic_group(4), cyclic_group(2));
  EXPECT_EQ(element_order(z42, parse_element(z42, "(1,0)")), 4);
  EXPECT_EQ(cyclic_subgroup(z42, parse_element(z42, "(1,1)")).size(), 4u);
}

TEST(Elements, OrdersAndCyclicSubgroups) {
  const FiniteGroup z6 = cyclic_group(6);
  EXPECT_EQ(element_order(z6, 0), 1);
  EXPECT_EQ(element_order(z6, 2), 3);
  EXPECT_EQ(cyclic_subgroup(z6, 0), (std::vector<Element>{0}));
  EXPECT_EQ(cyclic_subgroup(z6, 2), (std::vector<Element>{0, 2, 4}));
  const FiniteGroup s5 = symmetric_group(5);
  EXPECT_EQ(element_order(s5, parse_element(s5, "(1,2,3,4)")), 4);
}

TEST(Cosets, Examples) {
  const FiniteGroup z6 = cyclic_group(6);
  EXPECT_EQ(right_coset(z6, 2, 1).elements, (std::vector<Element>{1, 3, 5}));
  EXPECT_EQ(right_coset(z6, 3, 2).elements, (std::vector<Element>{2, 5}));
  EXPECT_EQ(right_coset(z6, 3, 2).rep, 2);
}

TEST(Cosets, PartitionAgainstBruteForce) {
  for (const char* spec : {"Z6", "Z8", "Z2xZ4", "S3", "D4", "Q8", "S4"}) {
    const FiniteGroup g = parse_group(spec);
    for (Element s = 0; s < g.order(); ++s) {
      const auto cosets = right_cosets(g, s);
      std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
      for (const Coset& c : cosets) {
        EXPECT_EQ(static_cast<int>(c.elements.size()), element_order(g, s));
        EXPECT_EQ(c.rep, c.elements.front());
        EXPECT_EQ(c.elements, brute_coset(g, s, c.rep));
        for (Element x : c.elements) ++hits[static_cast<std::size_t>(x)];
      }
      EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) << spec << " s=" << s;
      for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y) {
          const bool same = right_coset(g, s, x) == right_coset(g, s, y);
          const auto cx = brute_coset(g, s, x);
          EXPECT_EQ(same, std::binary_search(cx.begin(), cx.end(), y));
        }
    }
  }
}

TEST(Subgroups, Generated) {
  const FiniteGroup z6 = cyclic_group(6);
  EXPECT_EQ(generated_subgroup(z6, {}), (std::vector<Element>{0}));
  EXPECT_EQ(generated_subgroup(z6, {2}), (std::vector<Element>{0, 2, 4}));
  const FiniteGroup s5 = symmetric_group(5);
  const auto sub = generated_subgroup(s5, {parse_element(s5, "(1,2,3,4)"), parse_element(s5, "(1)(2,3)(4,5)")});
  EXPECT_EQ(sub.size(), 20u);
  std::set<Element> in(sub.begin(), sub.end());
  for (Element a : sub) {
    EXPECT_TRUE(in.count(s5.inv(a)));
    for (Element b : sub) EXPECT_TRUE(in.count(s5.mul(a, b)));
  }
}

TEST(Subgroups, MakeSubgroupIsConsistent) {
  const FiniteGroup s4 = symmetric_group(4);
  const auto elems = generated_subgroup(s4, {parse_element(s4, "(1,2,3,4)")});
  const Subgroup sub = make_subgroup(s4, elems);
  ASSERT_EQ(sub.group.order(), 4);
  EXPECT_FALSE(verify_group_axioms(sub.group).has_value());
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b)
      EXPECT_EQ(sub.to_parent[static_cast<std::size_t>(sub.group.mul(a, b))],
                s4.mul(sub.to_parent[static_cast<std::size_t>(a)], sub.to_parent[static_cast<std::size_t>(b)]));
}

TEST(PermGroup, Orders) {
  EXPECT_EQ(perm_group(2, {cyc(2, "(1,2)")}).order(), 2);
  EXPECT_EQ(perm_group(3, {cyc(3, "(1,2)"), cyc(3, "(1,2,3)")}).order(), 6);
  EXPECT_EQ(perm_group(7, {cyc(7, "(1,2,3,4,5,6)"), cyc(7, "(2)(1,5)(3,4)(6,7)")}).order(), 42);
  EXPECT_EQ(symmetric_group(5).order(), 120);
  EXPECT_EQ(dihedral_group(4).order(), 8);
}

TEST(PermGroup, TableMatchesComposition) {
  const FiniteGroup g = symmetric_group(4);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      EXPECT_EQ(g.perms()[static_cast<std::size_t>(g.mul(a, b))], g.perms()[static_cast<std::size_t>(a)] * g.perms()[static_cast<std::size_t>(b)]);
  EXPECT_TRUE(g.perms().front().is_identity());
}

TEST(PermGroup, CapExceeded) {
  EXPECT_THROW(symmetric_group(6, 100), CapExceeded);
}

TEST(Perm, CompositionIsRightToLeft) {
  const Perm p = cyc(3, "(1,2)"), q = cyc(3, "(2,3)");
  const Perm pq = p * q;
  for (int x = 1; x <= 3; ++x) EXPECT_EQ(pq(x), p(q(x)));
  EXPECT_EQ(pq, cyc(3, "(1,2,3)"));
}

TEST(Perm, Algebra) {
  EXPECT_EQ(cyc(2, "(1,2)").sign(), -1);
  EXPECT_EQ(cyc(5, "(1,2,3)").sign(), 1);
  EXPECT_EQ(conjugate(cyc(3, "(1,2,3)"), cyc(3, "(2,3)")), cyc(3, "(1,3,2)"));
  for (int n = 2; n <= 12; ++n) {
    std::vector<int> c(static_cast<std::size_t>(n - 1));
    std::iota(c.begin(), c.end(), 1);
    EXPECT_EQ(Perm::from_cycles(n, {c}).order(), n - 1);
  }
  const Perm p = cyc(6, "(1,2,3)(4,5)");
  EXPECT_EQ(p.order(), 6);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.pow(-1), p.inverse());
  EXPECT_EQ(p.pow(6), Perm(6));
  EXPECT_EQ(p.to_cycle_string(), "(1,2,3)(4,5)(6)");
  EXPECT_EQ(Perm(3).to_cycle_string(false), "()");
  EXPECT_THROW(cyc(3, "(1,2)") * cyc(4, "(1,2)"), DegreeMismatch);
  EXPECT_THROW(Perm::from_images({1, 1, 2}), PreconditionFailed);
}

TEST(Perm, ParseNotation) {
  EXPECT_EQ(cyc(5, "(1 2 3)(4 5)"), cyc(5, "(1,2,3)(4,5)"));
  EXPECT_EQ(cyc(5, "(1)(2,3)(4,5)"), cyc(5, "(2 3)(4 5)"));
  EXPECT_TRUE(cyc(4, "()").is_identity());
  try {
    cyc(3, "(1,4)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(cyc(3, "1,2"), ParseError);
  EXPECT_THROW(cyc(3, "(1,2"), ParseError);
  EXPECT_THROW(cyc(3, "(1,2)(2,3)"), ParseError);
}

TEST(Parse, Groups) {
  EXPECT_EQ(parse_group("Z6").order(), 6);
  const FiniteGroup p = parse_group("Z4xZ2");
  EXPECT_EQ(p.order(), 8);
  EXPECT_EQ(p.moduli(), (std::vector<int>{4, 2}));
  const FiniteGroup g = parse_group("perm:5:(1 2 3 4)");
  EXPECT_EQ(g.perm_degree(), 5);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(parse_group("perm:5:(1,2,3,4),(2,3)(4,5)").order(), 20);
  EXPECT_EQ(parse_group("S3").order(), 6);
  EXPECT_EQ(parse_group("Q8").order(), 8);
  EXPECT_EQ(parse_group("D5").order(), 10);
  for (const char* bad : {"", "Z", "Z0", "Zx", "Z4x", "X5", "perm:3", "perm:3:(1,4)", "S"})
    EXPECT_THROW(parse_group(bad), ParseError) << bad;
}

TEST(Parse, Elements) {
  const FiniteGroup z6 = parse_group("Z6");
  EXPECT_EQ(parse_element(z6, "4"), 4);
  EXPECT_EQ(parse_element(z6, "-1"), 5);
  EXPECT_EQ(parse_element(z6, "e"), 0);
  const FiniteGroup z42 = parse_group("Z4xZ2");
  EXPECT_EQ(parse_element(z42, "(3,1)"), 7);
  EXPECT_THROW(parse_element(z42, "(3)"), ParseError);
  const FiniteGroup s3 = parse_group("S3");
  EXPECT_EQ(s3.perms()[static_cast<std::size_t>(parse_element(s3, "(1 3)"))], cyc(3, "(1,3)"));
  const FiniteGroup q8 = parse_group("Q8");
  EXPECT_EQ(parse_element(q8, "-k"), 7);
  EXPECT_THROW(parse_element(q8, "z"), ParseError);
  EXPECT_EQ(parse_element_list(s3, "(1,2,3),(1,2)").size(), 2u);
  try {
    parse_element_list(z6, "1,x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Axioms, AllConstructedGroups) {
  for (const char* spec : {"Z1", "Z6", "Z8", "Z2xZ4", "Z2xZ2xZ3", "S3", "S4", "D4", "D6", "Q8", "Z64"}) {
    const FiniteGroup g = parse_group(spec);
    EXPECT_FALSE(verify_group_axioms(g).has_value()) << spec;
  }
  EXPECT_FALSE(parse_group("Q8").is_abelian());
  EXPECT_TRUE(parse_group("Z2xZ4").is_abelian());
}

TEST(Axioms, DetectsBrokenTable) {
  // a Latin square of order 5 with identity and inverses, every element an involution:
  // cannot be associative
  std::vector<Element> t = {0, 1, 2, 3, 4,  //
                            1, 0, 3, 4, 2,  //
                            2, 4, 0, 1, 3,  //
                            3, 2, 4, 0, 1,  //
                            4, 3, 1, 2, 0};
  const FiniteGroup g = FiniteGroup::from_table("L5", 5, t);
  EXPECT_TRUE(verify_group_axioms(g).has_value());
  EXPECT_THROW(FiniteGroup::from_table("bad", 2, {1, 0, 0, 1}), PreconditionFailed);
}

TEST(GenMultisetTest, OccurrenceTags) {
  const FiniteGroup z6 = cyclic_group(6);
  const GenMultiset s = GenMultiset::from_elements(z6, {2, 3, 2, 2});
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0].occurrence, 0);
  EXPECT_EQ(s[1].occurrence, 0);
  EXPECT_EQ(s[2].occurrence, 1);
  EXPECT_EQ(s[3].occurrence, 2);
  EXPECT_EQ(s.elements(), (std::vector<Element>{2, 3, 2, 2}));
  EXPECT_THROW(GenMultiset::from_elements(z6, {}), PreconditionFailed);
  EXPECT_THROW(GenMultiset::from_elements(z6, {7}), PreconditionFailed);
}

TEST(NumberTheory, Basics) {
  using namespace numtheory;
  EXPECT_EQ(prime_factors(360), (std::vector<std::int64_t>{2, 3, 5}));
  EXPECT_TRUE(prime_factors(1).empty());
  EXPECT_EQ(valuation(2, 48), 4);
  EXPECT_EQ(valuation(3, 10), 0);
  EXPECT_EQ(ipow(3, 4), 81);
  EXPECT_EQ(mod(-7, 5), 3);
  EXPECT_EQ(units(8), (std::vector<std::int64_t>{1, 3, 5, 7}));
  EXPECT_EQ(inverse_mod(3, 8), 3);
}
