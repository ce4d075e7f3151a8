#include <gtest/gtest.h>

#include <array>

#include "dident/build.hpp"
#include "dident/census.hpp"
#include "dident/error.hpp"
#include "dident/subgroup.hpp"
#include "oracles.hpp"

using namespace dident;

TEST(Perm, ParseAndPrint) {
  auto p = Perm::parse("(1 2 3)(4 5)");
  EXPECT_EQ(p.degree(), 5u);
  EXPECT_EQ(p(1), 2u);
  EXPECT_EQ(p(3), 1u);
  EXPECT_EQ(p.str(), "(1 2 3)(4 5)");
  EXPECT_EQ(Perm::parse("(123)(45)"), p);
  EXPECT_EQ(Perm::parse("(1,2,3)(4,5)"), p);
  EXPECT_TRUE(Perm::parse("()", 4).is_identity());
  EXPECT_THROW(Perm::parse("(1 2 1)"), std::exception);
}

TEST(Perm, LeftFactorActsFirst) {
  auto a = Perm::parse("(1 2)", 3), b = Perm::parse("(2 3)", 3);
  auto ab = a * b;
  // 1 -a-> 2 -b-> 3
  EXPECT_EQ(ab(1), 3u);
  EXPECT_EQ(ab.str(), "(1 3 2)");
  EXPECT_TRUE((ab * ab.inverse()).is_identity());
}

TEST(Group, ConstructionsHaveExpectedOrders) {
  EXPECT_EQ(cyclic(7).order(), 7u);
  EXPECT_EQ(dihedral(8).order(), 8u);
  EXPECT_EQ(dicyclic(12).order(), 12u);
  EXPECT_EQ(quaternion8().order(), 8u);
  EXPECT_EQ(elementary_abelian(3, 2).order(), 9u);
  EXPECT_EQ(symmetric(5).order(), 120u);
  EXPECT_EQ(alternating(6).order(), 360u);
  EXPECT_EQ(special_linear2(5).order(), 120u);
  EXPECT_EQ(direct_product(cyclic(4), cyclic(6)).order(), 24u);
  EXPECT_EQ(build_named("semidirect(cyclic(3), cyclic(4), {g1^-1})").order(), 12u);
}

TEST(Group, TablesPassIndependentAxiomCheck) {
  for (std::size_t n = 1; n <= kCensusMaxOrder; ++n)
    for (const auto* g : groups_of_order(n)) {
      auto t = oracle::table_of(*g);
      for (Elem a = 0; a < n; ++a) {
        EXPECT_EQ(t[0][a], a);
        EXPECT_EQ(t[a][0], a);
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            ASSERT_EQ(t[t[a][b]][c], t[a][t[b][c]]) << g->name();
      }
    }
}

TEST(Group, RejectsNonGroupTables) {
  std::vector<std::vector<Elem>> bad{{0, 1, 2}, {1, 0, 2}, {2, 2, 0}};
  EXPECT_THROW(from_cayley_table(bad), std::invalid_argument);
  std::vector<std::vector<Elem>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  EXPECT_EQ(from_cayley_table(z3).order(), 3u);
}

TEST(Group, QuaternionArithmeticOracle) {
  // Units +-1, +-i, +-j, +-k as (sign, axis) with axis 0 = 1.
  struct Q {
    int s, u;
  };
  std::array<Q, 8> el{};
  for (int k = 0; k < 8; ++k)
    el[k] = {k < 4 ? 1 : -1, k % 4};
  auto mul = [](Q a, Q b) {
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return Q{a.s * b.s * sign[a.u][b.u], axis[a.u][b.u]};
  };
  oracle::Table t(8, std::vector<Elem>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      auto c = mul(el[a], el[b]);
      t[a][b] = static_cast<Elem>((c.s > 0 ? 0 : 4) + c.u);
    }
  auto q8 = quaternion8();
  EXPECT_TRUE(oracle::isomorphic(t, oracle::table_of(q8)));
  EXPECT_FALSE(oracle::isomorphic(t, oracle::table_of(dihedral(8))));
  EXPECT_EQ(oracle::spectrum(t), oracle::spectrum(oracle::table_of(q8)));
}

TEST(Group, SubgroupCountsMatchBruteForce) {
  for (std::size_t n = 1; n <= 16; ++n)
    for (const auto* g : groups_of_order(n))
      EXPECT_EQ(subgroups(*g).size(), oracle::subgroup_count(oracle::table_of(*g))) << g->name();
}

// Raising the generator bound past the default adds nothing; Z2^4 is the
// one census group that needs four generators.
TEST(Group, SubgroupEnumerationIsComplete) {
  for (std::size_t n = 1; n <= kCensusMaxOrder; ++n)
    for (const auto* g : groups_of_order(n)) {
      auto all = subgroups(*g).size();
      EXPECT_EQ(all, subgroups(*g, 5).size()) << g->name();
      if (g->name() != "Z2^4")
        EXPECT_EQ(subgroups(*g, 3).size(), all) << g->name();
    }
  EXPECT_LT(subgroups(named_group("Z2^4"), 3).size(), subgroups(named_group("Z2^4")).size());
}

TEST(Group, ClassesAndCenterMatchBruteForce) {
  for (std::size_t n = 1; n <= kCensusMaxOrder; ++n)
    for (const auto* g : groups_of_order(n)) {
      auto t = oracle::table_of(*g);
      EXPECT_EQ(conjugacy_classes(*g).size(), oracle::conjugacy_class_count(t)) << g->name();
      EXPECT_EQ(center(*g).order(), oracle::center_size(t)) << g->name();
    }
  EXPECT_EQ(conjugacy_classes(named_group("A5")).size(), 5u);
  EXPECT_EQ(conjugacy_classes(named_group("S5")).size(), 7u);
}

TEST(Group, NormalSubgroupsAndQuotients) {
  const auto& s4 = named_group("S4");
  auto normals = normal_subgroups(s4);
  std::vector<std::size_t> orders;
  for (const auto& k : normals)
    orders.push_back(k.order());
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 4, 12, 24}));
  for (const auto& k : normals)
    if (k.order() == 4)
      EXPECT_TRUE(is_isomorphic(quotient(s4, k), symmetric(3)));
  auto h = make_subgroup(s4, {*s4.find_perm(Perm::parse("(1 2)", 4))});
  EXPECT_THROW(quotient(s4, h), std::invalid_argument);
}

TEST(Group, DerivedSeriesAndSolvability) {
  EXPECT_EQ(derived_length(named_group("S4")), 3u);
  EXPECT_EQ(derived_length(named_group("D8")), 2u);
  EXPECT_EQ(derived_length(named_group("Z6")), 1u);
  EXPECT_EQ(derived_length(named_group("Z1")), 0u);
  EXPECT_FALSE(derived_length(named_group("A5")));
  EXPECT_FALSE(is_solvable(named_group("S5")));
  EXPECT_TRUE(is_solvable(named_group("SL(2,3)")));
}

TEST(Group, SylowSubgroups) {
  const auto& a5 = named_group("A5");
  EXPECT_EQ(sylow_subgroups(a5, 2).size(), 5u);
  EXPECT_EQ(sylow_subgroups(a5, 3).size(), 10u);
  EXPECT_EQ(sylow_subgroups(a5, 5).size(), 6u);
  EXPECT_EQ(sylow_subgroup(named_group("S4"), 2).order(), 8u);
  EXPECT_EQ(sylow_subgroups(named_group("A6"), 3).size(), 10u);
}

TEST(Group, IsomorphismWitnessIsChecked) {
  auto a = dihedral(6), b = symmetric(3);
  auto w = is_isomorphic(a, b);
  ASSERT_TRUE(w);
  EXPECT_TRUE(check_isomorphism(a, b, w->map));
  EXPECT_FALSE(is_isomorphic(cyclic(6), symmetric(3)));
  EXPECT_FALSE(is_isomorphic(dihedral(8), quaternion8()));
  EXPECT_TRUE(is_isomorphic(special_linear2(3), named_group("SL(2,3)")));
  EXPECT_TRUE(is_isomorphic(build_named("perms[(1 2 3 4 5); (1 2)]"), symmetric(5)));
}

TEST(Group, SectionsKnownCases) {
  const auto& d8 = named_group("D8");
  const auto& s4 = named_group("S4");
  EXPECT_TRUE(is_section(d8, elementary_abelian(2, 2)));
  EXPECT_FALSE(is_section(d8, elementary_abelian(2, 3)));
  EXPECT_FALSE(is_section(d8, quaternion8()));
  EXPECT_TRUE(is_section(s4, symmetric(3)));
  EXPECT_TRUE(is_section(s4, d8));
  EXPECT_FALSE(is_section(s4, quaternion8()));
  EXPECT_FALSE(is_section(s4, cyclic(8)));
  auto w = is_section(named_group("A4"), cyclic(3));
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_normal(named_group("A4"), w->k) || w->h.order() == 3);
  EXPECT_EQ(w->h.order() / w->k.order(), 3u);
}

TEST(Group, BuildNamedErrors) {
  EXPECT_THROW(build_named("cyclic("), ParseError);
  EXPECT_THROW(build_named("frobnicate(3)"), std::exception);
  EXPECT_THROW(build_named("semidirect(cyclic(3), cyclic(2), {g1^2; g1})"), std::exception);
}
