#include <gtest/gtest.h>

#include "dident/basis.hpp"
#include "dident/build.hpp"
#include "dident/census.hpp"
#include "dident/formula_catalog.hpp"
#include "dident/subgroup.hpp"

using namespace dident;

namespace {

const ReportItem* find_item(const VerificationReport& r, const std::string& kind, const std::string& group = {}) {
  for (const auto& it : r.items)
    if (it.kind == kind && (group.empty() || it.group == group))
      return &it;
  return nullptr;
}

void strip_timing(nlohmann::json& j) {
  if (j.is_object()) {
    j.erase("seconds");
    j.erase("nodes");
    for (auto& [k, v] : j.items())
      strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j)
      strip_timing(v);
  }
}

} // namespace

class BuiltinClaim : public ::testing::TestWithParam<std::string> {};

TEST_P(BuiltinClaim, Passes) {
  auto r = run_builtin_claim(GetParam());
  EXPECT_TRUE(r.pass) << r.to_text();
  EXPECT_FALSE(r.items.empty());
}

INSTANTIATE_TEST_SUITE_P(All, BuiltinClaim, ::testing::ValuesIn(builtin_claim_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s)
                             if (c == '-')
                               c = '_';
                           return s;
                         });

TEST(Basis, DroppingTheLastFormulaLeavesExactlyTheElementaryAbelianGap) {
  auto r = run_builtin_claim("prop1");
  const auto* gaps = find_item(r, "control without 2.4: gaps");
  ASSERT_NE(gaps, nullptr);
  EXPECT_EQ(gaps->status, "Z2^3");
  EXPECT_TRUE(gaps->pass);
  const auto* weak = find_item(r, "control weak without 2.4: gaps");
  ASSERT_NE(weak, nullptr);
  EXPECT_EQ(weak->status, "none");
}

TEST(Basis, WrongExpectationsFail) {
  BasisClaim c;
  c.name = "d8-missing";
  c.target = "D8";
  c.formulas = {"2.1", "2.2", "2.3"};
  c.scope_orders = {1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_FALSE(verify_claim(c).pass);
  c.expected_gaps = {"Z2^3"};
  EXPECT_TRUE(verify_claim(c).pass);

  BasisClaim w;
  w.name = "bad-witness";
  w.target = "D8";
  w.eliminations = {{"Z2^3", "2.4", {"a", "b", "ab"}}};
  auto r = verify_eliminations(w);
  EXPECT_FALSE(r.pass);
  w.eliminations = {{"Z2^3", "2.4", {"a", "b", "c"}}};
  EXPECT_TRUE(verify_eliminations(w).pass);
}

TEST(Basis, VariantAdjudicationBindsTheValidReading) {
  auto claim = builtin_claim("thm2");
  auto r = verify_validity(claim);
  const auto* adj = find_item(r, "adjudication");
  ASSERT_NE(adj, nullptr);
  EXPECT_TRUE(adj->pass);
  EXPECT_NE(adj->detail.find("3.8a"), std::string::npos);
  bool bound = false;
  for (const auto& it : r.items)
    bound = bound || (it.kind == "validity" && it.formula == "3.8a");
  EXPECT_TRUE(bound);
}

TEST(Basis, QuaternionGapUnderTheShortSymmetricList) {
  auto r = run_builtin_claim("note-s4-pk");
  EXPECT_TRUE(r.pass);
  const auto* q = find_item(r, "disposition", "Q8");
  ASSERT_NE(q, nullptr);
  EXPECT_EQ(q->status, "gap");
  EXPECT_FALSE(is_section(named_group("S4"), named_group("Q8")));
}

TEST(Basis, DihedralFamilyShape) {
  EXPECT_EQ(dihedral_obstructions(12).size(), 4u);
  EXPECT_EQ(dihedral_obstructions(8).size(), 2u);
  EXPECT_EQ(dihedral_obstructions(15).size(), 3u);
  auto c = dihedral_basis(6);
  EXPECT_EQ(c.target, "dihedral(12)");
  EXPECT_EQ(c.formulas.front(), "omega12");
  EXPECT_EQ(c.scope_orders.size(), 12u);
  EXPECT_TRUE(dihedral_basis(13).scope_orders.empty());
  auto r = verify_dihedral_family(2, 6);
  EXPECT_TRUE(r.pass) << r.to_text();
  EXPECT_THROW(dihedral_basis(1), std::invalid_argument);
}

TEST(Lemmas, AllSweepsPass) {
  for (const auto& id : lemma_ids()) {
    auto r = verify_lemma_instances(id);
    EXPECT_TRUE(r.pass) << r.to_text();
  }
  EXPECT_THROW(verify_lemma_instances("L99"), std::invalid_argument);
}

TEST(Lemmas, FiveCycleSweepCoversDistinctSupports) {
  auto r = verify_lemma_instances("L5a");
  ASSERT_EQ(r.items.size(), 1u);
  // 144 five-cycles, 24 on each of the 6 five-point supports.
  EXPECT_EQ(r.items[0].nodes, 144u * 144u - 6u * 24u * 24u);
}

// Subgroups and quotients of G satisfy every formula valid in G.
TEST(Varieties, ClosedUnderSubgroupsAndQuotients) {
  for (const char* name : {"D8", "Q8", "A4", "S4"}) {
    const auto& g = named_group(name);
    std::vector<FormulaEntry> laws;
    for (const auto& f : formula_catalog())
      if (f.ude.variable_count <= 3 && is_didentity(g, f.ude).valid())
        laws.push_back(f);
    ASSERT_GE(laws.size(), 3u) << name;
    std::vector<FiniteGroup> pieces;
    for (const auto& h : subgroups(g))
      pieces.push_back(subgroup_as_group(g, h.members));
    for (const auto& k : normal_subgroups(g))
      pieces.push_back(quotient(g, k));
    for (const auto& f : laws)
      for (const auto& p : pieces)
        EXPECT_TRUE(is_didentity(p, f.ude).valid()) << f.id << " in a section of order " << p.order() << " of " << name;
  }
}

TEST(Json, ClaimRoundTrip) {
  for (const auto& n : builtin_claim_names()) {
    auto j = claim_to_json(builtin_claim(n));
    EXPECT_EQ(claim_to_json(claim_from_json(j)).dump(), j.dump()) << n;
  }
}

TEST(Json, ReportRoundTripIsByteIdentical) {
  for (const char* n : {"prop1", "prop5", "thm3"}) {
    auto j = run_builtin_claim(n).to_json();
    EXPECT_EQ(VerificationReport::from_json(j).to_json().dump(2), j.dump(2)) << n;
  }
}

TEST(Json, RepeatedRunsAgreeApartFromTiming) {
  for (const char* n : {"prop3", "thm3", "prop6"}) {
    auto a = run_builtin_claim(n).to_json();
    auto b = run_builtin_claim(n).to_json();
    strip_timing(a);
    strip_timing(b);
    EXPECT_EQ(a.dump(), b.dump()) << n;
  }
}
