#include <gtest/gtest.h>

#include <cmath>

#include "dident/build.hpp"
#include "dident/census.hpp"
#include "dident/error.hpp"
#include "dident/formula_catalog.hpp"
#include "dident/search.hpp"
#include "oracles.hpp"

using namespace dident;

namespace {

double space(const FiniteGroup& g, const UDE& u) {
  return std::pow(static_cast<double>(g.order()), static_cast<double>(expand_omega(u).total_variables()));
}

std::vector<const FiniteGroup*> groups_up_to(std::size_t n) {
  std::vector<const FiniteGroup*> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto* g : groups_of_order(k))
      out.push_back(g);
  return out;
}

} // namespace

TEST(Word, NormalizeExpandsMacros) {
  auto c = normalize(parse_word("[x1, x2]"));
  std::vector<Letter> want{{1, -1}, {2, -1}, {1, 1}, {2, 1}};
  EXPECT_EQ(c, want);
  auto conj = normalize(parse_word("x1^x2"));
  std::vector<Letter> want2{{2, -1}, {1, 1}, {2, 1}};
  EXPECT_EQ(conj, want2);
  EXPECT_TRUE(normalize(parse_word("x1 x1^-1")).empty());
  EXPECT_EQ(normalize(parse_word("(x1 x2)^-2")).size(), 4u);
  EXPECT_EQ(normalize(parse_word("~x1")), (std::vector<Letter>{{1, -1}}));
}

TEST(Word, EvaluationMatchesLetterOracle) {
  const auto& g = named_group("S4");
  std::vector<std::string> words{"[x1, x2]", "x1^x2", "(x1 x2^2)^3", "[x1^2, x1^x2]", "(x1^-1 x2)^5 x1"};
  for (const auto& text : words) {
    auto w = parse_word(text);
    auto letters = normalize(w);
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) {
        std::vector<Elem> v{a, b};
        ASSERT_EQ(eval_word(g, w, v), oracle::eval_letters(g, letters, v)) << text;
      }
  }
  EXPECT_THROW(eval_word(g, parse_word("x3"), std::vector<Elem>{0, 0}), std::invalid_argument);
}

TEST(Parser, ClausesAndBuiltins) {
  auto u = parse_formula("(x1^2 = 1) | ([x1, x2] = 1) | omega(3)");
  EXPECT_EQ(u.clauses.size(), 2u);
  EXPECT_EQ(u.omegas, std::vector<unsigned>{3});
  EXPECT_EQ(u.variable_count, 2u);
  EXPECT_EQ(u.total_variables(), 6u);
  auto in = parse_formula("in_cyc(x1, x2, 1, 3)");
  ASSERT_EQ(in.clauses.size(), 1u);
  EXPECT_EQ(in.clauses[0].equations.size(), 3u);
  auto th = parse_formula("theta(x1, x2, x3)");
  EXPECT_EQ(th.clauses.size(), 18u);
}

TEST(Parser, ErrorsCarryColumns) {
  try {
    parse_formula("x1 = = 1");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_formula("x1^2 = 1 |"), ParseError);
  EXPECT_THROW(parse_formula("[x1, x2 = 1"), ParseError);
  EXPECT_THROW(parse_formula("y1 = 1"), ParseError);
  EXPECT_THROW(parse_formula("omega(0)"), ParseError);
}

TEST(Pigeonhole, OmegaMatchesGroupOrder) {
  auto gs = groups_up_to(24);
  for (const char* extra : {"A5", "S5", "A6"})
    gs.push_back(&named_group(extra));
  for (unsigned n = 1; n <= 25; ++n)
    for (const auto* g : gs) {
      auto v = omega_valid(*g, n);
      EXPECT_EQ(v.valid(), g->order() <= n) << g->name() << " n=" << n;
      if (v.invalid())
        EXPECT_TRUE(falsifies(*g, omega_literal(n), v.counterexample));
    }
}

TEST(Pigeonhole, LiteralExpansionAgrees) {
  for (unsigned n = 1; n <= 6; ++n)
    for (const auto* g : groups_up_to(8)) {
      auto lit = omega_literal(n);
      if (space(*g, lit) > 3e5)
        continue;
      EXPECT_EQ(oracle::brute_valid(*g, lit), g->order() <= n) << g->name() << " n=" << n;
      SearchConfig cfg;
      cfg.strategy = Strategy::Exhaustive;
      EXPECT_EQ(is_didentity(*g, lit, cfg).valid(), g->order() <= n);
    }
}

// Exhaustive, backtracking and brute-force evaluation agree on every catalog
// formula over every census group of order at most 12.
TEST(Search, StrategiesAgreeOnCatalog) {
  SearchConfig ex, bt;
  ex.strategy = Strategy::Exhaustive;
  ex.space_limit = 2e7;
  bt.strategy = Strategy::Backtrack;
  std::size_t compared = 0, brute = 0;
  for (const auto& f : formula_catalog())
    for (const auto* g : groups_up_to(12)) {
      auto a = is_didentity(*g, f.ude, ex);
      auto b = is_didentity(*g, f.ude, bt);
      ASSERT_NE(b.status, Status::Indeterminate) << f.id << " in " << g->name() << ": " << b.reason;
      if (a.status != Status::Indeterminate) {
        ++compared;
        EXPECT_EQ(a.status, b.status) << f.id << " in " << g->name();
      }
      if (space(*g, f.ude) <= 2e5) {
        ++brute;
        EXPECT_EQ(oracle::brute_valid(*g, f.ude), b.valid()) << f.id << " in " << g->name();
      }
      for (const auto* v : {&a, &b})
        if (v->invalid())
          EXPECT_TRUE(falsifies(*g, f.ude, v->counterexample)) << f.id << " in " << g->name();
    }
  EXPECT_GT(compared, 500u);
  EXPECT_GT(brute, 200u);
}

TEST(Search, ExhaustiveReturnsLeastCounterexample) {
  SearchConfig ex;
  ex.strategy = Strategy::Exhaustive;
  for (const char* id : {"2.2", "2.3", "2.5", "2.7"})
    for (const auto* g : groups_up_to(8)) {
      auto f = formula(id);
      if (space(*g, f.ude) > 2e5)
        continue;
      std::vector<Elem> cx;
      bool valid = oracle::brute_valid(*g, f.ude, &cx);
      auto v = is_didentity(*g, f.ude, ex);
      ASSERT_EQ(valid, v.valid());
      if (!valid)
        EXPECT_EQ(v.counterexample, cx) << id << " in " << g->name();
    }
}

TEST(Search, CounterexamplesAreConjugationInvariant) {
  for (const char* id : {"2.3", "2.4", "2.5", "2.8", "2.12", "3.6"})
    for (const char* gname : {"S3", "D8", "Q8", "A4", "S4", "Z3:Z4", "SL(2,3)"}) {
      const auto& g = named_group(gname);
      auto f = formula(id);
      auto v = is_didentity(g, f.ude);
      if (!v.invalid())
        continue;
      for (Elem c = 0; c < g.order(); ++c) {
        std::vector<Elem> moved;
        for (auto x : v.counterexample)
          moved.push_back(g.conj(x, c));
        ASSERT_TRUE(falsifies(g, f.ude, moved)) << id << " in " << gname;
      }
    }
}

TEST(Search, VerdictIsIsomorphismInvariant) {
  auto d8 = build_named("perms[(1 2 3 4); (1 3)]");
  auto q8 = build_named("dicyclic(8)");
  for (const auto& f : formula_catalog()) {
    if (space(d8, f.ude) > 1e7)
      continue;
    EXPECT_EQ(is_didentity(d8, f.ude).status, is_didentity(named_group("D8"), f.ude).status) << f.id;
    EXPECT_EQ(is_didentity(q8, f.ude).status, is_didentity(named_group("Q8"), f.ude).status) << f.id;
  }
}

TEST(Search, ParallelBacktrackIsDeterministic) {
  const auto& s5 = named_group("S5");
  auto f = formula("3.8");
  SearchConfig one, many;
  one.strategy = many.strategy = Strategy::Backtrack;
  one.workers = 1;
  many.workers = 8;
  auto a = is_didentity(s5, f.ude, one);
  for (int rep = 0; rep < 3; ++rep) {
    auto b = is_didentity(s5, f.ude, many);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.counterexample, b.counterexample);
  }
}

TEST(Search, BudgetsGiveIndeterminate) {
  SearchConfig tiny;
  tiny.strategy = Strategy::Backtrack;
  tiny.node_limit = 10;
  auto v = is_didentity(named_group("A6"), formula("4.3").ude, tiny);
  EXPECT_EQ(v.status, Status::Indeterminate);
  EXPECT_FALSE(v.reason.empty());
  SearchConfig ex;
  ex.strategy = Strategy::Exhaustive;
  v = is_didentity(named_group("A6"), formula("4.3").ude, ex);
  EXPECT_EQ(v.status, Status::Indeterminate);
  EXPECT_NE(v.reason.find("360^9"), std::string::npos);
}

TEST(Catalog, KnownFailuresAndWitnesses) {
  for (const auto& f : formula_catalog())
    for (const auto& k : f.known_failures) {
      const auto& g = named_group(k.group);
      auto v = is_didentity(g, f.ude);
      EXPECT_TRUE(v.invalid()) << f.id << " should fail in " << k.group;
      if (k.witness.empty())
        continue;
      std::vector<Elem> a;
      for (const auto& l : k.witness) {
        auto x = g.find_label(l);
        ASSERT_TRUE(x) << l;
        a.push_back(*x);
      }
      EXPECT_TRUE(falsifies(g, f.ude, a)) << f.id << " witness in " << k.group;
    }
}

TEST(Catalog, ClaimedValidityInSmallGroups) {
  for (const auto& f : formula_catalog())
    for (const auto& name : f.claimed_valid_in) {
      const auto& g = named_group(name);
      if (g.order() > 24)
        continue;
      EXPECT_TRUE(is_didentity(g, f.ude).valid()) << f.id << " in " << name;
    }
}

TEST(Catalog, VariantReadings) {
  const auto& s5 = named_group("S5");
  EXPECT_TRUE(is_didentity(s5, formula("3.8").ude).invalid());
  EXPECT_TRUE(is_didentity(s5, formula("3.8a").ude).valid());
  const auto& f20 = named_group("F20");
  EXPECT_TRUE(is_didentity(f20, formula("4.6").ude).valid());
  EXPECT_TRUE(is_didentity(f20, formula("4.6a").ude).invalid());
  auto p = find_formula("paper:2.4");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->id, "2.4");
  EXPECT_FALSE(find_formula("7.7"));
  EXPECT_THROW(formula("5.4[m=5]"), std::invalid_argument);
}

TEST(Catalog, DihedralFamilyIsValidInItsGroup) {
  for (unsigned m = 2; m <= 12; ++m) {
    auto d = dihedral(2 * m);
    std::vector<std::string> ids{"5.1", (m % 2 ? "5.2'" : "5.2") + std::string("[m=") + std::to_string(m) + "]"};
    for (auto p : prime_divisors(m))
      ids.push_back("5.3a[m=" + std::to_string(m) + ",p=" + std::to_string(p) + "]");
    if (m % 2 == 0)
      ids.push_back("5.4a[m=" + std::to_string(m) + "]");
    else
      ids.push_back("5.6[m=" + std::to_string(m) + "]");
    for (const auto& id : ids)
      EXPECT_TRUE(is_didentity(d, formula(id).ude).valid()) << id;
  }
  // Read literally, the bracket list of 5.4 is too weak once 8 divides m.
  EXPECT_TRUE(is_didentity(dihedral(16), formula("5.4[m=8]").ude).invalid());
  EXPECT_TRUE(is_didentity(dihedral(12), formula("5.4[m=6]").ude).valid());
  // The as-printed 5.3 excludes the identity from the membership range.
  EXPECT_TRUE(is_didentity(dihedral(12), formula("5.3[m=6,p=2]").ude).invalid());
}
