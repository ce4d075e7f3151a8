#include <gtest/gtest.h>

#include <random>

#include "dident/census.hpp"
#include "dident/formula_catalog.hpp"
#include "dident/repalg.hpp"
#include "dident/subgroup.hpp"

using namespace dident;

namespace {

using Coeffs = std::vector<long long>;

// Convolution straight from the multiplication table.
Coeffs convolve(const FiniteGroup& g, std::uint32_t p, const Coeffs& a, const Coeffs& b) {
  Coeffs c(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      c[g.mul(x, y)] = (c[g.mul(x, y)] + a[x] * b[y]) % p;
  return c;
}

Coeffs coeffs(const AlgebraElement& a) {
  Coeffs c;
  for (Elem x = 0; x < a.group().order(); ++x)
    c.push_back(a.coeff(x));
  return c;
}

AlgebraElement random_element(const FiniteGroup& g, PrimeField f, std::mt19937_64& rng) {
  AlgebraElement a(g, f);
  std::uniform_int_distribution<std::uint32_t> d(0, f.p - 1);
  for (Elem x = 0; x < g.order(); ++x)
    a.set(x, d(rng));
  return a;
}

} // namespace

TEST(Field, Arithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.reduce(-15), 6u);
  EXPECT_THROW(PrimeField(9), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_EQ(default_prime(8), 3u);
  EXPECT_EQ(default_prime(24), 5u);
  EXPECT_EQ(default_prime(360), 7u);
  EXPECT_EQ(default_prime(1), 2u);
}

TEST(Algebra, RingAxiomsAndConvolutionOracle) {
  std::mt19937_64 rng(42);
  for (auto [name, p] : {std::pair<const char*, std::uint32_t>{"S3", 5}, {"Q8", 3}, {"A4", 7}, {"Z6", 2}}) {
    const auto& g = named_group(name);
    PrimeField f(p);
    auto one = AlgebraElement::embed(g, f, 0);
    for (int t = 0; t < 20; ++t) {
      auto a = random_element(g, f, rng), b = random_element(g, f, rng), c = random_element(g, f, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ(a * one, a);
      EXPECT_EQ(one * a, a);
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ(coeffs(a * b), convolve(g, p, coeffs(a), coeffs(b)));
      Elem x = static_cast<Elem>(t % g.order());
      EXPECT_EQ(a.times(x), a * AlgebraElement::embed(g, f, x));
      EXPECT_EQ(a.scaled(2), a + a);
    }
  }
}

TEST(Standard, SubsetEvaluationMatchesTermExpansion) {
  std::mt19937_64 rng(7);
  for (auto [name, p] : {std::pair<const char*, std::uint32_t>{"S3", 5}, {"D8", 3}}) {
    const auto& g = named_group(name);
    PrimeField f(p);
    for (unsigned k = 1; k <= 6; ++k) {
      std::vector<AlgebraElement> xs;
      std::vector<Elem> gs;
      for (unsigned i = 0; i < k; ++i) {
        xs.push_back(random_element(g, f, rng));
        gs.push_back(static_cast<Elem>(rng() % g.order()));
      }
      EXPECT_EQ(eval_standard(xs), eval_standard_reference(xs)) << name << " k=" << k;
      EXPECT_EQ(eval_repidentity(g, f, standard_polynomial(k), gs), eval_standard_group_reference(g, f, gs));
    }
  }
}

TEST(Standard, LowDegreeForms) {
  const auto& g = named_group("S3");
  PrimeField f(5);
  std::mt19937_64 rng(3);
  auto a = random_element(g, f, rng), b = random_element(g, f, rng);
  std::vector<AlgebraElement> ab{a, b};
  EXPECT_EQ(eval_standard(ab), a * b - b * a);
  auto terms = standard_polynomial_terms(3);
  ASSERT_EQ(terms.size(), 6u);
  long long sum = 0;
  for (const auto& t : terms)
    sum += t.coeff;
  EXPECT_EQ(sum, 0);
  auto s = standard_structure(5);
  EXPECT_EQ(s.term_count, "120");
  EXPECT_TRUE(s.multilinear && s.balanced_signs);
  EXPECT_EQ(factorial_string(20), "2432902008176640000");
  EXPECT_EQ(standard_structure(361).term_count_digits, 769u);
}

TEST(Standard, VanishesAboveGroupOrderOnGroupElements) {
  RepConfig rc;
  rc.mode = RepMode::Sampled;
  rc.samples = 300;
  auto v = is_rep_identity(named_group("S3"), PrimeField(5), standard_polynomial(7), rc);
  EXPECT_EQ(v.status, RepStatus::SampledPass);
  auto w = is_rep_identity(named_group("S3"), PrimeField(5), standard_polynomial(2), RepConfig{});
  EXPECT_EQ(w.status, RepStatus::NotIdentity);
  auto z = is_rep_identity(named_group("Z6"), PrimeField(5), standard_polynomial(2), RepConfig{});
  EXPECT_EQ(z.status, RepStatus::Identity);
}

TEST(Power, ExponentDecidesPowerIdentities) {
  for (std::size_t n = 1; n <= 24; ++n)
    for (const auto* g : groups_of_order(n)) {
      PrimeField f(default_prime(n));
      for (long long e : {1LL, 2LL, 4LL, 6LL, 12LL, 24LL}) {
        bool expected = true;
        for (Elem x = 0; x < g->order(); ++x)
          expected = expected && e % g->element_order(x) == 0;
        auto v = is_rep_identity(*g, f, power_identity(e), RepConfig{});
        EXPECT_EQ(v.status == RepStatus::Identity, expected) << g->name() << " e=" << e;
      }
    }
}

TEST(Solvability, ValueSetsAgreeWithDerivedLength) {
  for (std::size_t n = 1; n <= 24; ++n)
    for (const auto* g : groups_of_order(n)) {
      auto d = derived_length(*g);
      PrimeField f(default_prime(n));
      for (unsigned s = 1; s <= 3; ++s) {
        auto v = is_rep_identity(*g, f, solvability_identity(s), RepConfig{});
        EXPECT_EQ(v.status == RepStatus::Identity, d && *d <= s) << g->name() << " s=" << s;
        if (v.status == RepStatus::NotIdentity)
          EXPECT_FALSE(eval_repidentity(*g, f, solvability_identity(s), v.witness).is_zero());
      }
    }
}

TEST(Translate, StructureFollowsEquations) {
  auto f = formula("2.10");
  auto ri = translate(f.ude, "2.10*");
  EXPECT_EQ(ri.factors.size(), f.ude.equation_count());
  EXPECT_EQ(ri.x_vars, f.ude.variable_count);
  EXPECT_EQ(ri.y_vars, ri.factors.size());
  for (std::size_t i = 0; i < ri.factors.size(); ++i)
    EXPECT_EQ(ri.factors[i].conjugator, ri.x_vars + i + 1);
  EXPECT_THROW(translate(formula("omega8").ude), std::invalid_argument);
  auto w = translate_with_omega(formula("omega3").ude);
  EXPECT_EQ(w.factors.size(), 6u);
  ASSERT_TRUE(w.source);
  EXPECT_EQ(w.source->omegas, std::vector<unsigned>{3});
  EXPECT_EQ(rep_identity("paper:2.10").name, "2.10*");
  EXPECT_THROW(rep_identity("9.9"), std::invalid_argument);
}

// Exhaustive evaluation of a binomial product against a product computed
// factor by factor with the convolution oracle.
TEST(Translate, ExhaustiveMatchesOracleProduct) {
  const auto& g = named_group("D8");
  PrimeField f(3);
  auto ri = rep_identity("2.2*");
  auto n = ri.variable_count();
  std::vector<Elem> a(n, 0);
  bool all_zero = true;
  do {
    Coeffs prod(g.order(), 0);
    prod[0] = 1;
    for (const auto& b : ri.factors) {
      Elem w = eval_word(g, b.f, a);
      if (b.conjugator)
        w = g.conj(w, a[b.conjugator - 1]);
      Coeffs bin(g.order(), 0);
      bin[w] = (bin[w] + 1) % 3;
      bin[0] = (bin[0] + 2) % 3;
      prod = convolve(g, 3, prod, bin);
    }
    EXPECT_EQ(coeffs(eval_repidentity(g, f, ri, a)), prod);
    all_zero = all_zero && std::all_of(prod.begin(), prod.end(), [](long long c) { return c == 0; });
    std::size_t i = n;
    while (i-- > 0 && ++a[i] == g.order())
      a[i] = 0;
    if (i == static_cast<std::size_t>(-1))
      break;
  } while (true);
  EXPECT_TRUE(all_zero);
  EXPECT_EQ(is_rep_identity(g, f, ri, RepConfig{}).status, RepStatus::Identity);
}

TEST(Modes, CertifiedAgreesWithExhaustive) {
  struct Case {
    const char* group;
    const char* id;
  };
  for (auto c : {Case{"D8", "6.3"}, Case{"D8", "2.2*"}, Case{"Q8", "2.3*"}, Case{"S3", "2.2*"}, Case{"A4", "2.7*"},
                 Case{"S4", "2.10*"}, Case{"Z8", "2.2*"}}) {
    const auto& g = named_group(c.group);
    PrimeField f(default_prime(g.order()));
    auto ri = rep_identity(c.id);
    RepConfig ex, ce;
    ce.mode = RepMode::Certified;
    auto a = is_rep_identity(g, f, ri, ex);
    auto b = is_rep_identity(g, f, ri, ce);
    EXPECT_EQ(a.status, b.status) << c.id << " in " << c.group;
    if (b.status == RepStatus::NotIdentity)
      EXPECT_FALSE(eval_repidentity(g, f, ri, b.witness).is_zero());
  }
}

TEST(Modes, SampledIsReproducibleAndNeverCertifies) {
  RepConfig rc;
  rc.mode = RepMode::Sampled;
  rc.samples = 500;
  rc.seed = 11;
  const auto& g = named_group("S4");
  auto a = is_rep_identity(g, PrimeField(5), rep_identity("6.4"), rc);
  auto b = is_rep_identity(g, PrimeField(5), rep_identity("6.4"), rc);
  EXPECT_EQ(a.status, RepStatus::SampledPass);
  EXPECT_EQ(a.evaluations, b.evaluations);
  auto bad = is_rep_identity(g, PrimeField(5), power_identity(6), rc);
  EXPECT_EQ(bad.status, RepStatus::NotIdentity);
  auto bad2 = is_rep_identity(g, PrimeField(5), power_identity(6), rc);
  EXPECT_EQ(bad.witness, bad2.witness);
  EXPECT_STREQ(to_string(RepStatus::SampledPass), "indeterminate(sampled-pass)");
}

TEST(Modes, CharacteristicDividingOrderWarns) {
  auto v = is_rep_identity(named_group("S3"), PrimeField(3), standard_polynomial(2), RepConfig{});
  EXPECT_EQ(v.status, RepStatus::NotIdentity);
  EXPECT_FALSE(v.warnings.empty());
}

TEST(Identities, DihedralAndSymmetricExamples) {
  const auto& d8 = named_group("D8");
  PrimeField f(3);
  RepConfig ex, ce;
  ce.mode = RepMode::Certified;
  EXPECT_EQ(is_rep_identity(d8, f, rep_identity("6.1"), ce).status, RepStatus::Identity);
  EXPECT_EQ(is_rep_identity(d8, f, rep_identity("6.2"), ex).status, RepStatus::Identity);
  EXPECT_EQ(is_rep_identity(d8, f, rep_identity("6.3"), ex).status, RepStatus::Identity);
  EXPECT_EQ(is_rep_identity(named_group("S4"), PrimeField(5), rep_identity("6.4"), ex).status, RepStatus::Identity);
  EXPECT_EQ(is_rep_identity(named_group("S4"), PrimeField(5), rep_identity("6.5"), ex).status, RepStatus::Identity);
}
