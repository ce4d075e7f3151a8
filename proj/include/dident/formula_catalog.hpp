#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dident/ude.hpp"

namespace dident {

struct KnownFailure {
  std::string group;
  // Labels for x1, x2, ...; empty when only the failure itself is recorded.
  std::vector<std::string> witness;
};

struct FormulaEntry {
  std::string id;
  std::string text; // formula DSL source
  UDE ude;
  std::vector<std::string> claimed_valid_in;
  std::vector<KnownFailure> known_failures;
  std::string note;
  std::string variant_of; // id of the formula this reading is an alternative to
};

// Every fixed formula, in id order.
const std::vector<FormulaEntry>& formula_catalog();

// Resolves fixed ids ("2.4", "paper:2.4"), omega ids ("omega24") and the
// parameterized dihedral family ("5.2[m=6]", "5.3[m=6,p=3]",
// "5.3a[m=6,p=3]", "5.4[m=6]", "5.4a[m=8]", "5.5[m=6,p=3]", "5.2'[m=5]", "5.6[m=5]").
std::optional<FormulaEntry> find_formula(std::string_view id);

// Like find_formula but throws std::invalid_argument for unknown ids.
FormulaEntry formula(std::string_view id);

// Dihedral family builders. m = p^k * m_p with p prime and gcd(p, m_p) = 1;
// lo is the first exponent of the membership disjunction.
FormulaEntry dihedral_5_1();
FormulaEntry dihedral_5_2(unsigned m);       // x^m = 1 (m even) or (x^2 = 1) | (x^m = 1) (m odd)
FormulaEntry dihedral_5_3(unsigned m, unsigned p, bool with_identity);
// reversed adds the memberships (x_s2 x_s3)^m2 in <x_s1^m2> in place of the
// repeated second bracket.
FormulaEntry dihedral_5_4(unsigned m, bool reversed);
FormulaEntry dihedral_5_5(unsigned m, unsigned p);
FormulaEntry dihedral_5_6(unsigned m);

// Splits m = p^k * rest and returns {p^k, rest}.
std::pair<unsigned, unsigned> split_prime_part(unsigned m, unsigned p);
std::vector<unsigned> prime_divisors(unsigned m);

} // namespace dident
