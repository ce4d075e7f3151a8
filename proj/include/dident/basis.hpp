#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dident/report.hpp"
#include "dident/repalg.hpp"
#include "dident/search.hpp"

namespace dident {

struct Elimination {
  std::string group;
  std::string formula; // "bound:<id>" refers to the variant chosen by adjudication
  // Labels for x1, x2, ...; checked independently of the search when given.
  std::vector<std::string> witness;
};

// Verdict reported without affecting the outcome.
struct Observation {
  std::string group;
  std::string formula;
};

// A basis check over a formula subset whose expected gaps are stated up
// front: either none, or exactly / at least the listed groups.
struct BasisControl {
  std::string label;
  std::vector<std::string> formulas;
  bool weak = false;
  std::vector<std::string> expected_gaps;
  bool exact_gaps = true;
};

struct RepObligation {
  std::string group; // empty: the claim target
  std::string identity;
  RepMode mode = RepMode::Exhaustive;
  std::uint32_t prime = 0; // 0: smallest prime not dividing |G|
  std::string expect = "identity"; // identity | not_identity | sampled-pass
  std::uint64_t samples = 0;       // 0: the campaign default
};

struct BasisClaim {
  std::string name;
  std::string target; // census name or construction expression
  std::vector<std::string> formulas;
  std::vector<unsigned> scope_orders;
  std::vector<Elimination> eliminations;
  bool weak = false;
  // Gaps (groups satisfying every formula that are neither sections nor
  // exempt) the exhaustive check must find; empty means none.
  std::vector<std::string> expected_gaps;
  bool exact_gaps = true;
  // Alternative readings of one formula; exactly one must be valid in the
  // target, and "bound:<first id>" then resolves to it.
  std::vector<std::vector<std::string>> variants;
  std::vector<Observation> observations;
  std::vector<BasisControl> controls;
  std::vector<std::string> lemmas; // lemma sweep ids, see verify_lemma_instances
  std::vector<RepObligation> rep_checks;
  std::vector<std::string> notes;
};

struct CampaignConfig {
  SearchConfig search;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
};

VerificationReport verify_validity(const BasisClaim& claim, const CampaignConfig& config = {});
VerificationReport verify_eliminations(const BasisClaim& claim, const CampaignConfig& config = {});
VerificationReport verify_basis_exhaustive(const BasisClaim& claim, const CampaignConfig& config = {});
VerificationReport verify_rep_checks(const BasisClaim& claim, const CampaignConfig& config = {});
// Every part of the claim, in the order validity, variants, eliminations,
// observations, exhaustive basis, controls, lemmas, representation checks.
VerificationReport verify_claim(const BasisClaim& claim, const CampaignConfig& config = {});

// Lemma sweeps:
//   "L1:n"  ordered pairs of n-cycles in S_{n+1}: some alpha beta^d (1 <= d <= n-1) is not an n-cycle
//   "L2"    order-24 census groups without elements of order 6 are exactly {S4}
//   "L3"    pairs of 4-cycles in S5: x1x2, x1x2^2 or x1x2^3 has order dividing 15
//   "L4"    pairs of order-3 elements of A6 in no common Sylow 3-subgroup: alpha beta or alpha beta^2 has order != 3
//   "L5a"   pairs of 5-cycles in S6 with distinct supports: alpha beta, alpha beta^3 or alpha^2 beta is not a 5-cycle
//   "L5b"   census groups of order <= 24 satisfy 5.1 iff abelian or A:Z2 with Z2 inverting A
//   "L7"    for even m <= 24, abelian census groups of exponent dividing m without sections
//           Z2^3, Z4xZ2, Zp^2, ZpxZ2^2 (p odd, p | m) are sections of D_2m
VerificationReport verify_lemma_instances(std::string_view lemma, const CampaignConfig& config = {});
std::vector<std::string> lemma_ids();

// Basis of D_2m: omega(2m), 5.1, 5.2 or 5.2', membership formulas per prime,
// and 5.4/5.5 (m even) or 5.6 (m odd). Eliminations list the obstruction
// groups; scope covers the census when 2m <= 24.
BasisClaim dihedral_basis(unsigned m);
// Obstruction groups for D_2m as construction expressions.
std::vector<std::string> dihedral_obstructions(unsigned m);
// Validity, obstructions and (2m <= 24) the census dichotomy for each m.
VerificationReport verify_dihedral_family(unsigned m_lo, unsigned m_hi, const CampaignConfig& config = {});

// prop1..prop7, thm1..thm4, note-s4-pk, note-s5-312.
std::vector<std::string> builtin_claim_names();
BasisClaim builtin_claim(std::string_view name); // throws std::invalid_argument
// Runs a built-in claim; thm4 covers the dihedral family for m = 2..12.
VerificationReport run_builtin_claim(std::string_view name, const CampaignConfig& config = {});

BasisClaim claim_from_json(const nlohmann::json& j);
nlohmann::json claim_to_json(const BasisClaim& claim);

} // namespace dident
