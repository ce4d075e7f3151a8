#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dident/group.hpp"
#include "dident/search.hpp"
#include "dident/ude.hpp"

namespace dident {

struct PrimeField {
  std::uint32_t p = 2;

  explicit PrimeField(std::uint32_t prime); // throws std::invalid_argument unless prime
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t reduce(long long v) const;
};

bool is_prime(std::uint64_t n);
// Smallest prime not dividing n.
std::uint32_t default_prime(std::size_t n);

// Element of F_p[G], coefficients indexed by element id.
class AlgebraElement {
public:
  AlgebraElement(const FiniteGroup& g, PrimeField f);

  static AlgebraElement zero(const FiniteGroup& g, PrimeField f) { return {g, f}; }
  static AlgebraElement embed(const FiniteGroup& g, PrimeField f, Elem x);

  const FiniteGroup& group() const { return *g_; }
  PrimeField field() const { return f_; }
  std::uint32_t coeff(Elem x) const { return c_[x]; }
  void set(Elem x, std::uint32_t v) { c_[x] = v % f_.p; }
  void add_to(Elem x, long long v) { c_[x] = f_.add(c_[x], f_.reduce(v)); }
  bool is_zero() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement scaled(std::uint32_t s) const;
  // Right multiplication by a group element: permutes coefficients.
  AlgebraElement times(Elem x) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.c_ == b.c_; }

  std::string str() const; // "2*e + 1*(1 2)"

private:
  const FiniteGroup* g_;
  PrimeField f_;
  std::vector<std::uint32_t> c_;
};

// (f^y - 1). conjugator is the 1-based index of the y variable among all
// variables, or 0 for the conjugator-free binomial (f - 1).
struct Binomial {
  Word f;
  unsigned conjugator = 0;
};

struct PolyTerm {
  long long coeff;
  Word w;
};

struct RepIdentity {
  enum class Form { Binomials, Polynomial, Standard };

  Form form = Form::Polynomial;
  std::string name;
  // x1..x{x_vars}; y variables of a binomial product are numbered
  // x_vars+1.. in factor order.
  unsigned x_vars = 0;
  unsigned y_vars = 0;
  std::vector<Binomial> factors; // Form::Binomials
  std::vector<PolyTerm> terms;   // Form::Polynomial
  unsigned degree = 0;           // Form::Standard: s_degree
  // v_s - 1 when set; exhaustive mode decides it through commutator value sets.
  std::optional<unsigned> solvability_class;
  // The disjunction a binomial product was translated from (omega kept as a
  // builtin), used by certified mode.
  std::optional<UDE> source;
  std::string note;

  unsigned variable_count() const { return x_vars + y_vars; }
  std::string str() const;
};

// Product over every equation of the UDE of (relator^{y} - 1), with fresh
// conjugator variables in clause order. Omega builtins must be expanded first
// (std::invalid_argument otherwise).
RepIdentity translate(const UDE& ude, std::string name = {});
// Expands omega builtins before translating and keeps the original as source.
RepIdentity translate_with_omega(const UDE& ude, std::string name = {});

// x^e - 1
RepIdentity power_identity(long long e);
// v_s - 1
RepIdentity solvability_identity(unsigned s);
// s_k; terms are not materialized.
RepIdentity standard_polynomial(unsigned k);
// Explicit k! terms, for k <= 8.
std::vector<PolyTerm> standard_polynomial_terms(unsigned k);

// v_1 = [x1, x2], v_{s+1} = [v_s(x1..), v_s(x_{2^s+1}..)].
Word solvability_word(unsigned s);

// Substitutes group elements for all variables and computes in F_p[G].
AlgebraElement eval_repidentity(const FiniteGroup& g, PrimeField f, const RepIdentity& ri,
                                std::span<const Elem> assignment);
// s_k on arbitrary algebra elements (multilinear evaluation), by dynamic
// programming over index subsets.
AlgebraElement eval_standard(std::span<const AlgebraElement> args);
// Term-by-term evaluation over all k! orderings; kept for cross-checking.
AlgebraElement eval_standard_reference(std::span<const AlgebraElement> args);
AlgebraElement eval_standard_group_reference(const FiniteGroup& g, PrimeField f, std::span<const Elem> xs);

enum class RepMode { Exhaustive, Certified, Sampled };
enum class RepStatus { Identity, NotIdentity, SampledPass, Indeterminate };
const char* to_string(RepMode m);
const char* to_string(RepStatus s);
RepMode parse_rep_mode(std::string_view s);

struct RepConfig {
  RepMode mode = RepMode::Exhaustive;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  // Assignments evaluated before exhaustive mode gives up.
  std::uint64_t budget = 200'000'000;
  SearchConfig search; // used by certified mode
};

struct RepVerdict {
  RepStatus status = RepStatus::Indeterminate;
  RepMode mode = RepMode::Exhaustive;
  std::vector<Elem> witness;
  std::string reason;
  std::vector<std::string> warnings;
  std::uint64_t evaluations = 0;
  // Assignments accounted for, including those settled by a zero factor.
  double assignments_covered = 0;
};

RepVerdict is_rep_identity(const FiniteGroup& g, PrimeField f, const RepIdentity& ri,
                           const RepConfig& config = {});

// "6.1".."6.5", "<formula id>*" (or the bare formula id) for the translation
// of a catalog formula, "x^<e>-1", "v<s>" and "s<k>".
std::optional<RepIdentity> find_rep_identity(std::string_view id);
RepIdentity rep_identity(std::string_view id); // throws std::invalid_argument

// Decimal expansion of n!.
std::string factorial_string(unsigned n);

struct StandardStructure {
  unsigned degree = 0;
  std::string term_count; // k! in decimal
  std::size_t term_count_digits = 0;
  bool multilinear = false;
  bool balanced_signs = false;
};
// Structural facts of s_k checked without expanding its terms.
StandardStructure standard_structure(unsigned k);

} // namespace dident
