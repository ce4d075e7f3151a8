#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dident/word.hpp"

namespace dident {

// lhs = rhs, equivalently relator() = 1.
struct Equation {
  Word lhs;
  Word rhs;

  // lhs * rhs^-1, or lhs alone when rhs is the identity.
  Word relator() const;
  bool holds(const FiniteGroup& g, std::span<const Elem> assignment) const;
  std::string str() const;
};

// One top-level disjunct. Macro disjuncts such as in_cyc(a, b, lo, hi) stay
// grouped as a single clause holding several equations.
struct Clause {
  std::vector<Equation> equations;

  bool holds(const FiniteGroup& g, std::span<const Elem> assignment) const;
  std::vector<unsigned> variables() const; // sorted, 1-based
  std::string str() const;
};

// Universally quantified disjunction of equations. The word clauses range
// over x1..x{variable_count}; each Omega(n) builtin is a disjunct over its own
// n+1 dedicated variables, numbered after the word variables in order.
struct UDE {
  std::vector<Clause> clauses;
  std::vector<unsigned> omegas;
  unsigned variable_count = 0;

  std::size_t clause_count() const { return clauses.size() + omegas.size(); }
  std::size_t equation_count() const;
  // Word variables plus the dedicated omega variables.
  std::size_t total_variables() const;
  std::string str() const;
};

// The literal pairwise-equality disjunction over x1..x{n+1}.
UDE omega_literal(unsigned n);

// Replaces every Omega builtin with its literal pairwise-equality form over
// fresh variables appended after the word variables.
UDE expand_omega(const UDE& ude);

// True when the assignment (over total_variables()) falsifies every clause.
bool falsifies(const FiniteGroup& g, const UDE& ude, std::span<const Elem> assignment);

// Formula DSL. Disjuncts are separated by '|'; an equation is "w = w";
// words use juxtaposition or '*', "^k", "^w" for conjugation, "[a,b]",
// "~w" for inverse, and parentheses. Macros: omega(n), theta(a,b,c),
// in_cyc(a, b, lo, hi). Throws ParseError.
UDE parse_formula(std::string_view text);

// A single word over variables named prefix1, prefix2, ...
Word parse_word(std::string_view text, char prefix = 'x');

// Clauses of the D8 formula theta(a, b, c) (18 membership clauses).
std::vector<Clause> theta_clauses(const Word& a, const Word& b, const Word& c);
// a = b^lo | ... | a = b^hi, as one clause.
Clause in_cyc_clause(const Word& a, const Word& b, long long lo, long long hi);

} // namespace dident
