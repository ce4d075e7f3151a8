#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dident/group.hpp"

namespace dident {

// Free-group word over variables x1, x2, ... kept as an expression tree so
// that printing preserves the way it was written.
class Word {
public:
  enum class Kind : std::uint8_t { Identity, Var, Inverse, Power, Product, Conjugate, Commutator };

  Word() = default; // identity

  static Word one() { return Word(); }
  static Word var(unsigned index); // 1-based
  static Word inverse(Word w);
  static Word power(Word w, long long k);
  static Word product(std::vector<Word> factors);
  // base^by = by^-1 base by
  static Word conjugate(Word base, Word by);
  // [a, b] = a^-1 b^-1 a b
  static Word commutator(Word a, Word b);

  Kind kind() const { return kind_; }
  unsigned var_index() const { return var_; }
  long long exponent() const { return exponent_; }
  const std::vector<Word>& children() const { return children_; }

  // Largest variable index used (0 for a constant word).
  unsigned max_var() const;
  void collect_vars(std::vector<bool>& used) const;

  // Replaces variable i by images[i-1].
  Word substitute(const std::vector<Word>& images) const;

  friend bool operator==(const Word&, const Word&) = default;

private:
  Kind kind_ = Kind::Identity;
  unsigned var_ = 0;
  long long exponent_ = 0;
  std::vector<Word> children_;
};

// A letter of a flattened word: variable index and +1/-1.
struct Letter {
  unsigned var;
  int sign;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced letter sequence. Unique for a given word.
std::vector<Letter> normalize(const Word& w);

std::string to_string(const Word& w, char prefix = 'x');

// Stack program compiled from a Word for fast repeated evaluation.
class WordProgram {
public:
  WordProgram() = default;
  explicit WordProgram(const Word& w);

  // assignment[i] is the value of variable i+1.
  Elem eval(const FiniteGroup& g, std::span<const Elem> assignment) const;
  unsigned max_var() const { return max_var_; }

private:
  enum class Op : std::uint8_t { PushVar, PushOne, Inv, Pow, Mul, Conj, Comm };
  struct Instr {
    Op op;
    long long arg;
  };
  void emit(const Word& w, unsigned depth);

  std::vector<Instr> code_;
  unsigned depth_ = 0;
  unsigned max_var_ = 0;
};

// Evaluates w under the assignment; throws std::invalid_argument when a
// variable is unassigned.
Elem eval_word(const FiniteGroup& g, const Word& w, std::span<const Elem> assignment);

} // namespace dident
