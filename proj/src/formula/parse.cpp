#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "dident/error.hpp"
#include "dident/ude.hpp"

namespace dident {
namespace {

struct Token {
  enum Kind { Ident, Int, Sym, End } kind;
  std::string text;
  long long value = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    Token t{Token::Sym, {}, 0, i};
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      t.kind = Token::Ident;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      long long v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        if (v > 1'000'000'000'000LL)
          throw ParseError("integer too large", i);
        v = v * 10 + (s[j] - '0');
        ++j;
      }
      t.kind = Token::Int;
      t.value = v;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if (std::string_view("=|()[]^*~,-{}").find(static_cast<char>(c)) != std::string_view::npos) {
      t.text = std::string(1, static_cast<char>(c));
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{Token::End, {}, 0, s.size()});
  return out;
}

bool is_macro(const std::string& name) {
  return name == "omega" || name == "theta" || name == "in_cyc";
}

class Parser {
public:
  Parser(std::string_view text, char prefix) : toks_(lex(text)), prefix_(prefix) {}

  UDE formula() {
    UDE u = disjunction();
    if (peek().kind != Token::End)
      fail("expected '|' or end of formula");
    return u;
  }

  Word single_word() {
    Word w = word();
    if (peek().kind != Token::End)
      fail("unexpected trailing input");
    return w;
  }

private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool is_sym(char c, std::size_t k = 0) const {
    const Token& t = peek(k);
    return t.kind == Token::Sym && t.text[0] == c;
  }
  bool accept(char c) {
    if (!is_sym(c))
      return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  long long integer() {
    bool neg = accept('-');
    if (peek().kind != Token::Int)
      fail("expected an integer");
    long long v = peek().value;
    ++pos_;
    return neg ? -v : v;
  }

  UDE disjunction() {
    UDE u;
    disjunct(u);
    while (accept('|'))
      disjunct(u);
    return u;
  }

  void disjunct(UDE& u) {
    const Token& t = peek();
    if (t.kind == Token::Ident && is_sym('(', 1) && is_macro(t.text)) {
      macro(u);
      return;
    }
    if (t.kind == Token::Ident && is_sym('(', 1) && !is_var_name(t.text))
      fail("unknown macro '" + t.text + "'");
    if (is_sym('(')) {
      std::size_t save = pos_;
      try {
        ++pos_;
        UDE inner = disjunction();
        expect(')');
        if (!is_sym('|') && !is_sym(')') && peek().kind != Token::End)
          fail("expected '|' after group");
        Clause merged;
        for (auto& c : inner.clauses)
          for (auto& eq : c.equations)
            merged.equations.push_back(std::move(eq));
        if (!merged.equations.empty())
          u.clauses.push_back(std::move(merged));
        for (auto n : inner.omegas)
          u.omegas.push_back(n);
        return;
      } catch (const ParseError& group_err) {
        pos_ = save;
        try {
          u.clauses.push_back(Clause{{equation()}});
        } catch (const ParseError& eq_err) {
          if (eq_err.column() >= group_err.column())
            throw;
          throw group_err;
        }
        return;
      }
    }
    u.clauses.push_back(Clause{{equation()}});
  }

  void macro(UDE& u) {
    std::string name = peek().text;
    pos_ += 2; // name and '('
    if (name == "omega") {
      long long n = integer();
      if (n < 1)
        fail("omega needs a positive argument");
      expect(')');
      u.omegas.push_back(static_cast<unsigned>(n));
    } else if (name == "theta") {
      Word a = word();
      expect(',');
      Word b = word();
      expect(',');
      Word c = word();
      expect(')');
      for (auto& cl : theta_clauses(a, b, c))
        u.clauses.push_back(std::move(cl));
    } else {
      Word a = word();
      expect(',');
      Word b = word();
      expect(',');
      std::size_t at = peek().pos;
      long long lo = integer();
      expect(',');
      long long hi = integer();
      expect(')');
      if (lo > hi)
        throw ParseError("in_cyc: empty exponent range", at);
      u.clauses.push_back(in_cyc_clause(a, b, lo, hi));
    }
  }

  Equation equation() {
    Word lhs = word();
    expect('=');
    Word rhs = word();
    return Equation{std::move(lhs), std::move(rhs)};
  }

  bool is_var_name(const std::string& s) const {
    return s.size() >= 1 && s[0] == prefix_ &&
           (s.size() == 1 || std::isdigit(static_cast<unsigned char>(s[1])));
  }

  bool starts_factor() const {
    const Token& t = peek();
    if (t.kind == Token::Ident || t.kind == Token::Int)
      return true;
    return is_sym('(') || is_sym('[') || is_sym('~');
  }

  Word word() {
    std::vector<Word> factors;
    factors.push_back(factor());
    for (;;) {
      if (accept('*')) {
        factors.push_back(factor());
      } else if (starts_factor()) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    if (factors.size() == 1)
      return std::move(factors[0]);
    return Word::product(std::move(factors));
  }

  Word factor() {
    if (accept('~'))
      return Word::inverse(factor());
    Word w = primary();
    while (accept('^')) {
      if (is_sym('-') || peek().kind == Token::Int) {
        w = Word::power(std::move(w), integer());
      } else if (is_sym('{')) {
        ++pos_;
        if (is_sym('-') || peek().kind == Token::Int) {
          long long k = integer();
          expect('}');
          w = Word::power(std::move(w), k);
        } else {
          Word by = word();
          expect('}');
          w = Word::conjugate(std::move(w), std::move(by));
        }
      } else {
        w = Word::conjugate(std::move(w), primary());
      }
    }
    return w;
  }

  Word primary() {
    const Token& t = peek();
    if (t.kind == Token::Ident) {
      if (is_macro(t.text))
        fail("macro '" + t.text + "' cannot appear inside a word");
      if (!is_var_name(t.text))
        fail("unknown identifier '" + t.text + "'");
      if (t.text.size() == 1)
        fail("variable needs an index");
      std::size_t at = t.pos;
      unsigned long idx = std::stoul(t.text.substr(1));
      if (idx == 0 || idx > 64)
        throw ParseError("variable index out of range", at);
      ++pos_;
      return Word::var(static_cast<unsigned>(idx));
    }
    if (t.kind == Token::Int) {
      if (t.value != 1)
        fail("only the constant 1 may appear in a word");
      ++pos_;
      return Word::one();
    }
    if (accept('(')) {
      Word w = word();
      expect(')');
      return w;
    }
    if (accept('[')) {
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      return Word::commutator(std::move(a), std::move(b));
    }
    if (t.kind == Token::End)
      fail("unexpected end of input");
    fail("unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  char prefix_;
};

} // namespace

UDE parse_formula(std::string_view text) {
  Parser p(text, 'x');
  UDE u = p.formula();
  std::vector<bool> used;
  for (const auto& c : u.clauses)
    for (const auto& eq : c.equations) {
      eq.lhs.collect_vars(used);
      eq.rhs.collect_vars(used);
    }
  unsigned n = used.empty() ? 0 : static_cast<unsigned>(used.size() - 1);
  for (unsigned i = 1; i <= n; ++i)
    if (!used[i])
      throw ParseError("variables must be x1..x" + std::to_string(n) + " without gaps; x" +
                           std::to_string(i) + " is missing",
                       0);
  u.variable_count = n;
  return u;
}

Word parse_word(std::string_view text, char prefix) {
  Parser p(text, prefix);
  return p.single_word();
}

} // namespace dident
