#include "dident/ude.hpp"

#include <algorithm>
#include <stdexcept>

namespace dident {

Word Equation::relator() const {
  if (rhs.kind() == Word::Kind::Identity)
    return lhs;
  return Word::product({lhs, Word::inverse(rhs)});
}

bool Equation::holds(const FiniteGroup& g, std::span<const Elem> assignment) const {
  return eval_word(g, lhs, assignment) == eval_word(g, rhs, assignment);
}

std::string Equation::str() const { return to_string(lhs) + " = " + to_string(rhs); }

bool Clause::holds(const FiniteGroup& g, std::span<const Elem> assignment) const {
  for (const auto& eq : equations)
    if (eq.holds(g, assignment))
      return true;
  return false;
}

std::vector<unsigned> Clause::variables() const {
  std::vector<bool> used;
  for (const auto& eq : equations) {
    eq.lhs.collect_vars(used);
    eq.rhs.collect_vars(used);
  }
  std::vector<unsigned> vars;
  for (unsigned i = 1; i < used.size(); ++i)
    if (used[i])
      vars.push_back(i);
  return vars;
}

std::string Clause::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < equations.size(); ++i) {
    if (i)
      s += " | ";
    s += equations[i].str();
  }
  return s + ")";
}

std::size_t UDE::equation_count() const {
  std::size_t n = 0;
  for (const auto& c : clauses)
    n += c.equations.size();
  for (auto w : omegas)
    n += static_cast<std::size_t>(w + 1) * w / 2;
  return n;
}

std::size_t UDE::total_variables() const {
  std::size_t n = variable_count;
  for (auto w : omegas)
    n += w + 1;
  return n;
}

std::string UDE::str() const {
  std::string s;
  for (const auto& c : clauses) {
    if (!s.empty())
      s += " | ";
    s += c.str();
  }
  for (auto w : omegas) {
    if (!s.empty())
      s += " | ";
    s += "omega(" + std::to_string(w) + ")";
  }
  return s.empty() ? "()" : s;
}

UDE omega_literal(unsigned n) {
  UDE u;
  u.variable_count = n + 1;
  for (unsigned i = 1; i <= n + 1; ++i)
    for (unsigned j = i + 1; j <= n + 1; ++j)
      u.clauses.push_back(Clause{{Equation{Word::var(i), Word::var(j)}}});
  return u;
}

UDE expand_omega(const UDE& ude) {
  UDE u;
  u.clauses = ude.clauses;
  u.variable_count = ude.variable_count;
  for (auto n : ude.omegas) {
    unsigned off = u.variable_count;
    for (unsigned i = 1; i <= n + 1; ++i)
      for (unsigned j = i + 1; j <= n + 1; ++j)
        u.clauses.push_back(Clause{{Equation{Word::var(off + i), Word::var(off + j)}}});
    u.variable_count += n + 1;
  }
  return u;
}

bool falsifies(const FiniteGroup& g, const UDE& ude, std::span<const Elem> assignment) {
  if (assignment.size() != ude.total_variables())
    throw std::invalid_argument("falsifies: assignment does not cover all variables");
  for (const auto& c : ude.clauses)
    if (c.holds(g, assignment))
      return false;
  std::size_t off = ude.variable_count;
  for (auto n : ude.omegas) {
    std::vector<Elem> vals(assignment.begin() + static_cast<std::ptrdiff_t>(off),
                           assignment.begin() + static_cast<std::ptrdiff_t>(off + n + 1));
    std::sort(vals.begin(), vals.end());
    if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
      return false;
    off += n + 1;
  }
  return true;
}

Clause in_cyc_clause(const Word& a, const Word& b, long long lo, long long hi) {
  if (lo > hi)
    throw std::invalid_argument("in_cyc: empty exponent range");
  Clause c;
  for (long long i = lo; i <= hi; ++i) {
    Word rhs = i == 0 ? Word::one() : i == 1 ? b : Word::power(b, i);
    c.equations.push_back(Equation{a, std::move(rhs)});
  }
  return c;
}

std::vector<Clause> theta_clauses(const Word& a, const Word& b, const Word& c) {
  const Word w[3] = {a, b, c};
  std::vector<Clause> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j)
        out.push_back(in_cyc_clause(w[i], w[j], 0, 3));
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& s : perms)
    out.push_back(in_cyc_clause(w[s[0]], Word::product({w[s[1]], w[s[2]]}), 0, 3));
  for (const auto& s : perms)
    out.push_back(in_cyc_clause(Word::product({w[s[0]], w[s[1]]}), Word::product({w[s[1]], w[s[2]]}), 0, 3));
  return out;
}

} // namespace dident
