#include "dident/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace dident {

Word Word::var(unsigned index) {
  if (index == 0)
    throw std::invalid_argument("Word::var: variables are 1-based");
  Word w;
  w.kind_ = Kind::Var;
  w.var_ = index;
  return w;
}

Word Word::inverse(Word x) {
  Word w;
  w.kind_ = Kind::Inverse;
  w.children_.push_back(std::move(x));
  return w;
}

Word Word::power(Word x, long long k) {
  Word w;
  w.kind_ = Kind::Power;
  w.exponent_ = k;
  w.children_.push_back(std::move(x));
  return w;
}

Word Word::product(std::vector<Word> factors) {
  if (factors.empty())
    return Word();
  if (factors.size() == 1)
    return std::move(factors.front());
  Word w;
  w.kind_ = Kind::Product;
  w.children_ = std::move(factors);
  return w;
}

Word Word::conjugate(Word base, Word by) {
  Word w;
  w.kind_ = Kind::Conjugate;
  w.children_.push_back(std::move(base));
  w.children_.push_back(std::move(by));
  return w;
}

Word Word::commutator(Word a, Word b) {
  Word w;
  w.kind_ = Kind::Commutator;
  w.children_.push_back(std::move(a));
  w.children_.push_back(std::move(b));
  return w;
}

unsigned Word::max_var() const {
  unsigned m = kind_ == Kind::Var ? var_ : 0;
  for (const auto& c : children_)
    m = std::max(m, c.max_var());
  return m;
}

void Word::collect_vars(std::vector<bool>& used) const {
  if (kind_ == Kind::Var) {
    if (used.size() <= var_)
      used.resize(var_ + 1, false);
    used[var_] = true;
  }
  for (const auto& c : children_)
    c.collect_vars(used);
}

Word Word::substitute(const std::vector<Word>& images) const {
  if (kind_ == Kind::Var) {
    if (var_ > images.size())
      throw std::invalid_argument("Word::substitute: no image for x" + std::to_string(var_));
    return images[var_ - 1];
  }
  Word w = *this;
  for (auto& c : w.children_)
    c = c.substitute(images);
  return w;
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().var == l.var && out.back().sign == -l.sign)
    out.pop_back();
  else
    out.push_back(l);
}

void append(std::vector<Letter>& out, const std::vector<Letter>& w, bool inverted) {
  if (!inverted) {
    for (auto l : w)
      push_reduced(out, l);
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      push_reduced(out, Letter{it->var, -it->sign});
  }
}

} // namespace

std::vector<Letter> normalize(const Word& w) {
  std::vector<Letter> out;
  switch (w.kind()) {
  case Word::Kind::Identity:
    break;
  case Word::Kind::Var:
    out.push_back({w.var_index(), 1});
    break;
  case Word::Kind::Inverse:
    append(out, normalize(w.children()[0]), true);
    break;
  case Word::Kind::Power: {
    auto base = normalize(w.children()[0]);
    long long k = w.exponent();
    for (long long i = 0; i < (k < 0 ? -k : k); ++i)
      append(out, base, k < 0);
    break;
  }
  case Word::Kind::Product:
    for (const auto& c : w.children())
      append(out, normalize(c), false);
    break;
  case Word::Kind::Conjugate: {
    auto base = normalize(w.children()[0]);
    auto by = normalize(w.children()[1]);
    append(out, by, true);
    append(out, base, false);
    append(out, by, false);
    break;
  }
  case Word::Kind::Commutator: {
    auto a = normalize(w.children()[0]);
    auto b = normalize(w.children()[1]);
    append(out, a, true);
    append(out, b, true);
    append(out, a, false);
    append(out, b, false);
    break;
  }
  }
  return out;
}

namespace {

bool is_atomic(const Word& w) {
  return w.kind() == Word::Kind::Var || w.kind() == Word::Kind::Identity ||
         w.kind() == Word::Kind::Commutator;
}

std::string atom(const Word& w, char prefix) {
  auto s = to_string(w, prefix);
  return is_atomic(w) ? s : "(" + s + ")";
}

} // namespace

std::string to_string(const Word& w, char prefix) {
  switch (w.kind()) {
  case Word::Kind::Identity:
    return "1";
  case Word::Kind::Var:
    return std::string(1, prefix) + std::to_string(w.var_index());
  case Word::Kind::Inverse:
    return atom(w.children()[0], prefix) + "^-1";
  case Word::Kind::Power:
    return atom(w.children()[0], prefix) + "^" + std::to_string(w.exponent());
  case Word::Kind::Product: {
    std::string s;
    for (const auto& c : w.children()) {
      if (c.kind() == Word::Kind::Identity)
        continue;
      s += c.kind() == Word::Kind::Product ? "(" + to_string(c, prefix) + ")" : to_string(c, prefix);
    }
    return s.empty() ? "1" : s;
  }
  case Word::Kind::Conjugate:
    return atom(w.children()[0], prefix) + "^" + atom(w.children()[1], prefix);
  case Word::Kind::Commutator:
    return "[" + to_string(w.children()[0], prefix) + "," + to_string(w.children()[1], prefix) + "]";
  }
  return {};
}

WordProgram::WordProgram(const Word& w) {
  max_var_ = w.max_var();
  emit(w, 0);
}

void WordProgram::emit(const Word& w, unsigned depth) {
  depth_ = std::max(depth_, depth + 1);
  switch (w.kind()) {
  case Word::Kind::Identity:
    code_.push_back({Op::PushOne, 0});
    break;
  case Word::Kind::Var:
    code_.push_back({Op::PushVar, static_cast<long long>(w.var_index() - 1)});
    break;
  case Word::Kind::Inverse:
    emit(w.children()[0], depth);
    code_.push_back({Op::Inv, 0});
    break;
  case Word::Kind::Power:
    emit(w.children()[0], depth);
    code_.push_back({Op::Pow, w.exponent()});
    break;
  case Word::Kind::Product:
    emit(w.children()[0], depth);
    for (std::size_t i = 1; i < w.children().size(); ++i) {
      emit(w.children()[i], depth + 1);
      code_.push_back({Op::Mul, 0});
    }
    break;
  case Word::Kind::Conjugate:
    emit(w.children()[0], depth);
    emit(w.children()[1], depth + 1);
    code_.push_back({Op::Conj, 0});
    break;
  case Word::Kind::Commutator:
    emit(w.children()[0], depth);
    emit(w.children()[1], depth + 1);
    code_.push_back({Op::Comm, 0});
    break;
  }
}

Elem WordProgram::eval(const FiniteGroup& g, std::span<const Elem> assignment) const {
  constexpr unsigned kInline = 32;
  Elem inline_stack[kInline] = {};
  std::vector<Elem> heap;
  Elem* stack = inline_stack;
  if (depth_ > kInline) {
    heap.resize(depth_);
    stack = heap.data();
  }
  unsigned sp = 0;
  for (const auto& in : code_) {
    switch (in.op) {
    case Op::PushVar:
      stack[sp++] = assignment[static_cast<std::size_t>(in.arg)];
      break;
    case Op::PushOne:
      stack[sp++] = 0;
      break;
    case Op::Inv:
      stack[sp - 1] = g.inv(stack[sp - 1]);
      break;
    case Op::Pow:
      stack[sp - 1] = g.pow(stack[sp - 1], in.arg);
      break;
    case Op::Mul:
      --sp;
      stack[sp - 1] = g.mul(stack[sp - 1], stack[sp]);
      break;
    case Op::Conj:
      --sp;
      stack[sp - 1] = g.conj(stack[sp - 1], stack[sp]);
      break;
    case Op::Comm:
      --sp;
      stack[sp - 1] = g.comm(stack[sp - 1], stack[sp]);
      break;
    }
  }
  return stack[0];
}

Elem eval_word(const FiniteGroup& g, const Word& w, std::span<const Elem> assignment) {
  auto mv = w.max_var();
  if (mv > assignment.size())
    throw std::invalid_argument("eval_word: variable x" + std::to_string(mv) + " is unassigned");
  for (auto v : assignment)
    if (v >= g.order())
      throw std::invalid_argument("eval_word: assignment holds an id outside the group");
  return WordProgram(w).eval(g, assignment);
}

} // namespace dident
