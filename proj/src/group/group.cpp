#include "dident/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace dident {

std::optional<std::string> validate_group_table(std::size_t n, std::span<const Elem> t,
                                                std::span<const Elem> generators) {
  if (n == 0)
    return "empty group";
  if (t.size() != n * n)
    return "table size is not order^2";
  auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  std::vector<std::uint8_t> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a)
      return "id 0 is not a two-sided identity";
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      auto v = at(a, b);
      if (v >= n)
        return "table entry out of range";
      if (seen[v]++)
        return "row " + std::to_string(a) + " is not a permutation";
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b)
      if (seen[at(b, a)]++)
        return "column " + std::to_string(a) + " is not a permutation";
  }
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            return "multiplication is not associative";
  } else {
    // (ab)s = a(bs) for every generator s implies associativity by induction
    // on word length, provided the generators generate.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (auto s : generators)
          if (at(at(a, b), s) != at(a, at(b, s)))
            return "multiplication is not associative";
    std::vector<Elem> gens(generators.begin(), generators.end());
    std::vector<bool> in(n, false);
    std::vector<Elem> queue{0};
    in[0] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (auto s : gens) {
        auto x = at(queue[qi], s);
        if (!in[x]) {
          in[x] = true;
          queue.push_back(x);
        }
      }
    if (queue.size() != n)
      return "generators do not generate the group";
  }
  return std::nullopt;
}

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table,
                         std::vector<std::string> labels, std::vector<Elem> generators,
                         std::vector<Perm> perms)
    : name_(std::move(name)), order_(order), table_(std::move(table)), labels_(std::move(labels)),
      generators_(std::move(generators)), perms_(std::move(perms)) {
  if (auto err = validate_group_table(order_, table_, generators_))
    throw std::invalid_argument("FiniteGroup " + name_ + ": " + *err);
  if (labels_.size() != order_)
    throw std::invalid_argument("FiniteGroup " + name_ + ": label count mismatch");
  if (!perms_.empty() && perms_.size() != order_)
    throw std::invalid_argument("FiniteGroup " + name_ + ": permutation image count mismatch");
  check_and_finish();
}

void FiniteGroup::check_and_finish() {
  inv_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  orders_.assign(order_, 1);
  exponent_ = 1;
  for (Elem a = 0; a < order_; ++a) {
    unsigned k = 1;
    for (Elem x = a; x != 0; x = mul(x, a))
      ++k;
    orders_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
}

Elem FiniteGroup::pow(Elem g, long long k) const {
  long long ord = orders_[g];
  long long e = k % ord;
  if (e < 0)
    e += ord;
  Elem r = 0;
  Elem base = g;
  while (e) {
    if (e & 1)
      r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::optional<Elem> FiniteGroup::find_label(std::string_view label) const {
  for (Elem g = 0; g < order_; ++g)
    if (labels_[g] == label)
      return g;
  return std::nullopt;
}

std::optional<Elem> FiniteGroup::find_perm(const Perm& p) const {
  for (Elem g = 0; g < perms_.size(); ++g) {
    const Perm& q = perms_[g];
    if (q.degree() == p.degree() ? q == p
        : q.degree() > p.degree() ? q == p.extended(q.degree())
                                  : p == q.extended(p.degree()))
      return g;
  }
  return std::nullopt;
}

unsigned element_order(const FiniteGroup& g, Elem x) { return g.element_order(x); }

unsigned exponent(const FiniteGroup& g) { return g.exponent(); }

std::map<unsigned, std::size_t> order_spectrum(const FiniteGroup& g) {
  std::map<unsigned, std::size_t> spec;
  for (Elem x = 0; x < g.order(); ++x)
    ++spec[g.element_order(x)];
  return spec;
}

std::vector<Elem> closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto s : gens) {
      auto x = g.mul(members[i], s);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Elem> small_generating_set(const FiniteGroup& g) {
  std::vector<Elem> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0u);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Elem> gens;
  std::vector<Elem> current{0};
  // Greedy: repeatedly add the element that enlarges the closure the most,
  // scanning in decreasing element order.
  while (current.size() < g.order()) {
    std::vector<bool> in(g.order(), false);
    for (auto x : current)
      in[x] = true;
    Elem best = 0;
    std::size_t best_size = 0;
    for (auto cand : by_order) {
      if (in[cand])
        continue;
      auto trial = gens;
      trial.push_back(cand);
      auto size = closure(g, trial).size();
      if (size > best_size) {
        best_size = size;
        best = cand;
        if (size == g.order())
          break;
      }
    }
    gens.push_back(best);
    current = closure(g, gens);
  }
  return gens;
}

std::string join_labels(const FiniteGroup& g, std::span<const Elem> elems) {
  std::string s;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i)
      s += ", ";
    s += g.label(elems[i]);
  }
  return s;
}

} // namespace dident
