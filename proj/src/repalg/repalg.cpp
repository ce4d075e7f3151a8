#include "dident/repalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "dident/formula_catalog.hpp"

namespace dident {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::uint32_t default_prime(std::size_t n) {
  for (std::uint32_t p = 2;; ++p)
    if (is_prime(p) && n % p != 0)
      return p;
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  if (!is_prime(prime) || prime > 65521)
    throw std::invalid_argument("PrimeField: " + std::to_string(prime) + " is not a supported prime");
}

std::uint32_t PrimeField::reduce(long long v) const {
  long long m = v % static_cast<long long>(p);
  return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

AlgebraElement::AlgebraElement(const FiniteGroup& g, PrimeField f) : g_(&g), f_(f), c_(g.order(), 0) {}

AlgebraElement AlgebraElement::embed(const FiniteGroup& g, PrimeField f, Elem x) {
  AlgebraElement a(g, f);
  a.c_[x] = 1;
  return a;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] = f_.add(c_[i], o.c_[i]);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] = f_.sub(c_[i], o.c_[i]);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.g_ != b.g_ || a.f_.p != b.f_.p)
    throw std::invalid_argument("AlgebraElement: operands live in different algebras");
  const auto& g = *a.g_;
  std::vector<std::uint64_t> acc(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (!a.c_[x])
      continue;
    for (Elem y = 0; y < g.order(); ++y)
      if (b.c_[y])
        acc[g.mul(x, y)] += static_cast<std::uint64_t>(a.c_[x]) * b.c_[y] % a.f_.p;
  }
  AlgebraElement r(g, a.f_);
  for (Elem z = 0; z < g.order(); ++z)
    r.c_[z] = static_cast<std::uint32_t>(acc[z] % a.f_.p);
  return r;
}

AlgebraElement AlgebraElement::scaled(std::uint32_t s) const {
  AlgebraElement r = *this;
  for (auto& v : r.c_)
    v = f_.mul(v, s % f_.p);
  return r;
}

AlgebraElement AlgebraElement::times(Elem x) const {
  AlgebraElement r(*g_, f_);
  for (Elem y = 0; y < g_->order(); ++y)
    r.c_[g_->mul(y, x)] = c_[y];
  return r;
}

std::string AlgebraElement::str() const {
  std::string s;
  for (Elem x = 0; x < g_->order(); ++x) {
    if (!c_[x])
      continue;
    if (!s.empty())
      s += " + ";
    s += std::to_string(c_[x]) + "*" + g_->label(x);
  }
  return s.empty() ? "0" : s;
}

namespace {

bool atomic(const Word& w) {
  return w.kind() == Word::Kind::Var || w.kind() == Word::Kind::Commutator ||
         w.kind() == Word::Kind::Identity;
}

std::string paren(const Word& w) {
  auto s = to_string(w);
  return atomic(w) ? s : "(" + s + ")";
}

} // namespace

std::string RepIdentity::str() const {
  switch (form) {
  case Form::Binomials: {
    std::string s;
    for (const auto& b : factors) {
      s += "(" + paren(b.f);
      if (b.conjugator)
        s += "^y" + std::to_string(b.conjugator - x_vars);
      s += " - 1)";
    }
    return s.empty() ? "1" : s;
  }
  case Form::Polynomial: {
    std::string s;
    for (const auto& t : terms) {
      long long c = t.coeff;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      long long a = c < 0 ? -c : c;
      bool one = t.w.kind() == Word::Kind::Identity;
      if (a != 1 || one)
        s += std::to_string(a) + (one ? "" : "*");
      if (!one)
        s += to_string(t.w);
    }
    return s.empty() ? "0" : s;
  }
  case Form::Standard:
    return "s" + std::to_string(degree) + "(x1, ..., x" + std::to_string(degree) + ")";
  }
  return {};
}

RepIdentity translate(const UDE& ude, std::string name) {
  if (!ude.omegas.empty())
    throw std::invalid_argument("translate: expand omega builtins first");
  RepIdentity ri;
  ri.form = RepIdentity::Form::Binomials;
  ri.name = std::move(name);
  ri.x_vars = ude.variable_count;
  for (const auto& c : ude.clauses)
    for (const auto& e : c.equations)
      ri.factors.push_back({e.relator(), 0});
  ri.y_vars = static_cast<unsigned>(ri.factors.size());
  for (unsigned i = 0; i < ri.factors.size(); ++i)
    ri.factors[i].conjugator = ri.x_vars + i + 1;
  ri.source = ude;
  return ri;
}

RepIdentity translate_with_omega(const UDE& ude, std::string name) {
  auto ri = translate(expand_omega(ude), std::move(name));
  ri.source = ude;
  return ri;
}

RepIdentity power_identity(long long e) {
  RepIdentity ri;
  ri.form = RepIdentity::Form::Polynomial;
  ri.name = "x^" + std::to_string(e) + "-1";
  ri.x_vars = 1;
  ri.terms = {{1, Word::power(Word::var(1), e)}, {-1, Word()}};
  return ri;
}

Word solvability_word(unsigned s) {
  if (s == 0)
    throw std::invalid_argument("solvability_word: s >= 1");
  if (s == 1)
    return Word::commutator(Word::var(1), Word::var(2));
  auto half = solvability_word(s - 1);
  unsigned shift = 1u << (s - 1);
  std::vector<Word> images;
  for (unsigned i = 1; i <= shift; ++i)
    images.push_back(Word::var(i + shift));
  return Word::commutator(half, half.substitute(images));
}

RepIdentity solvability_identity(unsigned s) {
  RepIdentity ri;
  ri.form = RepIdentity::Form::Polynomial;
  ri.name = "v" + std::to_string(s);
  ri.x_vars = 1u << s;
  ri.terms = {{1, solvability_word(s)}, {-1, Word()}};
  ri.solvability_class = s;
  return ri;
}

RepIdentity standard_polynomial(unsigned k) {
  if (k < 1)
    throw std::invalid_argument("standard_polynomial: k >= 1");
  RepIdentity ri;
  ri.form = RepIdentity::Form::Standard;
  ri.name = "s" + std::to_string(k);
  ri.x_vars = k;
  ri.degree = k;
  return ri;
}

std::vector<PolyTerm> standard_polynomial_terms(unsigned k) {
  if (k < 1 || k > 8)
    throw std::invalid_argument("standard_polynomial_terms: 1 <= k <= 8");
  std::vector<unsigned> perm(k);
  for (unsigned i = 0; i < k; ++i)
    perm[i] = i + 1;
  std::vector<PolyTerm> out;
  do {
    int sign = 1;
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = i + 1; j < k; ++j)
        if (perm[i] > perm[j])
          sign = -sign;
    std::vector<Word> f;
    for (auto v : perm)
      f.push_back(Word::var(v));
    out.push_back({sign, Word::product(std::move(f))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

// Signed sum over all orderings of the chosen group elements.
void standard_dfs(const FiniteGroup& g, std::span<const Elem> xs, std::vector<bool>& used, Elem prefix,
                  int sign, unsigned depth, std::vector<long long>& acc) {
  unsigned k = static_cast<unsigned>(xs.size());
  if (depth == k) {
    acc[prefix] += sign;
    return;
  }
  // Choosing the i-th unused index flips the sign once per unused index before it.
  int s = sign;
  for (unsigned i = 0; i < k; ++i) {
    if (used[i])
      continue;
    used[i] = true;
    standard_dfs(g, xs, used, g.mul(prefix, xs[i]), s, depth + 1, acc);
    used[i] = false;
    s = -s;
  }
}

AlgebraElement standard_dfs_group(const FiniteGroup& g, PrimeField f, std::span<const Elem> xs) {
  std::vector<long long> acc(g.order(), 0);
  std::vector<bool> used(xs.size(), false);
  standard_dfs(g, xs, used, 0, 1, 0, acc);
  AlgebraElement r(g, f);
  for (Elem z = 0; z < g.order(); ++z)
    r.add_to(z, acc[z]);
  return r;
}

// dp[S] is the signed sum over orderings of the index set S; appending i to
// S adds one inversion per member of S above i.
AlgebraElement standard_subset_group(const FiniteGroup& g, PrimeField f, std::span<const Elem> xs) {
  unsigned k = static_cast<unsigned>(xs.size());
  std::size_t n = g.order(), full = (std::size_t{1} << k) - 1;
  std::vector<std::uint32_t> dp((full + 1) * n, 0);
  dp[0] = 1;
  for (std::size_t s = 0; s < full; ++s) {
    const auto* src = &dp[s * n];
    if (std::all_of(src, src + n, [](std::uint32_t c) { return c == 0; }))
      continue;
    for (unsigned i = 0; i < k; ++i) {
      if (s >> i & 1)
        continue;
      bool odd = std::popcount(s >> (i + 1)) & 1;
      auto* dst = &dp[(s | std::size_t{1} << i) * n];
      for (Elem z = 0; z < n; ++z)
        if (src[z]) {
          auto& d = dst[g.mul(z, xs[i])];
          d = odd ? f.sub(d, src[z]) : f.add(d, src[z]);
        }
    }
  }
  AlgebraElement r(g, f);
  for (Elem z = 0; z < n; ++z)
    r.set(z, dp[full * n + z]);
  return r;
}

AlgebraElement eval_standard_group(const FiniteGroup& g, PrimeField f, std::span<const Elem> xs) {
  if (xs.size() <= 24 && (std::size_t{1} << xs.size()) * g.order() <= (std::size_t{1} << 26))
    return standard_subset_group(g, f, xs);
  return standard_dfs_group(g, f, xs);
}

void standard_dfs_alg(std::span<const AlgebraElement> xs, std::vector<bool>& used, const AlgebraElement& prefix,
                      bool negative, unsigned depth, AlgebraElement& acc) {
  unsigned k = static_cast<unsigned>(xs.size());
  if (depth == k) {
    if (negative)
      acc -= prefix;
    else
      acc += prefix;
    return;
  }
  bool s = negative;
  for (unsigned i = 0; i < k; ++i) {
    if (used[i])
      continue;
    used[i] = true;
    standard_dfs_alg(xs, used, prefix * xs[i], s, depth + 1, acc);
    used[i] = false;
    s = !s;
  }
}

} // namespace

AlgebraElement eval_standard_reference(std::span<const AlgebraElement> args) {
  if (args.empty())
    throw std::invalid_argument("eval_standard: no arguments");
  const auto& g = args.front().group();
  auto f = args.front().field();
  AlgebraElement acc(g, f);
  std::vector<bool> used(args.size(), false);
  standard_dfs_alg(args, used, AlgebraElement::embed(g, f, 0), false, 0, acc);
  return acc;
}

AlgebraElement eval_standard(std::span<const AlgebraElement> args) {
  if (args.size() > 20)
    return eval_standard_reference(args);
  if (args.empty())
    throw std::invalid_argument("eval_standard: no arguments");
  const auto& g = args.front().group();
  auto f = args.front().field();
  unsigned k = static_cast<unsigned>(args.size());
  std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<AlgebraElement> dp(full + 1, AlgebraElement(g, f));
  dp[0] = AlgebraElement::embed(g, f, 0);
  for (std::size_t s = 0; s < full; ++s) {
    if (dp[s].is_zero())
      continue;
    for (unsigned i = 0; i < k; ++i) {
      if (s >> i & 1)
        continue;
      auto term = dp[s] * args[i];
      auto& d = dp[s | std::size_t{1} << i];
      if (std::popcount(s >> (i + 1)) & 1)
        d -= term;
      else
        d += term;
    }
  }
  return dp[full];
}

AlgebraElement eval_standard_group_reference(const FiniteGroup& g, PrimeField f, std::span<const Elem> xs) {
  return standard_dfs_group(g, f, xs);
}

AlgebraElement eval_repidentity(const FiniteGroup& g, PrimeField f, const RepIdentity& ri,
                                std::span<const Elem> assignment) {
  if (assignment.size() < ri.variable_count())
    throw std::invalid_argument("eval_repidentity: assignment does not cover all variables");
  switch (ri.form) {
  case RepIdentity::Form::Binomials: {
    std::vector<Elem> hs;
    for (const auto& b : ri.factors) {
      Elem h = WordProgram(b.f).eval(g, assignment);
      if (h == 0)
        return AlgebraElement::zero(g, f);
      hs.push_back(b.conjugator ? g.conj(h, assignment[b.conjugator - 1]) : h);
    }
    auto r = AlgebraElement::embed(g, f, 0);
    for (auto h : hs) {
      r = r.times(h) - r;
      if (r.is_zero())
        break;
    }
    return r;
  }
  case RepIdentity::Form::Polynomial: {
    AlgebraElement r(g, f);
    for (const auto& t : ri.terms)
      r.add_to(WordProgram(t.w).eval(g, assignment), t.coeff);
    return r;
  }
  case RepIdentity::Form::Standard:
    return eval_standard_group(g, f, assignment.first(ri.degree));
  }
  return AlgebraElement(g, f);
}

const char* to_string(RepMode m) {
  switch (m) {
  case RepMode::Exhaustive:
    return "exhaustive";
  case RepMode::Certified:
    return "certified";
  case RepMode::Sampled:
    return "sampled";
  }
  return "?";
}

const char* to_string(RepStatus s) {
  switch (s) {
  case RepStatus::Identity:
    return "identity";
  case RepStatus::NotIdentity:
    return "not_identity";
  case RepStatus::SampledPass:
    return "indeterminate(sampled-pass)";
  case RepStatus::Indeterminate:
    return "indeterminate";
  }
  return "?";
}

RepMode parse_rep_mode(std::string_view s) {
  if (s == "exhaustive")
    return RepMode::Exhaustive;
  if (s == "certified")
    return RepMode::Certified;
  if (s == "sampled")
    return RepMode::Sampled;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

namespace {

// Odometer over |G|^n assignments of the positions in vars.
bool next_assignment(std::vector<Elem>& a, std::span<const unsigned> vars, std::size_t order) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    if (++a[*it] < order)
      return true;
    a[*it] = 0;
  }
  return false;
}

std::vector<unsigned> range(unsigned from, unsigned to) {
  std::vector<unsigned> v;
  for (unsigned i = from; i < to; ++i)
    v.push_back(i);
  return v;
}

// Values of v_s over all assignments, level by level, with one producing pair per value.
RepVerdict solvability_exhaustive(const FiniteGroup& g, unsigned s) {
  RepVerdict v;
  v.mode = RepMode::Exhaustive;
  std::size_t n = g.order();
  // witness[level][value] = (left, right) values at the previous level
  std::vector<std::vector<std::pair<Elem, Elem>>> how(s + 1);
  std::vector<Elem> level(n);
  for (Elem x = 0; x < n; ++x)
    level[x] = x;
  for (unsigned j = 1; j <= s; ++j) {
    std::vector<bool> seen(n, false);
    how[j].assign(n, {0, 0});
    std::vector<Elem> next;
    for (auto a : level)
      for (auto b : level) {
        Elem c = g.comm(a, b);
        ++v.evaluations;
        if (!seen[c]) {
          seen[c] = true;
          how[j][c] = {a, b};
          next.push_back(c);
        }
      }
    level = std::move(next);
  }
  v.assignments_covered = std::pow(static_cast<double>(n), static_cast<double>(1u << s));
  auto bad = std::find_if(level.begin(), level.end(), [](Elem x) { return x != 0; });
  if (bad == level.end()) {
    v.status = RepStatus::Identity;
    v.reason = "v" + std::to_string(s) + " takes only the value 1 (commutator value sets)";
    return v;
  }
  // Unfold the producing pairs into an assignment of all 2^s variables.
  std::vector<Elem> cur = {*bad};
  for (unsigned j = s; j >= 1; --j) {
    std::vector<Elem> nxt;
    for (auto c : cur) {
      nxt.push_back(how[j][c].first);
      nxt.push_back(how[j][c].second);
    }
    cur = std::move(nxt);
  }
  v.status = RepStatus::NotIdentity;
  v.witness = cur;
  return v;
}

RepVerdict exhaustive(const FiniteGroup& g, PrimeField f, const RepIdentity& ri, const RepConfig& cfg) {
  if (ri.solvability_class)
    return solvability_exhaustive(g, *ri.solvability_class);
  RepVerdict v;
  v.mode = RepMode::Exhaustive;
  std::size_t n = g.order();
  std::vector<Elem> a(ri.variable_count(), 0);
  auto xs = range(0, ri.x_vars);
  auto ys = range(ri.x_vars, ri.variable_count());
  double y_space = std::pow(static_cast<double>(n), static_cast<double>(ys.size()));
  auto over_budget = [&] {
    if (v.evaluations < cfg.budget)
      return false;
    v.status = RepStatus::Indeterminate;
    v.reason = "exhaustive budget of " + std::to_string(cfg.budget) + " evaluations exhausted";
    return true;
  };
  do {
    if (ri.form == RepIdentity::Form::Binomials) {
      ++v.evaluations;
      bool zero_factor = false;
      for (const auto& b : ri.factors)
        if (WordProgram(b.f).eval(g, a) == 0) {
          zero_factor = true;
          break;
        }
      if (zero_factor) {
        v.assignments_covered += y_space;
        if (over_budget())
          return v;
        continue;
      }
      do {
        ++v.evaluations;
        v.assignments_covered += 1;
        if (!eval_repidentity(g, f, ri, a).is_zero()) {
          v.status = RepStatus::NotIdentity;
          v.witness = a;
          return v;
        }
        if (over_budget())
          return v;
      } while (next_assignment(a, ys, n));
    } else {
      ++v.evaluations;
      v.assignments_covered += 1;
      if (!eval_repidentity(g, f, ri, a).is_zero()) {
        v.status = RepStatus::NotIdentity;
        v.witness = a;
        return v;
      }
      if (over_budget())
        return v;
    }
  } while (next_assignment(a, xs, n));
  v.status = RepStatus::Identity;
  return v;
}

RepVerdict sampled(const FiniteGroup& g, PrimeField f, const RepIdentity& ri, const RepConfig& cfg) {
  RepVerdict v;
  v.mode = RepMode::Sampled;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
  std::vector<Elem> a(ri.variable_count());
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    for (auto& x : a)
      x = pick(rng);
    ++v.evaluations;
    v.assignments_covered += 1;
    if (!eval_repidentity(g, f, ri, a).is_zero()) {
      v.status = RepStatus::NotIdentity;
      v.witness = a;
      return v;
    }
  }
  v.status = RepStatus::SampledPass;
  v.reason = std::to_string(cfg.samples) + " random assignments evaluated to zero";
  return v;
}

RepVerdict certified(const FiniteGroup& g, PrimeField f, const RepIdentity& ri, const RepConfig& cfg) {
  if (ri.form != RepIdentity::Form::Binomials || !ri.source) {
    auto v = exhaustive(g, f, ri, cfg);
    v.warnings.push_back("certified mode needs a translated disjunction; ran exhaustive mode");
    return v;
  }
  RepVerdict v;
  v.mode = RepMode::Certified;
  auto d = is_didentity(g, *ri.source, cfg.search);
  if (d.valid()) {
    v.status = RepStatus::Identity;
    v.reason = "the source disjunction is valid in " + g.name() + " (" + d.stats.strategy +
               "), so every assignment makes some factor vanish";
    v.assignments_covered = std::pow(static_cast<double>(g.order()), static_cast<double>(ri.variable_count()));
    return v;
  }
  if (!d.invalid()) {
    v.status = RepStatus::Indeterminate;
    v.reason = "search for the source disjunction was indeterminate: " + d.reason;
    return v;
  }
  // Only the conjugator extensions of the falsifying assignment remain.
  std::vector<Elem> a(ri.variable_count(), 0);
  std::copy(d.counterexample.begin(), d.counterexample.end(), a.begin());
  auto ys = range(ri.x_vars, ri.variable_count());
  do {
    ++v.evaluations;
    v.assignments_covered += 1;
    if (!eval_repidentity(g, f, ri, a).is_zero()) {
      v.status = RepStatus::NotIdentity;
      v.witness = a;
      v.reason = "the source disjunction fails in " + g.name() + "; a conjugator choice gives a nonzero value";
      return v;
    }
    if (v.evaluations >= cfg.budget)
      break;
  } while (next_assignment(a, ys, g.order()));
  auto e = exhaustive(g, f, ri, cfg);
  e.warnings.push_back("extensions of the falsifying assignment all vanish; ran exhaustive mode");
  return e;
}

} // namespace

RepVerdict is_rep_identity(const FiniteGroup& g, PrimeField f, const RepIdentity& ri, const RepConfig& config) {
  RepVerdict v;
  switch (config.mode) {
  case RepMode::Exhaustive:
    v = exhaustive(g, f, ri, config);
    break;
  case RepMode::Certified:
    v = certified(g, f, ri, config);
    break;
  case RepMode::Sampled:
    v = sampled(g, f, ri, config);
    break;
  }
  if (g.order() % f.p == 0)
    v.warnings.push_back("characteristic " + std::to_string(f.p) + " divides |G| = " + std::to_string(g.order()));
  if (v.status == RepStatus::NotIdentity && eval_repidentity(g, f, ri, v.witness).is_zero() &&
      !ri.solvability_class)
    throw std::logic_error("is_rep_identity: witness evaluates to zero");
  return v;
}

std::optional<RepIdentity> find_rep_identity(std::string_view id) {
  if (id.starts_with("paper:"))
    id.remove_prefix(6);
  std::string s(id);
  auto named = [&](RepIdentity ri, std::string note = {}) {
    ri.name = s;
    ri.note = std::move(note);
    return ri;
  };
  if (s == "6.1") {
    UDE w;
    w.omegas = {8};
    return named(translate_with_omega(w),
                 "omega8 translated; printed with '= 1' inside each factor, read as binomials '- 1'");
  }
  if (s == "6.2")
    return named(power_identity(4), "conjugator-free form of the translation of 2.2");
  if (s == "6.3")
    return named(translate(formula("2.3").ude), "translation of 2.3");
  if (s == "6.4")
    return named(power_identity(12));
  if (s == "6.5")
    return named(solvability_identity(3));
  auto number = [&](std::size_t from, std::size_t to) -> std::optional<long long> {
    if (from >= to || to > s.size() || to - from > 6)
      return std::nullopt;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9')
        return std::nullopt;
    return std::stoll(s.substr(from, to - from));
  };
  if (s.starts_with("x^") && s.ends_with("-1")) {
    if (auto e = number(2, s.size() - 2))
      return named(power_identity(*e));
    return std::nullopt;
  }
  if (s.size() > 1 && s[0] == 'v') {
    if (auto k = number(1, s.size()); k && *k >= 1 && *k <= 5)
      return named(solvability_identity(static_cast<unsigned>(*k)));
    return std::nullopt;
  }
  if (s.size() > 1 && s[0] == 's') {
    if (auto k = number(1, s.size()); k && *k >= 1)
      return named(standard_polynomial(static_cast<unsigned>(*k)));
    return std::nullopt;
  }
  if (s.ends_with("*")) {
    auto f = find_formula(s.substr(0, s.size() - 1));
    if (!f)
      return std::nullopt;
    return named(translate_with_omega(f->ude), "translation of " + f->id);
  }
  // A bare formula id means its translation.
  if (auto f = find_formula(s)) {
    auto r = named(translate_with_omega(f->ude), "translation of " + f->id);
    r.name = f->id + "*";
    return r;
  }
  return std::nullopt;
}

RepIdentity rep_identity(std::string_view id) {
  if (auto r = find_rep_identity(id))
    return *r;
  throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

namespace {

// Little-endian base 10^9 digits.
using Big = std::vector<std::uint32_t>;

void big_mul(Big& a, std::uint32_t m) {
  std::uint64_t carry = 0;
  for (auto& d : a) {
    std::uint64_t v = static_cast<std::uint64_t>(d) * m + carry;
    d = static_cast<std::uint32_t>(v % 1000000000);
    carry = v / 1000000000;
  }
  while (carry) {
    a.push_back(static_cast<std::uint32_t>(carry % 1000000000));
    carry /= 1000000000;
  }
}

void big_add(Big& a, const Big& b) {
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    if (i == a.size())
      a.push_back(0);
    std::uint64_t v = a[i] + carry + (i < b.size() ? b[i] : 0);
    a[i] = static_cast<std::uint32_t>(v % 1000000000);
    carry = v / 1000000000;
  }
}

std::string big_str(const Big& a) {
  std::string s = std::to_string(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    auto part = std::to_string(a[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

} // namespace

std::string factorial_string(unsigned n) {
  Big a = {1};
  for (unsigned i = 2; i <= n; ++i)
    big_mul(a, i);
  return big_str(a);
}

StandardStructure standard_structure(unsigned k) {
  StandardStructure s;
  s.degree = k;
  s.term_count = factorial_string(k);
  s.term_count_digits = s.term_count.size();
  // Count permutations by inversion parity through the inversion table: the
  // i-th entry ranges over 0..i-1.
  Big even = {1}, odd = {0};
  for (unsigned i = 2; i <= k; ++i) {
    Big ne = {0}, no = {0};
    for (unsigned c = 0; c < i; ++c) {
      big_add(c % 2 ? no : ne, even);
      big_add(c % 2 ? ne : no, odd);
    }
    even = std::move(ne);
    odd = std::move(no);
  }
  s.balanced_signs = k >= 2 && big_str(even) == big_str(odd);
  // Every inversion table decodes to an arrangement using each variable once.
  std::mt19937_64 rng(k);
  s.multilinear = true;
  for (int trial = 0; trial < 200 && s.multilinear; ++trial) {
    std::vector<unsigned> pool(k);
    for (unsigned i = 0; i < k; ++i)
      pool[i] = i + 1;
    std::vector<bool> seen(k + 1, false);
    for (unsigned i = k; i >= 1; --i) {
      std::uniform_int_distribution<unsigned> pick(0, i - 1);
      auto it = pool.begin() + pick(rng);
      if (seen[*it])
        s.multilinear = false;
      seen[*it] = true;
      pool.erase(it);
    }
    s.multilinear = s.multilinear && std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
  }
  return s;
}

} // namespace dident
