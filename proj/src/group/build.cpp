#include "dident/build.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "dident/error.hpp"
#include "dident/word.hpp"
#include "dident/ude.hpp"

namespace dident {
namespace {

template <class T>
struct Closure {
  std::vector<T> elems;
  std::vector<Elem> table;
  std::vector<Elem> gen_ids;
  std::vector<Elem> parent;
  std::vector<std::uint32_t> via;
};

// Breadth-first closure under right multiplication by the generators. The
// full table is filled from the generator columns: g * h = (g * parent(h)) * s
// where h = parent(h) * s.
template <class T, class Hash, class Mul>
Closure<T> bfs_closure(const T& one, const std::vector<T>& gens, Mul mul, std::size_t max_order) {
  Closure<T> c;
  std::unordered_map<T, Elem, Hash> index;
  c.elems.push_back(one);
  c.parent.push_back(0);
  c.via.push_back(0);
  index.emplace(one, 0);
  std::vector<std::vector<Elem>> right;
  for (std::size_t i = 0; i < c.elems.size(); ++i) {
    right.emplace_back(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      T x = mul(c.elems[i], gens[j]);
      auto [it, fresh] = index.emplace(x, static_cast<Elem>(c.elems.size()));
      if (fresh) {
        if (c.elems.size() >= max_order)
          throw BudgetExceeded("group closure exceeds " + std::to_string(max_order) + " elements");
        c.elems.push_back(std::move(x));
        c.parent.push_back(static_cast<Elem>(i));
        c.via.push_back(static_cast<std::uint32_t>(j));
      }
      right[i][j] = it->second;
    }
  }
  const std::size_t n = c.elems.size();
  c.table.assign(n * n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    c.table[g * n] = static_cast<Elem>(g);
    for (std::size_t h = 1; h < n; ++h)
      c.table[g * n + h] = right[c.table[g * n + c.parent[h]]][c.via[h]];
  }
  for (const auto& s : gens)
    c.gen_ids.push_back(index.at(s));
  return c;
}

std::string letter(std::uint32_t j) {
  if (j < 26)
    return std::string(1, static_cast<char>('a' + j));
  return "g" + std::to_string(j + 1);
}

// Shortest-word labels such as "a^2b", with "1" for the identity.
template <class T>
std::vector<std::string> word_labels(const Closure<T>& c) {
  std::vector<std::vector<std::uint32_t>> words(c.elems.size());
  for (std::size_t h = 1; h < c.elems.size(); ++h) {
    words[h] = words[c.parent[h]];
    words[h].push_back(c.via[h]);
  }
  std::vector<std::string> labels(c.elems.size());
  for (std::size_t h = 0; h < c.elems.size(); ++h) {
    const auto& w = words[h];
    if (w.empty()) {
      labels[h] = "1";
      continue;
    }
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i])
        ++j;
      s += letter(w[i]);
      if (j - i > 1)
        s += "^" + std::to_string(j - i);
      i = j;
    }
    labels[h] = s;
  }
  return labels;
}

template <class T>
FiniteGroup finish(std::string name, Closure<T>&& c) {
  auto labels = word_labels(c);
  std::size_t n = c.elems.size();
  return FiniteGroup(std::move(name), n, std::move(c.table), std::move(labels), std::move(c.gen_ids));
}

struct PairHash {
  std::size_t operator()(const std::pair<Elem, Elem>& p) const noexcept {
    return (static_cast<std::size_t>(p.first) << 32) ^ p.second;
  }
};

using ElemPair = std::pair<Elem, Elem>;

// Extends generator images to a map on all of g, checking it is a
// well-defined bijective homomorphism g -> g.
std::vector<Elem> extend_automorphism(const FiniteGroup& g, std::span<const Elem> images) {
  const auto gens = g.generators();
  if (images.size() != gens.size())
    throw std::invalid_argument("semidirect: action needs one image per generator");
  std::vector<Elem> phi(g.order(), 0);
  std::vector<bool> set(g.order(), false);
  set[0] = true;
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Elem x = queue[qi];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = g.mul(x, gens[i]);
      Elem v = g.mul(phi[x], images[i]);
      if (!set[y]) {
        set[y] = true;
        phi[y] = v;
        queue.push_back(y);
      } else if (phi[y] != v) {
        throw std::invalid_argument("semidirect: generator images do not define a homomorphism");
      }
    }
  }
  std::vector<bool> hit(g.order(), false);
  for (auto v : phi) {
    if (hit[v])
      throw std::invalid_argument("semidirect: action is not bijective");
    hit[v] = true;
  }
  return phi;
}

} // namespace

FiniteGroup group_from_perm_generators(std::span<const Perm> gens, std::string name, std::size_t max_order) {
  std::size_t degree = 1;
  for (const auto& p : gens)
    degree = std::max(degree, p.degree());
  std::vector<Perm> g;
  for (const auto& p : gens)
    g.push_back(p.extended(degree));
  if (g.empty())
    g.push_back(Perm(degree));
  auto c = bfs_closure<Perm, PermHash>(Perm(degree), g, [](const Perm& a, const Perm& b) { return a * b; },
                                       max_order);
  std::vector<std::string> labels;
  for (const auto& p : c.elems)
    labels.push_back(p.str());
  if (name.empty()) {
    name = "<";
    for (std::size_t i = 0; i < g.size(); ++i)
      name += (i ? ", " : "") + g[i].str();
    name += ">";
  }
  std::size_t n = c.elems.size();
  return FiniteGroup(std::move(name), n, std::move(c.table), std::move(labels), std::move(c.gen_ids),
                     std::move(c.elems));
}

FiniteGroup cyclic(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("cyclic: order must be positive");
  std::vector<unsigned> gens{n == 1 ? 0u : 1u};
  auto c = bfs_closure<unsigned, std::hash<unsigned>>(
      0u, gens, [n](unsigned a, unsigned b) { return (a + b) % n; }, n);
  return finish("Z" + std::to_string(n), std::move(c));
}

FiniteGroup dihedral(unsigned order) {
  if (order < 2 || order % 2)
    throw std::invalid_argument("dihedral: order must be even and at least 2");
  FiniteGroup r = cyclic(order / 2);
  Elem a = r.generators()[0];
  FiniteGroup g = semidirect(r, cyclic(2), {{r.inv(a)}});
  g.set_name("D" + std::to_string(order));
  return g;
}

FiniteGroup dicyclic(unsigned order) {
  if (order < 4 || order % 4)
    throw std::invalid_argument("dicyclic: order must be a positive multiple of 4");
  const unsigned n = order / 4, m = 2 * n;
  auto mul = [n, m](ElemPair x, ElemPair y) -> ElemPair {
    auto [i, j] = x;
    auto [k, l] = y;
    if (j == 0)
      return {(i + k) % m, l};
    if (l == 0)
      return {(i + m - k) % m, 1};
    return {(i + m - k + n) % m, 0};
  };
  std::vector<ElemPair> gens{{1 % m, 0}, {0, 1}};
  auto c = bfs_closure<ElemPair, PairHash>(ElemPair{0, 0}, gens, mul, order);
  return finish(order == 8 ? "Q8" : "Dic" + std::to_string(n), std::move(c));
}

FiniteGroup quaternion8() { return dicyclic(8); }

FiniteGroup elementary_abelian(unsigned p, unsigned k) {
  if (p < 2 || k == 0)
    throw std::invalid_argument("elementary_abelian: need p >= 2 and k >= 1");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    if (order > 1'000'000)
      throw BudgetExceeded("elementary_abelian: order too large");
  }
  auto mul = [p, k](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0, place = 1;
    for (unsigned i = 0; i < k; ++i) {
      r += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return r;
  };
  std::vector<std::uint64_t> gens;
  std::uint64_t place = 1;
  for (unsigned i = 0; i < k; ++i, place *= p)
    gens.push_back(place);
  auto c = bfs_closure<std::uint64_t, std::hash<std::uint64_t>>(0, gens, mul, order);
  std::string name = "Z" + std::to_string(p);
  if (k > 1)
    name += "^" + std::to_string(k);
  return finish(name, std::move(c));
}

FiniteGroup symmetric(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("symmetric: degree must be positive");
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> cyc(n);
    for (unsigned i = 0; i < n; ++i)
      cyc[i] = (i + 1) % n;
    gens.emplace_back(n, cyc);
    if (n > 2)
      gens.push_back(Perm::parse("(1 2)", n));
  }
  return group_from_perm_generators(gens, "S" + std::to_string(n), 1'000'000);
}

FiniteGroup alternating(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("alternating: degree must be positive");
  std::vector<Perm> gens;
  for (unsigned i = 3; i <= n; ++i)
    gens.push_back(Perm::parse("(1 2 " + std::to_string(i) + ")", n));
  if (gens.empty())
    gens.emplace_back(n);
  return group_from_perm_generators(gens, "A" + std::to_string(n), 1'000'000);
}

FiniteGroup special_linear2(unsigned p) {
  if (p < 2)
    throw std::invalid_argument("sl2: p must be prime");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw std::invalid_argument("sl2: p must be prime");
  using M = std::uint64_t; // entries packed base p: a + b p + c p^2 + d p^3
  auto unpack = [p](M x) {
    std::array<std::uint64_t, 4> e{};
    for (auto& v : e) {
      v = x % p;
      x /= p;
    }
    return e;
  };
  auto pack = [p](const std::array<std::uint64_t, 4>& e) {
    return e[0] + p * (e[1] + p * (e[2] + p * e[3]));
  };
  auto mul = [&](M x, M y) {
    auto a = unpack(x), b = unpack(y);
    return pack({(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
                 (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p});
  };
  std::vector<M> gens{pack({1, 1, 0, 1}), pack({0, p - 1, 1, 0})};
  auto c = bfs_closure<M, std::hash<M>>(pack({1, 0, 0, 1}), gens, mul, 1'000'000);
  std::vector<std::string> labels;
  for (auto x : c.elems) {
    auto e = unpack(x);
    labels.push_back("[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" + std::to_string(e[2]) +
                     "," + std::to_string(e[3]) + "]]");
  }
  std::size_t n = c.elems.size();
  return FiniteGroup("SL(2," + std::to_string(p) + ")", n, std::move(c.table), std::move(labels),
                     std::move(c.gen_ids));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<ElemPair> gens;
  for (auto s : g.generators())
    gens.push_back({s, 0});
  for (auto t : h.generators())
    gens.push_back({0, t});
  auto mul = [&](ElemPair x, ElemPair y) -> ElemPair {
    return {g.mul(x.first, y.first), h.mul(x.second, y.second)};
  };
  auto c = bfs_closure<ElemPair, PairHash>(ElemPair{0, 0}, gens, mul, g.order() * h.order());
  return finish(g.name() + "x" + h.name(), std::move(c));
}

FiniteGroup semidirect(const FiniteGroup& a, const FiniteGroup& b, const std::vector<std::vector<Elem>>& action) {
  const auto bgens = b.generators();
  if (action.size() != bgens.size())
    throw std::invalid_argument("semidirect: action needs one tuple per generator of the acting group");
  std::vector<std::vector<Elem>> phi;
  for (const auto& row : action) {
    for (auto x : row)
      if (x >= a.order())
        throw std::invalid_argument("semidirect: action image out of range");
    phi.push_back(extend_automorphism(a, row));
  }
  // psi[b] is the automorphism x -> x^b; psi[b t_j] = phi_j o psi[b].
  std::vector<std::vector<Elem>> psi(b.order());
  psi[0].resize(a.order());
  for (Elem x = 0; x < a.order(); ++x)
    psi[0][x] = x;
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Elem y = queue[qi];
    for (std::size_t j = 0; j < bgens.size(); ++j) {
      Elem z = b.mul(y, bgens[j]);
      std::vector<Elem> m(a.order());
      for (Elem x = 0; x < a.order(); ++x)
        m[x] = phi[j][psi[y][x]];
      if (psi[z].empty()) {
        psi[z] = std::move(m);
        queue.push_back(z);
      } else if (psi[z] != m) {
        throw std::invalid_argument("semidirect: action does not respect the relations of the acting group");
      }
    }
  }
  // Elements (y, x) stand for y * x with y in B and x in A.
  auto mul = [&](ElemPair u, ElemPair v) -> ElemPair {
    return {b.mul(u.first, v.first), a.mul(psi[v.first][u.second], v.second)};
  };
  std::vector<ElemPair> gens;
  for (auto s : a.generators())
    gens.push_back({0, s});
  for (auto t : bgens)
    gens.push_back({t, 0});
  auto c = bfs_closure<ElemPair, PairHash>(ElemPair{0, 0}, gens, mul, a.order() * b.order());
  return finish(a.name() + ":" + b.name(), std::move(c));
}

FiniteGroup from_cayley_table(const std::vector<std::vector<Elem>>& rows, std::string name) {
  const std::size_t n = rows.size();
  if (n == 0)
    throw std::invalid_argument("cayley table is empty");
  std::vector<Elem> table;
  table.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n)
      throw std::invalid_argument("cayley table is not square");
    for (auto v : r) {
      if (v >= n)
        throw std::invalid_argument("cayley table entry out of range");
      table.push_back(v);
    }
  }
  // Greedy generators: add each element not yet reached by right
  // multiplication from the identity.
  std::vector<Elem> gens;
  std::vector<bool> in(n, false);
  in[0] = true;
  std::vector<Elem> reached{0};
  for (Elem x = 1; x < n; ++x) {
    if (in[x])
      continue;
    gens.push_back(x);
    reached.assign(1, 0);
    std::fill(in.begin(), in.end(), false);
    in[0] = true;
    for (std::size_t i = 0; i < reached.size(); ++i)
      for (auto s : gens) {
        Elem y = table[reached[i] * n + s];
        if (!in[y]) {
          in[y] = true;
          reached.push_back(y);
        }
      }
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i)
    labels[i] = i == 0 ? "e" : "e" + std::to_string(i);
  return FiniteGroup(name.empty() ? "G" + std::to_string(n) : std::move(name), n, std::move(table),
                     std::move(labels), std::move(gens));
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, std::span<const Elem> members, std::string name,
                              std::vector<Elem>* embedding) {
  std::vector<Elem> gens;
  std::vector<Elem> current{0};
  for (auto x : members) {
    if (std::binary_search(current.begin(), current.end(), x))
      continue;
    gens.push_back(x);
    current = closure(g, gens);
  }
  if (gens.empty())
    gens.push_back(0);
  auto c = bfs_closure<Elem, std::hash<Elem>>(0, gens, [&g](Elem x, Elem y) { return g.mul(x, y); }, g.order());
  std::vector<std::string> labels;
  std::vector<Perm> perms;
  for (auto x : c.elems) {
    labels.push_back(g.label(x));
    if (g.has_perms())
      perms.push_back(g.perm(x));
  }
  std::size_t n = c.elems.size();
  if (embedding)
    *embedding = c.elems;
  return FiniteGroup(name.empty() ? "H" + std::to_string(n) : std::move(name), n, std::move(c.table),
                     std::move(labels), std::move(c.gen_ids), std::move(perms));
}

// ---- construction expressions ----

namespace {

class ExprParser {
public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  FiniteGroup parse() {
    FiniteGroup g = expr();
    skip();
    if (i_ != s_.size())
      fail("unexpected trailing input");
    return g;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("group expression: " + msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip();
    std::size_t st = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      ++i_;
    if (st == i_)
      fail("expected a construction name");
    return std::string(s_.substr(st, i_ - st));
  }
  unsigned number() {
    skip();
    std::size_t st = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      ++i_;
    if (st == i_)
      fail("expected a number");
    if (i_ - st > 7)
      fail("number too large");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(st, i_ - st))));
  }
  // Text up to the matching close bracket, split at depth-0 separators.
  std::vector<std::string> bracketed(char close, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (depth == 0 && c == close) {
        ++i_;
        parts.push_back(cur);
        return parts;
      }
      if (c == '(' || c == '[' || c == '{')
        ++depth;
      if (c == ')' || c == ']' || c == '}')
        --depth;
      if (depth == 0 && c == sep) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
      ++i_;
    }
    fail(std::string("missing '") + close + "'");
  }

  FiniteGroup expr() {
    std::string name = ident();
    if (name == "perms") {
      expect('[');
      auto parts = bracketed(']', ';');
      std::vector<Perm> gens;
      for (const auto& p : parts) {
        try {
          gens.push_back(Perm::parse(p));
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      }
      return group_from_perm_generators(gens);
    }
    if (name == "quaternion8" || name == "Q8")
      return quaternion8();
    expect('(');
    if (name == "direct_product") {
      FiniteGroup g = expr();
      while (accept(','))
        g = direct_product(g, expr());
      expect(')');
      return g;
    }
    if (name == "semidirect") {
      FiniteGroup a = expr();
      expect(',');
      FiniteGroup b = expr();
      expect(',');
      expect('{');
      auto tuples = bracketed('}', ';');
      expect(')');
      std::vector<std::vector<Elem>> action;
      auto agens = a.generators();
      for (const auto& t : tuples) {
        std::vector<Elem> row;
        std::string cur;
        int depth = 0;
        std::vector<std::string> words;
        for (char c : t) {
          if (c == '(' || c == '[')
            ++depth;
          if (c == ')' || c == ']')
            --depth;
          if (depth == 0 && c == ',') {
            words.push_back(cur);
            cur.clear();
          } else {
            cur += c;
          }
        }
        words.push_back(cur);
        for (const auto& w : words) {
          Word parsed = parse_word(w, 'g');
          if (parsed.max_var() > agens.size())
            fail("action word refers to a missing generator");
          row.push_back(eval_word(a, parsed, agens));
        }
        action.push_back(std::move(row));
      }
      try {
        return semidirect(a, b, action);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    std::vector<unsigned> args{number()};
    while (accept(','))
      args.push_back(number());
    expect(')');
    auto need = [&](std::size_t k) {
      if (args.size() != k)
        fail(name + " takes " + std::to_string(k) + " argument(s)");
    };
    try {
      if (name == "cyclic") {
        need(1);
        return cyclic(args[0]);
      }
      if (name == "dihedral") {
        need(1);
        return dihedral(args[0]);
      }
      if (name == "dicyclic") {
        need(1);
        return dicyclic(args[0]);
      }
      if (name == "elementary_abelian") {
        need(2);
        return elementary_abelian(args[0], args[1]);
      }
      if (name == "symmetric") {
        need(1);
        return symmetric(args[0]);
      }
      if (name == "alternating") {
        need(1);
        return alternating(args[0]);
      }
      if (name == "sl2") {
        need(1);
        return special_linear2(args[0]);
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    fail("unknown construction '" + name + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

} // namespace

FiniteGroup build_named(std::string_view expression) { return ExprParser(expression).parse(); }

} // namespace dident
