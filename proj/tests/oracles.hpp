#pragma once

// Brute-force reference implementations used to cross-check the library.
// They only read multiplication tables and never call into the search,
// subgroup or census code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "dident/group.hpp"
#include "dident/ude.hpp"

namespace oracle {

using dident::Elem;
using Table = std::vector<std::vector<Elem>>;

inline Table table_of(const dident::FiniteGroup& g) {
  Table t(g.order(), std::vector<Elem>(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      t[a][b] = g.mul(a, b);
  return t;
}

inline bool closed(const Table& t, const std::vector<Elem>& s, const std::vector<bool>& in) {
  for (auto a : s)
    for (auto b : s)
      if (!in[t[a][b]])
        return false;
  return true;
}

// Subgroups as closed subsets containing the identity; exponential in n.
inline std::size_t subgroup_count(const Table& t) {
  std::size_t n = t.size(), count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<bool> in(n, false);
    std::vector<Elem> s{0};
    in[0] = true;
    for (std::size_t i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1) {
        in[i] = true;
        s.push_back(static_cast<Elem>(i));
      }
    if (n % s.size() == 0 && closed(t, s, in))
      ++count;
  }
  return count;
}

inline Elem inverse(const Table& t, Elem a) {
  for (Elem b = 0; b < t.size(); ++b)
    if (t[a][b] == 0)
      return b;
  return 0;
}

inline unsigned order_of(const Table& t, Elem a) {
  unsigned k = 1;
  for (Elem x = a; x != 0; x = t[x][a])
    ++k;
  return k;
}

inline std::vector<unsigned> spectrum(const Table& t) {
  std::vector<unsigned> s;
  for (Elem a = 0; a < t.size(); ++a)
    s.push_back(order_of(t, a));
  std::sort(s.begin(), s.end());
  return s;
}

inline std::size_t conjugacy_class_count(const Table& t) {
  std::size_t n = t.size(), count = 0;
  std::vector<bool> seen(n, false);
  for (Elem a = 0; a < n; ++a) {
    if (seen[a])
      continue;
    ++count;
    for (Elem g = 0; g < n; ++g)
      seen[t[t[inverse(t, g)][a]][g]] = true;
  }
  return count;
}

inline std::size_t center_size(const Table& t) {
  std::size_t c = 0;
  for (Elem a = 0; a < t.size(); ++a) {
    bool central = true;
    for (Elem b = 0; b < t.size() && central; ++b)
      central = t[a][b] == t[b][a];
    c += central;
  }
  return c;
}

// Bijection search respecting element orders; identity maps to identity.
inline bool isomorphic(const Table& a, const Table& b) {
  std::size_t n = a.size();
  if (n != b.size() || spectrum(a) != spectrum(b))
    return false;
  std::vector<unsigned> oa(n), ob(n);
  for (Elem x = 0; x < n; ++x) {
    oa[x] = order_of(a, x);
    ob[x] = order_of(b, x);
  }
  std::vector<Elem> phi(n, 0);
  std::vector<bool> used(n, false), set(n, false);
  phi[0] = 0;
  used[0] = set[0] = true;
  std::function<bool(Elem)> go = [&](Elem x) -> bool {
    if (x == n)
      return true;
    for (Elem y = 1; y < n; ++y) {
      if (used[y] || ob[y] != oa[x])
        continue;
      phi[x] = y;
      set[x] = used[y] = true;
      bool ok = true;
      for (Elem u = 0; u <= x && ok; ++u) {
        if (!set[u])
          continue;
        Elem p = a[u][x], q = a[x][u];
        if (set[p] && phi[p] != b[phi[u]][y])
          ok = false;
        if (ok && set[q] && phi[q] != b[y][phi[u]])
          ok = false;
      }
      if (ok && go(x + 1))
        return true;
      set[x] = used[y] = false;
    }
    return false;
  };
  return go(1);
}

// All group tables on {0..n-1} with identity 0, filled cell by cell with
// Latin and associativity pruning, then reduced to isomorphism classes.
inline std::vector<Table> groups_of_order(std::size_t n) {
  std::vector<Table> reps;
  if (n == 1)
    return {Table{{0}}};
  Table t(n, std::vector<Elem>(n, 0));
  const Elem unset = static_cast<Elem>(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t[a][b] = a == 0 ? b : b == 0 ? a : unset;
  std::vector<std::vector<bool>> row(n, std::vector<bool>(n, false)), col = row;
  for (Elem a = 0; a < n; ++a) {
    row[a][a] = row[0][a] = true;
    col[a][a] = col[0][a] = true;
  }
  // Checks every associativity triple that reads the cell (a, b).
  auto assoc_ok = [&](Elem a, Elem b) {
    auto agree = [&](Elem x, Elem y, Elem z) {
      Elem xy = t[x][y], yz = t[y][z];
      if (xy == unset || yz == unset)
        return true;
      Elem l = t[xy][z], r = t[x][yz];
      return l == unset || r == unset || l == r;
    };
    for (Elem c = 0; c < n; ++c)
      if (!agree(a, b, c) || !agree(c, a, b))
        return false;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (t[x][y] == a && !agree(x, y, b))
          return false;
        if (t[x][y] == b && !agree(a, x, y))
          return false;
      }
    return true;
  };
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == n * n) {
      for (const auto& r : reps)
        if (isomorphic(r, t))
          return;
      reps.push_back(t);
      return;
    }
    Elem a = static_cast<Elem>(cell / n), b = static_cast<Elem>(cell % n);
    if (t[a][b] != unset) {
      fill(cell + 1);
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      if (row[a][v] || col[b][v])
        continue;
      t[a][b] = v;
      row[a][v] = col[b][v] = true;
      if (assoc_ok(a, b))
        fill(cell + 1);
      row[a][v] = col[b][v] = false;
      t[a][b] = unset;
    }
  };
  fill(0);
  return reps;
}

// Evaluates a word from its free reduction, letter by letter.
inline Elem eval_letters(const dident::FiniteGroup& g, const std::vector<dident::Letter>& w,
                         const std::vector<Elem>& a) {
  Elem r = 0;
  for (auto l : w)
    r = g.mul(r, l.sign > 0 ? a[l.var - 1] : g.inv(a[l.var - 1]));
  return r;
}

// Validity by enumerating every assignment of the omega-expanded formula.
// Returns true when valid; cx receives the first falsifying assignment.
inline bool brute_valid(const dident::FiniteGroup& g, const dident::UDE& ude, std::vector<Elem>* cx = nullptr) {
  auto flat = dident::expand_omega(ude);
  std::size_t vars = flat.total_variables();
  struct Eq {
    std::vector<dident::Letter> lhs, rhs;
  };
  std::vector<std::vector<Eq>> clauses;
  for (const auto& c : flat.clauses) {
    std::vector<Eq> eqs;
    for (const auto& e : c.equations)
      eqs.push_back({dident::normalize(e.lhs), dident::normalize(e.rhs)});
    clauses.push_back(std::move(eqs));
  }
  std::vector<Elem> a(vars, 0);
  while (true) {
    bool some = false;
    for (const auto& c : clauses) {
      for (const auto& e : c)
        if (eval_letters(g, e.lhs, a) == eval_letters(g, e.rhs, a)) {
          some = true;
          break;
        }
      if (some)
        break;
    }
    if (!some) {
      if (cx)
        *cx = a;
      return false;
    }
    std::size_t i = vars;
    while (i > 0) {
      --i;
      if (++a[i] < g.order())
        break;
      a[i] = 0;
      if (i == 0)
        return true;
    }
    if (vars == 0)
      return true;
  }
}

} // namespace oracle
