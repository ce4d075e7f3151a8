#include "dident/subgroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "dident/build.hpp"
#include "dident/error.hpp"

namespace dident {
namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b)
      h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

Bits to_bits(std::size_t n, std::span<const Elem> members) {
  Bits b((n + 63) / 64, 0);
  for (auto x : members)
    b[x / 64] |= std::uint64_t{1} << (x % 64);
  return b;
}

// Drops generators already in the closure of the earlier ones.
std::vector<Elem> reduce_generators(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<Elem> kept;
  std::vector<Elem> current{0};
  for (auto x : gens) {
    if (std::binary_search(current.begin(), current.end(), x))
      continue;
    kept.push_back(x);
    current = closure(g, kept);
  }
  return kept;
}

bool is_prime_power_of(std::size_t n, unsigned p) {
  while (n % p == 0)
    n /= p;
  return n == 1;
}

} // namespace

bool Subgroup::contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Elem> generators) {
  Subgroup s;
  s.parent = &g;
  s.members = closure(g, generators);
  s.generators = std::move(generators);
  return s;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return make_subgroup(g, {}); }

Subgroup whole_group(const FiniteGroup& g) {
  auto gens = g.generators();
  return make_subgroup(g, std::vector<Elem>(gens.begin(), gens.end()));
}

std::vector<Subgroup> subgroups(const FiniteGroup& g, unsigned max_gens, std::size_t max_count) {
  const std::size_t n = g.order();
  std::vector<Subgroup> all;
  std::unordered_set<Bits, BitsHash> seen;
  auto add = [&](std::vector<Elem> gens) -> bool {
    auto members = closure(g, gens);
    if (!seen.insert(to_bits(n, members)).second)
      return false;
    if (all.size() >= max_count)
      throw BudgetExceeded("subgroup enumeration exceeds " + std::to_string(max_count) + " subgroups");
    Subgroup s;
    s.parent = &g;
    s.members = std::move(members);
    s.generators = std::move(gens);
    all.push_back(std::move(s));
    return true;
  };
  add({});
  std::vector<std::size_t> layer;
  for (Elem x = 1; x < n; ++x)
    if (add({x}))
      layer.push_back(all.size() - 1);
  for (unsigned k = 2; (max_gens == 0 || k <= max_gens) && !layer.empty(); ++k) {
    std::vector<std::size_t> next;
    for (auto idx : layer) {
      for (Elem x = 1; x < n; ++x) {
        if (all[idx].contains(x))
          continue;
        auto gens = all[idx].generators;
        gens.push_back(x);
        if (add(std::move(gens)))
          next.push_back(all.size() - 1);
      }
    }
    layer = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.members < b.members;
  });
  return all;
}

bool is_normal(const FiniteGroup& g, const Subgroup& k) {
  std::span<const Elem> ks = k.generators.empty() ? std::span<const Elem>(k.members) : std::span<const Elem>(k.generators);
  for (auto y : ks)
    for (auto s : g.generators())
      if (!k.contains(g.conj(y, s)))
        return false;
  return true;
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> elems) {
  std::vector<Elem> gens;
  std::vector<bool> in(g.order(), false);
  for (auto x : elems) {
    if (in[x])
      continue;
    in[x] = true;
    gens.push_back(x);
  }
  // Close the generating set under conjugation by the group generators.
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (auto s : g.generators()) {
      Elem y = g.conj(gens[i], s);
      if (!in[y]) {
        in[y] = true;
        gens.push_back(y);
      }
    }
  return make_subgroup(g, reduce_generators(g, gens));
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Subgroup> all;
  std::unordered_set<Bits, BitsHash> seen;
  auto add = [&](Subgroup s) {
    if (seen.insert(to_bits(n, s.members)).second)
      all.push_back(std::move(s));
  };
  add(trivial_subgroup(g));
  for (const auto& cls : conjugacy_classes(g))
    if (cls.front() != 0)
      add(normal_closure(g, std::span<const Elem>(&cls.front(), 1)));
  // Every normal subgroup is a join of normal closures of single elements.
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 1; j < i; ++j) {
      auto gens = all[i].generators;
      gens.insert(gens.end(), all[j].generators.begin(), all[j].generators.end());
      auto s = make_subgroup(g, reduce_generators(g, gens));
      add(std::move(s));
    }
  std::stable_sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.members < b.members;
  });
  return all;
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& k) {
  if (!is_normal(g, k))
    throw std::invalid_argument("quotient: subgroup is not normal");
  const std::size_t n = g.order();
  std::vector<Elem> rep(n, 0);
  for (Elem x = 0; x < n; ++x) {
    Elem best = x;
    for (auto y : k.members)
      best = std::min(best, g.mul(y, x));
    rep[x] = best;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x)
    if (rep[x] == x)
      reps.push_back(x);
  std::vector<Elem> id(n, 0);
  for (Elem i = 0; i < reps.size(); ++i)
    id[reps[i]] = i;
  const std::size_t m = reps.size();
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = id[rep[g.mul(reps[a], reps[b])]];
  std::vector<std::string> labels;
  for (auto r : reps)
    labels.push_back(g.label(r));
  std::vector<Elem> gens;
  for (auto s : g.generators()) {
    Elem c = id[rep[s]];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end())
      gens.push_back(c);
  }
  if (gens.empty())
    gens.push_back(0);
  return FiniteGroup(g.name() + "/N" + std::to_string(k.order()), m, std::move(table), std::move(labels),
                     std::move(gens));
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < n; ++x) {
    if (done[x])
      continue;
    std::vector<Elem> cls{x};
    done[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (auto s : g.generators()) {
        Elem y = g.conj(cls[i], s);
        if (!done[y]) {
          done[y] = true;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> sz(g.order());
  for (const auto& cls : conjugacy_classes(g))
    for (auto x : cls)
      sz[x] = cls.size();
  return sz;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup z;
  z.parent = &g;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central)
      z.members.push_back(x);
  }
  z.generators = reduce_generators(g, z.members);
  return z;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> comms;
  for (auto a : h.members)
    for (auto b : h.members) {
      Elem c = g.comm(a, b);
      if (!in[c]) {
        in[c] = true;
        comms.push_back(c);
      }
    }
  std::sort(comms.begin(), comms.end());
  return make_subgroup(g, reduce_generators(g, comms));
}

std::optional<unsigned> derived_length(const FiniteGroup& g) {
  Subgroup h = whole_group(g);
  unsigned len = 0;
  while (h.order() > 1) {
    Subgroup d = commutator_subgroup(g, h);
    if (d.order() == h.order())
      return std::nullopt;
    h = std::move(d);
    ++len;
  }
  return len;
}

bool is_solvable(const FiniteGroup& g) { return derived_length(g).has_value(); }

bool is_abelian(const FiniteGroup& g) {
  auto gens = g.generators();
  for (auto a : gens)
    for (auto b : gens)
      if (g.mul(a, b) != g.mul(b, a))
        return false;
  return true;
}

Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p) {
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p)
    target *= p;
  Subgroup s = trivial_subgroup(g);
  while (s.order() < target) {
    bool grown = false;
    for (Elem x = 1; x < g.order() && !grown; ++x) {
      if (s.contains(x) || !is_prime_power_of(g.element_order(x), p))
        continue;
      bool normalizes = true;
      for (auto y : s.generators)
        if (!s.contains(g.conj(y, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes)
        continue;
      auto gens = s.generators;
      gens.push_back(x);
      auto members = closure(g, gens);
      if (is_prime_power_of(members.size(), p)) {
        s.members = std::move(members);
        s.generators = std::move(gens);
        grown = true;
      }
    }
    if (!grown)
      throw std::logic_error("sylow_subgroup: p-subgroup could not be enlarged");
  }
  return s;
}

std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, unsigned p) {
  Subgroup s = sylow_subgroup(g, p);
  std::vector<Subgroup> all;
  std::unordered_set<Bits, BitsHash> seen;
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Elem> gens;
    for (auto y : s.generators)
      gens.push_back(g.conj(y, x));
    auto c = make_subgroup(g, std::move(gens));
    if (seen.insert(to_bits(g.order(), c.members)).second)
      all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
  return all;
}

// ---- homomorphism search ----

namespace {

class HomSearch {
public:
  HomSearch(const FiniteGroup& s, const FiniteGroup& t, std::vector<Elem> gens,
            std::vector<std::vector<Elem>> cands)
      : s_(s), t_(t), gens_(std::move(gens)), cands_(std::move(cands)), images_(gens_.size()),
        phi_(s.order()), set_(s.order()), used_(t.order()) {}

  std::optional<IsoWitness> run() {
    if (!extend(0))
      return std::nullopt;
    IsoWitness w;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      w.generator_images.emplace_back(gens_[i], images_[i]);
    consistent(gens_.size());
    w.map = phi_;
    return w;
  }

private:
  bool extend(std::size_t i) {
    if (i == gens_.size())
      return true;
    for (auto c : cands_[i]) {
      images_[i] = c;
      if (consistent(i + 1) && extend(i + 1))
        return true;
    }
    return false;
  }

  // Maps the subgroup generated by the first k generators along words and
  // checks that the map is well defined and injective.
  bool consistent(std::size_t k) {
    std::fill(set_.begin(), set_.end(), 0);
    std::fill(used_.begin(), used_.end(), 0);
    std::vector<Elem> queue{0};
    phi_[0] = 0;
    set_[0] = 1;
    used_[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Elem x = queue[qi];
      for (std::size_t j = 0; j < k; ++j) {
        Elem y = s_.mul(x, gens_[j]);
        Elem v = t_.mul(phi_[x], images_[j]);
        if (set_[y]) {
          if (phi_[y] != v)
            return false;
          continue;
        }
        if (used_[v])
          return false;
        set_[y] = 1;
        used_[v] = 1;
        phi_[y] = v;
        queue.push_back(y);
      }
    }
    return true;
  }

  const FiniteGroup& s_;
  const FiniteGroup& t_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> cands_;
  std::vector<Elem> images_;
  std::vector<Elem> phi_;
  std::vector<std::uint8_t> set_;
  std::vector<std::uint8_t> used_;
};

// Candidates per source generator; the first generator only needs one
// image per conjugacy class of the target, since composing with an inner
// automorphism of the target preserves injective homomorphisms.
std::optional<IsoWitness> search_injective(const FiniteGroup& s, const FiniteGroup& t, bool match_classes) {
  auto gens = small_generating_set(s);
  std::vector<std::size_t> s_cls, t_cls;
  if (match_classes) {
    s_cls = class_sizes(s);
    t_cls = class_sizes(t);
  }
  auto t_classes = conjugacy_classes(t);
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto ok = [&](Elem y) {
      return t.element_order(y) == s.element_order(gens[i]) && (!match_classes || t_cls[y] == s_cls[gens[i]]);
    };
    if (i == 0) {
      for (const auto& cls : t_classes)
        if (ok(cls.front()))
          cands[i].push_back(cls.front());
    } else {
      for (Elem y = 0; y < t.order(); ++y)
        if (ok(y))
          cands[i].push_back(y);
    }
  }
  return HomSearch(s, t, std::move(gens), std::move(cands)).run();
}

} // namespace

bool check_isomorphism(const FiniteGroup& g, const FiniteGroup& h, std::span<const Elem> map) {
  if (g.order() != h.order() || map.size() != g.order())
    return false;
  std::vector<bool> hit(h.order(), false);
  for (auto v : map) {
    if (v >= h.order() || hit[v])
      return false;
    hit[v] = true;
  }
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b]))
        return false;
  return true;
}

std::optional<IsoWitness> is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order())
    return std::nullopt;
  if (order_spectrum(g) != order_spectrum(h))
    return std::nullopt;
  if (center(g).order() != center(h).order())
    return std::nullopt;
  auto profile = [](const FiniteGroup& x) {
    auto cs = class_sizes(x);
    std::vector<std::pair<std::size_t, unsigned>> p;
    for (Elem e = 0; e < x.order(); ++e)
      p.emplace_back(cs[e], x.element_order(e));
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(g) != profile(h))
    return std::nullopt;
  return search_injective(g, h, true);
}

std::optional<IsoWitness> find_embedding(const FiniteGroup& t, const FiniteGroup& g) {
  if (g.order() % t.order() != 0)
    return std::nullopt;
  return search_injective(t, g, false);
}

std::optional<SectionWitness> is_section(const FiniteGroup& g, const FiniteGroup& t, unsigned max_gens) {
  if (g.order() % t.order() != 0)
    return std::nullopt;
  if (auto emb = find_embedding(t, g)) {
    SectionWitness w;
    w.h = make_subgroup(g, reduce_generators(g, emb->map));
    w.k = trivial_subgroup(g);
    return w;
  }
  for (const auto& h : subgroups(g, max_gens)) {
    if (h.order() % t.order() != 0 || h.order() == t.order())
      continue;
    std::vector<Elem> embed;
    FiniteGroup hg = subgroup_as_group(g, h.members, {}, &embed);
    const std::size_t want = h.order() / t.order();
    for (const auto& k : normal_subgroups(hg)) {
      if (k.order() != want)
        continue;
      FiniteGroup q = quotient(hg, k);
      if (!is_isomorphic(q, t))
        continue;
      SectionWitness w;
      w.h = h;
      std::vector<Elem> kg;
      for (auto x : k.generators)
        kg.push_back(embed[x]);
      w.k = make_subgroup(g, std::move(kg));
      return w;
    }
  }
  return std::nullopt;
}

} // namespace dident
