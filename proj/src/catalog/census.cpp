#include "dident/census.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "dident/build.hpp"
#include "dident/error.hpp"
#include "dident/subgroup.hpp"

namespace dident {

const std::size_t kCensusCounts[kCensusMaxOrder + 1] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5,
                                                        1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};

namespace {

using Entries = std::vector<GroupCatalogEntry>;

void add(Entries& out, std::string name, std::size_t order, std::string construction,
         std::vector<std::string> aliases = {}, std::string note = {},
         std::vector<std::string> facts = {}) {
  out.push_back({std::move(name), order, std::move(construction), std::move(aliases), std::move(note),
                 std::move(facts)});
}

Entries make_entries() {
  Entries e;
  add(e, "Z1", 1, "cyclic(1)", {"1", "trivial"});
  add(e, "Z2", 2, "cyclic(2)");
  add(e, "Z3", 3, "cyclic(3)");
  add(e, "Z4", 4, "cyclic(4)");
  add(e, "Z2^2", 4, "elementary_abelian(2,2)", {"Z2xZ2", "V4"}, "Klein four-group");
  add(e, "Z5", 5, "cyclic(5)");
  add(e, "Z6", 6, "cyclic(6)", {"Z2xZ3"});
  add(e, "S3", 6, "symmetric(3)", {"D6"});
  add(e, "Z7", 7, "cyclic(7)");
  add(e, "Z8", 8, "cyclic(8)");
  add(e, "Z4xZ2", 8, "direct_product(cyclic(4), cyclic(2))", {"Z2xZ4"}, {}, {"order_count 4 >= 3"});
  add(e, "Z2^3", 8, "elementary_abelian(2,3)", {"Z2xZ2xZ2"});
  add(e, "D8", 8, "dihedral(8)", {}, "symmetries of the square", {"order_count 4 = 2"});
  add(e, "Q8", 8, "quaternion8", {"Dic2"}, "quaternion group", {"order_count 4 >= 3", "involutions = 1"});
  add(e, "Z9", 9, "cyclic(9)");
  add(e, "Z3^2", 9, "elementary_abelian(3,2)", {"Z3xZ3"});
  add(e, "Z10", 10, "cyclic(10)");
  add(e, "D10", 10, "dihedral(10)");
  add(e, "Z11", 11, "cyclic(11)");
  add(e, "Z12", 12, "cyclic(12)");
  add(e, "Z2xZ6", 12, "direct_product(cyclic(2), cyclic(6))", {"Z6xZ2"});
  add(e, "A4", 12, "alternating(4)", {}, {}, {"no_order 6"});
  add(e, "D12", 12, "dihedral(12)", {"Z2xS3"});
  add(e, "Z3:Z4", 12, "semidirect(cyclic(3), cyclic(4), {g1^-1})", {"Dic3"},
      "Z4 acting on Z3 by inversion");
  add(e, "Z13", 13, "cyclic(13)");
  add(e, "Z14", 14, "cyclic(14)");
  add(e, "D14", 14, "dihedral(14)");
  add(e, "Z15", 15, "cyclic(15)");
  add(e, "Z16", 16, "cyclic(16)");
  add(e, "Z4xZ4", 16, "direct_product(cyclic(4), cyclic(4))");
  add(e, "(Z4xZ2):Z2", 16, "semidirect(direct_product(cyclic(4), cyclic(2)), cyclic(2), {g1 g2, g2})",
      {}, {}, {"abelian_subgroup 8"});
  add(e, "Z4:Z4", 16, "semidirect(cyclic(4), cyclic(4), {g1^-1})", {}, {}, {"abelian_subgroup 8"});
  add(e, "Z8xZ2", 16, "direct_product(cyclic(8), cyclic(2))");
  add(e, "M16", 16, "semidirect(cyclic(8), cyclic(2), {g1^5})", {"Z8:Z2"}, "modular group",
      {"abelian_subgroup 8"});
  add(e, "D16", 16, "dihedral(16)", {}, {}, {"abelian_subgroup 8"});
  add(e, "SD16", 16, "semidirect(cyclic(8), cyclic(2), {g1^3})", {"QD16"}, "semidihedral",
      {"abelian_subgroup 8"});
  add(e, "Q16", 16, "dicyclic(16)", {"Dic4"}, "generalized quaternion", {"abelian_subgroup 8"});
  add(e, "Z4xZ2^2", 16, "direct_product(cyclic(4), elementary_abelian(2,2))", {"Z4xZ2xZ2"});
  add(e, "D8xZ2", 16, "direct_product(dihedral(8), cyclic(2))", {"Z2xD8"}, {}, {"abelian_subgroup 8"});
  add(e, "Q8xZ2", 16, "direct_product(quaternion8, cyclic(2))", {"Z2xQ8"}, {}, {"abelian_subgroup 8"});
  add(e, "Pauli", 16, "semidirect(direct_product(cyclic(4), cyclic(2)), cyclic(2), {g1, g1^2 g2})",
      {"Z4oD8"}, "central product of Z4 and D8", {"abelian_subgroup 8"});
  add(e, "Z2^4", 16, "elementary_abelian(2,4)");
  add(e, "Z17", 17, "cyclic(17)");
  add(e, "Z18", 18, "cyclic(18)");
  add(e, "Z3xZ6", 18, "direct_product(cyclic(3), cyclic(6))", {"Z6xZ3"});
  add(e, "D18", 18, "dihedral(18)");
  add(e, "S3xZ3", 18, "direct_product(symmetric(3), cyclic(3))", {"Z3xS3"});
  add(e, "(Z3xZ3):Z2", 18, "semidirect(elementary_abelian(3,2), cyclic(2), {g1^-1, g2^-1})",
      {"Z3^2:Z2"}, "generalized dihedral");
  add(e, "Z19", 19, "cyclic(19)");
  add(e, "Z20", 20, "cyclic(20)");
  add(e, "Z2xZ10", 20, "direct_product(cyclic(2), cyclic(10))");
  add(e, "D20", 20, "dihedral(20)");
  add(e, "Dic5", 20, "dicyclic(20)");
  add(e, "F20", 20, "semidirect(cyclic(5), cyclic(4), {g1^2})", {"Z5:Z4"}, "Frobenius group",
      {"no_order 10"});
  add(e, "Z21", 21, "cyclic(21)");
  add(e, "Z7:Z3", 21, "semidirect(cyclic(7), cyclic(3), {g1^2})");
  add(e, "Z22", 22, "cyclic(22)");
  add(e, "D22", 22, "dihedral(22)");
  add(e, "Z23", 23, "cyclic(23)");
  add(e, "Z24", 24, "cyclic(24)");
  add(e, "Z2xZ12", 24, "direct_product(cyclic(2), cyclic(12))");
  add(e, "Z2^2xZ6", 24, "direct_product(elementary_abelian(2,2), cyclic(6))");
  add(e, "S4", 24, "symmetric(4)", {}, {}, {"no_order 6", "derived_length = 3"});
  add(e, "SL(2,3)", 24, "sl2(3)", {"SL2(3)"}, {}, {"involutions = 1"});
  add(e, "Z3:Z8", 24, "semidirect(cyclic(3), cyclic(8), {g1^-1})");
  add(e, "Dic6", 24, "dicyclic(24)");
  add(e, "Z4xS3", 24, "direct_product(cyclic(4), symmetric(3))", {"S3xZ4"});
  add(e, "D24", 24, "dihedral(24)");
  add(e, "Z2xDic3", 24, "direct_product(cyclic(2), dicyclic(12))");
  add(e, "Z3:D8", 24, "semidirect(cyclic(3), dihedral(8), {g1^-1; g1})", {},
      "rotation of D8 inverts Z3, reflection centralizes it");
  add(e, "D8xZ3", 24, "direct_product(dihedral(8), cyclic(3))", {"Z3xD8"});
  add(e, "Q8xZ3", 24, "direct_product(quaternion8, cyclic(3))", {"Z3xQ8"});
  add(e, "Z2xA4", 24, "direct_product(cyclic(2), alternating(4))", {"A4xZ2"});
  add(e, "Z2^2xS3", 24, "direct_product(elementary_abelian(2,2), symmetric(3))", {"Z2xD12"});

  add(e, "Z5^2", 25, "elementary_abelian(5,2)", {"Z5xZ5"});
  add(e, "Heis27", 27, "semidirect(elementary_abelian(3,2), cyclic(3), {g1, g1 g2})",
      {"3^(1+2)"}, "Heisenberg group mod 3, exponent 3");
  add(e, "(Z3xZ3):Z4", 36, "semidirect(elementary_abelian(3,2), cyclic(4), {g2, g1^-1})",
      {"Z3^2:Z4"}, "Z4 acting fixed-point-freely on Z3^2");
  add(e, "A5", 60, "alternating(5)", {}, {}, {"unsolvable"});
  add(e, "S4:Z3", 72, "perms[(1 2 3 4); (1 2); (1 2 3)(5 6 7)]", {"S4xZ3"},
      "S4 extended by b acting as conjugation by (1 2 3); realized as <S4, (1 2 3)c> with c a 3-cycle "
      "on new points",
      {"has_order 6"});
  add(e, "S5", 120, "symmetric(5)", {}, {}, {"unsolvable"});
  add(e, "SL(2,5)", 120, "sl2(5)", {"SL2(5)"}, "binary icosahedral", {"involutions = 1"});
  add(e, "A5xZ2", 120, "direct_product(alternating(5), cyclic(2))", {"Z2xA5"});
  add(e, "A5xZ3", 180, "direct_product(alternating(5), cyclic(3))", {"Z3xA5"}, {}, {"has_order 15"});
  add(e, "A6", 360, "alternating(6)", {}, {}, {"unsolvable"});
  add(e, "S6", 720, "symmetric(6)");
  return e;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct Cache {
  std::mutex mu;
  std::map<std::string, std::unique_ptr<FiniteGroup>> groups;
};

Cache& cache() {
  static Cache c;
  return c;
}

FiniteGroup build_entry(const GroupCatalogEntry& e) {
  auto g = build_named(e.construction);
  g.set_name(e.name);
  return g;
}

} // namespace

const std::vector<GroupCatalogEntry>& census_entries() {
  static const Entries entries = make_entries();
  return entries;
}

const GroupCatalogEntry* find_census_entry(std::string_view name) {
  auto key = lower(name);
  for (const auto& e : census_entries()) {
    if (lower(e.name) == key)
      return &e;
    for (const auto& a : e.aliases)
      if (lower(a) == key)
        return &e;
  }
  return nullptr;
}

const FiniteGroup& named_group(std::string_view name) {
  const auto* e = find_census_entry(name);
  if (!e)
    throw std::invalid_argument("unknown group '" + std::string(name) + "'");
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto it = c.groups.find(e->name);
  if (it == c.groups.end())
    it = c.groups.emplace(e->name, std::make_unique<FiniteGroup>(build_entry(*e))).first;
  return *it->second;
}

std::vector<const FiniteGroup*> groups_of_order(std::size_t n) {
  if (n < 1 || n > kCensusMaxOrder)
    throw std::out_of_range("groups_of_order: order " + std::to_string(n) + " is outside 1.." +
                            std::to_string(kCensusMaxOrder));
  std::vector<const FiniteGroup*> out;
  for (const auto& e : census_entries())
    if (e.order == n)
      out.push_back(&named_group(e.name));
  return out;
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  std::string name = j.value("name", std::string());
  FiniteGroup g;
  if (j.contains("construction")) {
    g = build_named(j.at("construction").get<std::string>());
  } else if (j.contains("perms")) {
    std::vector<Perm> gens;
    std::size_t degree = 0;
    for (const auto& p : j.at("perms"))
      gens.push_back(Perm::parse(p.get<std::string>()));
    for (const auto& p : gens)
      degree = std::max(degree, p.degree());
    for (auto& p : gens)
      if (p.degree() < degree)
        p = p.extended(degree);
    g = group_from_perm_generators(gens, name);
  } else if (j.contains("table")) {
    auto table = j.at("table").get<std::vector<std::vector<Elem>>>();
    g = from_cayley_table(table, name);
    if (j.contains("elements")) {
      auto labels = j.at("elements").get<std::vector<std::string>>();
      if (labels.size() != g.order())
        throw std::invalid_argument("group json: elements and table sizes differ");
      std::vector<Elem> flat(g.table().begin(), g.table().end());
      std::vector<Elem> gens(g.generators().begin(), g.generators().end());
      g = FiniteGroup(name, g.order(), std::move(flat), std::move(labels), std::move(gens));
    }
  } else {
    throw std::invalid_argument("group json needs one of construction, perms, table");
  }
  if (!name.empty())
    g.set_name(name);
  return g;
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json j;
  j["name"] = g.name();
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> table(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    labels.push_back(g.label(a));
    for (Elem b = 0; b < g.order(); ++b)
      table[a].push_back(g.mul(a, b));
  }
  j["elements"] = labels;
  j["table"] = table;
  return j;
}

FiniteGroup resolve_group(std::string_view spec) {
  if (const auto* e = find_census_entry(spec))
    return named_group(e->name);
  std::string s(spec);
  if (s.size() > 5 && s.ends_with(".json")) {
    std::ifstream in(s);
    if (!in)
      throw std::invalid_argument("cannot open group file '" + s + "'");
    return group_from_json(nlohmann::json::parse(in));
  }
  try {
    return build_named(spec);
  } catch (const ParseError& ex) {
    throw std::invalid_argument("'" + s + "' is neither a census group nor a construction (" +
                                ex.what() + ")");
  }
}

nlohmann::json census_entry_json(const GroupCatalogEntry& e) {
  const auto& g = named_group(e.name);
  nlohmann::json spectrum = nlohmann::json::object();
  for (auto [ord, count] : order_spectrum(g))
    spectrum[std::to_string(ord)] = count;
  return {{"name", e.name},
          {"order", e.order},
          {"construction", e.construction},
          {"aliases", e.aliases},
          {"spectrum", spectrum}};
}

namespace {

std::size_t count_of_order(const FiniteGroup& g, unsigned k) {
  auto spec = order_spectrum(g);
  auto it = spec.find(k);
  return it == spec.end() ? 0 : it->second;
}

bool compare(std::size_t lhs, const std::string& op, std::size_t rhs) {
  if (op == "=")
    return lhs == rhs;
  if (op == ">=")
    return lhs >= rhs;
  if (op == "<=")
    return lhs <= rhs;
  throw std::invalid_argument("census fact: unknown comparison " + op);
}

// Returns (holds, observed).
std::pair<bool, std::string> check_fact(const FiniteGroup& g, const std::string& fact) {
  std::istringstream is(fact);
  std::string kind;
  is >> kind;
  if (kind == "order_count") {
    unsigned k;
    std::string op;
    std::size_t n;
    is >> k >> op >> n;
    auto c = count_of_order(g, k);
    return {compare(c, op, n), std::to_string(c) + " elements of order " + std::to_string(k)};
  }
  if (kind == "involutions") {
    std::string op;
    std::size_t n;
    is >> op >> n;
    auto c = count_of_order(g, 2);
    return {compare(c, op, n), std::to_string(c) + " involutions"};
  }
  if (kind == "has_order" || kind == "no_order") {
    unsigned k;
    is >> k;
    auto c = count_of_order(g, k);
    bool ok = kind == "has_order" ? c > 0 : c == 0;
    return {ok, std::to_string(c) + " elements of order " + std::to_string(k)};
  }
  if (kind == "derived_length") {
    std::string op;
    std::size_t n;
    is >> op >> n;
    auto d = derived_length(g);
    if (!d)
      return {false, "not solvable"};
    return {compare(*d, op, n), "derived length " + std::to_string(*d)};
  }
  if (kind == "unsolvable") {
    bool s = is_solvable(g);
    return {!s, s ? "solvable" : "not solvable"};
  }
  if (kind == "abelian_subgroup") {
    std::size_t n;
    is >> n;
    for (const auto& h : subgroups(g))
      if (h.order() == n) {
        auto hg = subgroup_as_group(g, h.members);
        if (is_abelian(hg))
          return {true, "abelian subgroup " + join_labels(g, h.generators)};
      }
    return {false, "no abelian subgroup of order " + std::to_string(n)};
  }
  throw std::invalid_argument("census fact: unknown kind '" + kind + "'");
}

} // namespace

VerificationReport census_selfcheck() {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.claim = "census";
  for (const auto& e : census_entries()) {
    const auto& g = named_group(e.name);
    ReportItem it;
    it.kind = "order";
    it.group = e.name;
    it.expected = std::to_string(e.order);
    it.status = std::to_string(g.order());
    it.pass = g.order() == e.order;
    r.add(it);
    for (const auto& f : e.facts) {
      auto [ok, observed] = check_fact(g, f);
      r.add({"fact", e.name, {}, observed, f, ok, {}, {}, 0, 0});
    }
  }
  for (std::size_t n = 1; n <= kCensusMaxOrder; ++n) {
    auto groups = groups_of_order(n);
    r.add({"count", "order " + std::to_string(n), {}, std::to_string(groups.size()),
           std::to_string(kCensusCounts[n]), groups.size() == kCensusCounts[n], {}, {}, 0, 0});
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        bool iso = is_isomorphic(*groups[i], *groups[j]).has_value();
        if (iso)
          r.add({"non-isomorphic", groups[i]->name() + " vs " + groups[j]->name(), {}, "isomorphic",
                 "distinct", false, {}, {}, 0, 0});
      }
    r.add({"pairwise-distinct", "order " + std::to_string(n), {}, "checked", "checked", true, {},
           std::to_string(groups.size() * (groups.size() - 1) / 2) + " pairs", 0, 0});
  }
  // Groups of order 24 with no element of order 6: exactly one, and it is S4.
  std::vector<std::string> no6;
  for (const auto* g : groups_of_order(24))
    if (count_of_order(*g, 6) == 0)
      no6.push_back(g->name());
  bool s4 = no6.size() == 1 && is_isomorphic(named_group(no6.front()), symmetric(4)).has_value();
  r.add({"order-24 without order 6", "order 24", {}, no6.empty() ? "none" : no6.front(), "S4", s4,
         no6, {}, 0, 0});
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

} // namespace dident
