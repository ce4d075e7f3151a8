// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "dident/basis.hpp"
#include "dident/build.hpp"
#include "dident/census.hpp"
#include "dident/formula_catalog.hpp"
#include "dident/search.hpp"
#include "dident/subgroup.hpp"

using namespace dident;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

const ReportItem* item(const VerificationReport& r, const std::string& kind, const std::string& group,
                       const std::string& formula = {}) {
  for (const auto& it : r.items)
    if (it.kind == kind && it.group == group && (formula.empty() || it.formula == formula))
      return &it;
  return nullptr;
}

bool item_passes(const VerificationReport& r, const std::string& kind, const std::string& group,
                 const std::string& formula = {}) {
  const auto* it = item(r, kind, group, formula);
  return it && it->pass;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CampaignConfig fixed_config() {
  CampaignConfig c;
  c.seed = 20240601;
  return c;
}

void ac1(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = run_builtin_claim("prop1", fixed_config());
  double s = elapsed(t0);
  o.require(r.pass, "prop1 report");
  for (const char* f : {"2.1", "2.2", "2.3", "2.4"})
    o.require(item_passes(r, "validity", "D8", f), std::string(f) + " valid in D8");
  const auto* gaps = item(r, "control without 2.4: gaps", "D8");
  o.require(gaps && gaps->status == "Z2^3", "dropping 2.4 leaves exactly Z2^3");
  o.require(s < 5, "runtime < 5 s");
  o.detail << "prop1 in " << s << " s; control gap " << (gaps ? gaps->status : "?");
}

void ac2(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  for (const char* c : {"prop2", "prop3", "prop4"}) {
    auto r = run_builtin_claim(c, fixed_config());
    o.require(r.pass, std::string(c) + " report");
    if (std::string(c) == "prop4") {
      const auto* l2 = item(r, "lemma L2", "order 24");
      o.require(l2 && l2->pass && l2->status == "S4", "exactly one order-24 group without order 6, isomorphic to S4");
    }
  }
  double s = elapsed(t0);
  o.require(s < 120, "runtime < 2 min");
  o.detail << "Q8 (orders <= 8), A4 (<= 12), S4 (<= 24) in " << s << " s";
}

void ac3(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = run_builtin_claim("thm1", fixed_config());
  double s = elapsed(t0);
  o.require(r.pass, "thm1 report");
  for (const char* f : {"3.1", "3.2", "3.3", "3.4"})
    o.require(item_passes(r, "validity", "A5", f), std::string(f) + " valid in A5");
  o.require(item_passes(r, "elimination", "Z2^3", "3.2"), "Z2^3 fails 3.2");
  o.require(item_passes(r, "elimination", "Z3^2", "3.3"), "Z3^2 fails 3.3");
  o.require(item_passes(r, "elimination", "Z5^2", "3.4"), "Z5^2 fails 3.4");
  o.require(s < 60, "runtime < 1 min");
  o.detail << "A5 in " << s << " s";
}

void ac4(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto cfg = fixed_config();
  cfg.search.strategy = Strategy::Backtrack;
  auto claim = builtin_claim("thm2");
  auto r = verify_claim(claim, cfg);
  o.require(r.pass, "thm2 report");
  for (const char* f : {"3.5", "3.6", "3.7", "3.9", "3.10", "3.11"})
    o.require(item_passes(r, "validity", "S5", f), std::string(f) + " valid in S5");
  const auto* adj = item(r, "adjudication", "S5");
  o.require(adj && adj->pass, "exactly one reading of 3.8 valid");
  const auto* printed = item(r, "variant", "S5", "3.8");
  const auto* corrected = item(r, "variant", "S5", "3.8a");
  o.require(printed && corrected && printed->status != corrected->status, "both readings searched");
  auto note = run_builtin_claim("note-s5-312", cfg);
  const auto* e = item(note, "elimination", "S5", "3.12");
  o.require(e && e->pass && e->detail.find("stated witness falsifies") != std::string::npos,
            "3.12 invalid with witness ((1 2 3)(4 5), (1 4)(2 5))");
  double s = elapsed(t0);
  o.require(s < 300, "runtime < 5 min");
  o.detail << "S5 with backtracking in " << s << " s; " << (adj ? adj->detail : "");
}

void ac5(Outcome& o) {
  auto r = run_builtin_claim("note-s4-pk", fixed_config());
  o.require(r.pass, "note-s4-pk report");
  const auto* q = item(r, "disposition", "Q8");
  o.require(q && q->status == "gap", "Q8 satisfies the list");
  o.require(!is_section(named_group("S4"), named_group("Q8")), "Q8 is not a section of S4");
  o.detail << "Q8 satisfies omega24, 2.10, 2.11, pk-s4 and is not a section of S4";
}

void ac6(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = run_builtin_claim("thm3", fixed_config());
  o.require(r.pass, "thm3 report");
  for (const char* f : {"4.1", "4.2", "4.3", "4.4", "4.5", "4.6a", "4.7"})
    o.require(item_passes(r, "validity", "A6", f), std::string(f) + " valid in A6");
  o.require(item(r, "observation", "A6", "4.6") != nullptr, "comma reading of 4.6 reported");
  const auto* f20 = item(r, "elimination", "F20", "4.6a");
  o.require(f20 && f20->pass && f20->detail.find("stated witness falsifies") != std::string::npos,
            "F20 fails 4.6 at (a, b)");
  o.require(item_passes(r, "elimination", "Z2^3", "4.5"), "Z2^3 fails 4.5");
  o.require(item_passes(r, "elimination", "Heis27", "4.3"), "Heis27 fails 4.3");
  SearchConfig bt;
  bt.strategy = Strategy::Backtrack;
  auto t1 = std::chrono::steady_clock::now();
  auto v = is_didentity(named_group("A6"), formula("4.3").ude, bt);
  double s43 = elapsed(t1);
  o.require(v.valid() && s43 < 60, "4.3 by backtracking in < 60 s");
  o.detail << "A6 in " << elapsed(t0) << " s; 4.3 by backtracking in " << s43 << " s (" << v.stats.nodes
           << " nodes)";
}

void ac7(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto v = is_didentity(named_group("S6"), formula("3.11").ude);
  double s = elapsed(t0);
  o.require(v.valid(), "3.11 valid in S6");
  o.require(s < 120, "runtime < 2 min");
  o.detail << "3.11 in S6: " << to_string(v.status) << " in " << s << " s";
}

void ac8(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = run_builtin_claim("thm4", fixed_config());
  o.require(r.pass, "thm4 report");
  std::size_t validity = 0, eliminations = 0, dispositions = 0;
  for (const auto& it : r.items) {
    validity += it.kind.ends_with(" validity") && it.pass;
    eliminations += it.kind.ends_with(" elimination") && it.pass;
    dispositions += it.kind.ends_with(" disposition");
  }
  for (unsigned m = 2; m <= 12; ++m)
    o.require(item(r, "m=" + std::to_string(m) + " gaps", "D" + std::to_string(2 * m)) != nullptr,
              "census dichotomy for m=" + std::to_string(m));
  o.require(item_passes(r, "lemma L5b", "census 1..24"), "L5b sweep");
  o.require(item_passes(r, "lemma L7", "D_2m, m = 2..24 even"), "L7 sweep");
  o.detail << validity << " formulas valid, " << eliminations << " obstructions eliminated, " << dispositions
           << " census dispositions, in " << elapsed(t0) << " s";
}

void ac9(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t l5 = 0;
  for (const char* id : {"L1:3", "L1:4", "L1:5", "L3", "L4", "L5a"}) {
    auto r = verify_lemma_instances(id, fixed_config());
    o.require(r.pass, id);
    if (std::string(id) == "L5a" && !r.items.empty())
      l5 = r.items[0].nodes;
  }
  double s = elapsed(t0);
  o.require(l5 > 17000, "L5a covers the ordered 5-cycle pairs");
  o.require(s < 60, "runtime < 1 min");
  o.detail << "L5a checked " << l5 << " pairs; sweeps in " << s << " s";
}

void ac10(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  for (const char* c : {"prop5", "prop6", "prop7"}) {
    auto r = run_builtin_claim(c, fixed_config());
    o.require(r.pass, std::string(c) + " report");
    for (const auto& it : r.items)
      if (it.kind == "rep" && it.expected == "identity")
        o.require(it.detail.starts_with("exhaustive") || it.detail.starts_with("certified"),
                  it.formula + " positive verdict must come from exhaustive or certified mode");
    if (std::string(c) == "prop6") {
      const auto* sampled = item(r, "rep", "S4", "6.5");
      bool has_sampled = false;
      for (const auto& it : r.items)
        has_sampled = has_sampled || (it.formula == "6.5" && it.status == "sampled-pass" && it.nodes >= 10000);
      o.require(sampled && has_sampled, "6.5 sampled on 10^4 tuples");
    }
    if (std::string(c) == "prop7") {
      const auto* s361 = item(r, "structure", "A6", "s361");
      o.require(s361 && s361->pass, "s361 structural object");
      bool explicit_note = false;
      for (const auto& n : r.notes)
        explicit_note = explicit_note || n.find("s361") != std::string::npos;
      o.require(explicit_note, "s361 substitution stated in the report");
      o.require(item_passes(r, "lemma L8 exponent", "census 1..24"), "x^exp - 1 over the census");
      o.require(item_passes(r, "lemma L8 standard", "S3", "s7"), "s7 sampled on S3");
      o.require(item_passes(r, "lemma L8 standard", "D8", "s9"), "s9 sampled on D8");
    }
  }
  o.detail << "F3[D8], F5[S4], F7[A6] checks in " << elapsed(t0) << " s; s361 accepted structurally";
}

void ac11(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto census = census_selfcheck();
  o.require(census.pass, "census self-check");
  o.require(groups_of_order(8).size() == 5 && groups_of_order(12).size() == 5 && groups_of_order(16).size() == 14 &&
                groups_of_order(24).size() == 15,
            "census counts");

  std::size_t pig = 0;
  for (unsigned n = 1; n <= 25; ++n)
    for (std::size_t k = 1; k <= kCensusMaxOrder; ++k)
      for (const auto* g : groups_of_order(k)) {
        ++pig;
        o.require(omega_valid(*g, n).valid() == (g->order() <= n), "pigeonhole " + g->name());
      }

  SearchConfig ex, bt;
  ex.strategy = Strategy::Exhaustive;
  ex.space_limit = 2e7;
  bt.strategy = Strategy::Backtrack;
  std::size_t agree = 0, conj = 0;
  for (const auto& f : formula_catalog())
    for (std::size_t k = 1; k <= 12; ++k)
      for (const auto* g : groups_of_order(k)) {
        auto a = is_didentity(*g, f.ude, ex);
        auto b = is_didentity(*g, f.ude, bt);
        if (a.status != Status::Indeterminate) {
          ++agree;
          o.require(a.status == b.status, "strategies agree on " + f.id + " in " + g->name());
        }
        if (b.invalid())
          for (Elem c = 0; c < g->order(); ++c) {
            std::vector<Elem> moved;
            for (auto x : b.counterexample)
              moved.push_back(g->conj(x, c));
            ++conj;
            o.require(falsifies(*g, f.ude, moved), "conjugation invariance " + f.id + " in " + g->name());
          }
      }

  std::size_t hs = 0;
  for (const char* name : {"D8", "Q8", "A4", "S4"}) {
    const auto& g = named_group(name);
    std::vector<FiniteGroup> pieces;
    for (const auto& h : subgroups(g))
      pieces.push_back(subgroup_as_group(g, h.members));
    for (const auto& k : normal_subgroups(g))
      pieces.push_back(quotient(g, k));
    for (const auto& f : formula_catalog()) {
      if (f.ude.variable_count > 3 || !is_didentity(g, f.ude).valid())
        continue;
      for (const auto& p : pieces) {
        ++hs;
        o.require(is_didentity(p, f.ude).valid(), "HS-closure " + f.id + " in " + name);
      }
    }
  }
  o.detail << pig << " pigeonhole cases, " << agree << " strategy comparisons, " << conj << " conjugated witnesses, "
           << hs << " section checks in " << elapsed(t0) << " s";
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    const char* title;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria{
      {"AC1", "D8 basis and negative control", ac1},
      {"AC2", "Q8, A4, S4 bases and order-24 sweep", ac2},
      {"AC3", "A5 basis and eliminations", ac3},
      {"AC4", "S5 basis, 3.8 adjudication, 3.12 witness", ac4},
      {"AC5", "Q8 gap under the short S4 list", ac5},
      {"AC6", "A6 basis, 4.6 readings, eliminations", ac6},
      {"AC7", "3.11 valid in S6", ac7},
      {"AC8", "dihedral family m = 2..12", ac8},
      {"AC9", "lemma sweeps", ac9},
      {"AC10", "group-algebra identities", ac10},
      {"AC11", "property suites", ac11},
  };
  int failed = 0;
  std::cout << std::setprecision(3);
  for (const auto& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " " << c.title << ": " << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
