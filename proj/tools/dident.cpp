#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dident/basis.hpp"
#include "dident/census.hpp"
#include "dident/error.hpp"
#include "dident/formula_catalog.hpp"
#include "dident/repalg.hpp"
#include "dident/search.hpp"
#include "dident/subgroup.hpp"

using namespace dident;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kError = 2 };

struct RunConfig {
  std::uint64_t budget = SearchConfig{}.node_limit;
  double timeout = 0;
  unsigned workers = 0;
  bool json = false;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  std::string strategy = "auto";

  SearchConfig search() const {
    SearchConfig s;
    s.node_limit = budget;
    s.timeout_seconds = timeout;
    s.workers = workers;
    s.strategy = parse_strategy(strategy);
    return s;
  }
  CampaignConfig campaign() const {
    CampaignConfig c;
    c.search = search();
    c.seed = seed;
    c.samples = samples;
    return c;
  }
};

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

void apply_setting(RunConfig& rc, const std::string& key, const std::string& value) {
  if (key == "budget")
    rc.budget = std::stoull(value);
  else if (key == "timeout")
    rc.timeout = std::stod(value);
  else if (key == "workers")
    rc.workers = static_cast<unsigned>(std::stoul(value));
  else if (key == "seed")
    rc.seed = std::stoull(value);
  else if (key == "samples")
    rc.samples = std::stoull(value);
  else if (key == "strategy")
    rc.strategy = value;
  else if (key == "format")
    rc.json = value == "json";
  else
    throw std::invalid_argument("unknown config key '" + key + "'");
}

// key = value lines; '#' starts a comment; values may be quoted.
void load_config(RunConfig& rc, const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos)
      line.resize(h);
    line = trim(line);
    if (line.empty() || line.front() == '[')
      continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
    auto value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    apply_setting(rc, trim(line.substr(0, eq)), value);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FormulaEntry load_formula(const std::string& arg) {
  if (auto f = find_formula(arg))
    return *f;
  if (!std::filesystem::is_regular_file(arg))
    throw std::invalid_argument("unknown formula '" + arg + "' (not a catalog id or a file)");
  FormulaEntry e;
  auto text = read_file(arg);
  if (arg.ends_with(".json")) {
    auto j = json::parse(text);
    e.id = j.value("id", std::filesystem::path(arg).stem().string());
    e.text = j.at("text").get<std::string>();
  } else {
    e.id = std::filesystem::path(arg).stem().string();
    e.text = trim(text);
  }
  e.ude = parse_formula(e.text);
  return e;
}

int emit_report(const VerificationReport& r, const RunConfig& rc) {
  if (rc.json)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.pass ? kPass : kFail;
}

int cmd_formula_check(const RunConfig& rc, const std::string& which, const std::string& group_spec) {
  auto f = load_formula(which);
  auto g = resolve_group(group_spec);
  auto v = is_didentity(g, f.ude, rc.search());
  if (rc.json) {
    json j{{"formula", f.id},
           {"text", f.text},
           {"group", g.name()},
           {"order", g.order()},
           {"status", to_string(v.status)},
           {"witness", v.invalid() ? assignment_labels(g, v.counterexample, f.ude) : std::vector<std::string>{}},
           {"reason", v.reason},
           {"strategy", v.stats.strategy},
           {"workers", v.stats.workers},
           {"nodes", v.stats.nodes},
           {"seconds", v.stats.seconds}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << f.id << " in " << g.name() << ": " << to_string(v.status) << "\n";
    if (v.invalid())
      std::cout << "  witness: " << format_assignment(g, v.counterexample, f.ude) << "\n";
    if (!v.reason.empty())
      std::cout << "  reason: " << v.reason << "\n";
    std::cout << "  strategy " << v.stats.strategy << ", " << v.stats.nodes << " nodes, " << v.stats.seconds
              << " s\n";
  }
  return v.valid() ? kPass : v.invalid() ? kFail : kError;
}

int cmd_formula_list(const RunConfig& rc) {
  if (rc.json) {
    json arr = json::array();
    for (const auto& e : formula_catalog())
      arr.push_back({{"id", e.id}, {"text", e.text}, {"valid_in", e.claimed_valid_in}, {"note", e.note}});
    std::cout << arr.dump(2) << "\n";
    return kPass;
  }
  for (const auto& e : formula_catalog()) {
    std::cout << e.id << "  [" << e.ude.variable_count << " vars, " << e.ude.clause_count() << " clauses]";
    if (!e.claimed_valid_in.empty())
      std::cout << "  valid in " << e.claimed_valid_in.front();
    std::cout << "\n";
  }
  return kPass;
}

int cmd_formula_show(const RunConfig& rc, const std::string& id) {
  auto f = load_formula(id);
  if (rc.json) {
    json fails = json::array();
    for (const auto& k : f.known_failures)
      fails.push_back({{"group", k.group}, {"witness", k.witness}});
    std::cout << json{{"id", f.id}, {"text", f.text}, {"parsed", f.ude.str()}, {"variables", f.ude.variable_count},
                      {"valid_in", f.claimed_valid_in}, {"known_failures", fails}, {"note", f.note},
                      {"variant_of", f.variant_of}}
                     .dump(2)
              << "\n";
    return kPass;
  }
  std::cout << f.id << ": " << f.text << "\n  parsed: " << f.ude.str() << "\n";
  for (const auto& g : f.claimed_valid_in)
    std::cout << "  valid in " << g << "\n";
  for (const auto& k : f.known_failures) {
    std::cout << "  fails in " << k.group;
    if (!k.witness.empty()) {
      std::cout << " at (";
      for (std::size_t i = 0; i < k.witness.size(); ++i)
        std::cout << (i ? ", " : "") << k.witness[i];
      std::cout << ")";
    }
    std::cout << "\n";
  }
  if (!f.note.empty())
    std::cout << "  note: " << f.note << "\n";
  return kPass;
}

BasisClaim load_claim(const std::string& arg) {
  for (const auto& n : builtin_claim_names())
    if (n == arg)
      return builtin_claim(arg);
  if (std::filesystem::is_regular_file(arg))
    return claim_from_json(json::parse(read_file(arg)));
  throw std::invalid_argument("unknown claim '" + arg + "' (not a built-in name or a JSON file)");
}

int cmd_basis_verify(const RunConfig& rc, const std::string& which) {
  for (const auto& n : builtin_claim_names())
    if (n == which)
      return emit_report(run_builtin_claim(which, rc.campaign()), rc);
  return emit_report(verify_claim(load_claim(which), rc.campaign()), rc);
}

int cmd_dihedral(const RunConfig& rc, unsigned m, bool verify) {
  auto claim = dihedral_basis(m);
  if (verify)
    return emit_report(verify_claim(claim, rc.campaign()), rc);
  if (rc.json) {
    json j = claim_to_json(claim);
    json texts = json::array();
    for (const auto& id : claim.formulas)
      texts.push_back({{"id", id}, {"text", formula(id).text}});
    j["formula_texts"] = texts;
    std::cout << j.dump(2) << "\n";
    return kPass;
  }
  std::cout << "basis for " << claim.target << " (m = " << m << "):\n";
  for (const auto& id : claim.formulas)
    std::cout << "  " << id << ": " << formula(id).text << "\n";
  std::cout << "obstructions:\n";
  for (const auto& o : dihedral_obstructions(m))
    std::cout << "  " << o << "\n";
  return kPass;
}

int cmd_translate(const RunConfig& rc, const std::string& id) {
  auto ri = rep_identity(id);
  if (rc.json) {
    json j{{"id", id}, {"name", ri.name}, {"polynomial", ri.str()}, {"x_vars", ri.x_vars},
           {"y_vars", ri.y_vars}, {"factors", ri.factors.size()}, {"note", ri.note}};
    if (ri.solvability_class)
      j["solvability_class"] = *ri.solvability_class;
    std::cout << j.dump(2) << "\n";
    return kPass;
  }
  std::cout << ri.name << " = " << ri.str() << "\n";
  std::cout << "  " << ri.x_vars << " x-variables, " << ri.y_vars << " y-variables";
  if (!ri.factors.empty())
    std::cout << ", " << ri.factors.size() << " factors";
  std::cout << "\n";
  if (!ri.note.empty())
    std::cout << "  note: " << ri.note << "\n";
  return kPass;
}

int cmd_rep_check(const RunConfig& rc, const std::string& group_spec, unsigned prime, const std::string& id,
                  const std::string& mode) {
  auto g = resolve_group(group_spec);
  std::uint32_t p = prime ? prime : default_prime(g.order());
  auto ri = rep_identity(id);
  RepConfig cfg;
  cfg.mode = parse_rep_mode(mode);
  cfg.samples = rc.samples;
  cfg.seed = rc.seed;
  cfg.budget = rc.budget;
  cfg.search = rc.search();
  auto v = is_rep_identity(g, PrimeField(p), ri, cfg);
  std::vector<std::string> witness;
  for (std::size_t i = 0; i < v.witness.size(); ++i)
    witness.push_back((i < ri.x_vars ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - ri.x_vars + 1)) +
                      " = " + g.label(v.witness[i]));
  if (rc.json) {
    std::cout << json{{"identity", id}, {"group", g.name()}, {"prime", p}, {"mode", to_string(v.mode)},
                      {"status", to_string(v.status)}, {"witness", witness}, {"reason", v.reason},
                      {"warnings", v.warnings}, {"evaluations", v.evaluations}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << ri.name << " over F" << p << "[" << g.name() << "]: " << to_string(v.status) << " ("
              << to_string(v.mode) << ")\n";
    for (const auto& w : v.warnings)
      std::cout << "  warning: " << w << "\n";
    if (!witness.empty()) {
      std::cout << "  witness:";
      for (const auto& w : witness)
        std::cout << " " << w << ";";
      std::cout << "\n";
    }
    if (!v.reason.empty())
      std::cout << "  " << v.reason << "\n";
    std::cout << "  " << v.evaluations << " evaluations\n";
  }
  switch (v.status) {
  case RepStatus::Identity:
    return kPass;
  case RepStatus::NotIdentity:
    return kFail;
  default:
    return kError;
  }
}

int cmd_groups_list(const RunConfig& rc, unsigned order) {
  std::vector<const GroupCatalogEntry*> rows;
  for (const auto& e : census_entries())
    if (order == 0 || e.order == order)
      rows.push_back(&e);
  if (order > 0 && order <= kCensusMaxOrder) {
    // Sanity: the census rows for this order match the group count.
    std::size_t n = groups_of_order(order).size();
    if (n != kCensusCounts[order])
      throw std::logic_error("census holds " + std::to_string(n) + " groups of order " + std::to_string(order));
  }
  if (rc.json) {
    json arr = json::array();
    for (const auto* e : rows)
      arr.push_back(census_entry_json(*e));
    std::cout << arr.dump(2) << "\n";
    return kPass;
  }
  for (const auto* e : rows) {
    std::cout << e->order << "\t" << e->name << "\t" << e->construction;
    if (!e->aliases.empty()) {
      std::cout << "\t(";
      for (std::size_t i = 0; i < e->aliases.size(); ++i)
        std::cout << (i ? ", " : "") << e->aliases[i];
      std::cout << ")";
    }
    std::cout << "\n";
  }
  return kPass;
}

int cmd_groups_show(const RunConfig& rc, const std::string& spec) {
  auto g = resolve_group(spec);
  if (rc.json) {
    std::cout << group_to_json(g).dump(2) << "\n";
    return kPass;
  }
  std::cout << g.name() << ": order " << g.order() << ", exponent " << g.exponent()
            << (is_abelian(g) ? ", abelian" : "") << "\n  generators: " << join_labels(g, g.generators())
            << "\n  element orders:";
  for (auto [k, n] : order_spectrum(g))
    std::cout << " " << k << ":" << n;
  std::cout << "\n  class sizes:";
  for (const auto& c : conjugacy_classes(g))
    std::cout << " " << c.size();
  std::cout << "\n";
  return kPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"dident: disjunctive identities of finite groups"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string config_path;
  std::optional<std::uint64_t> budget, seed, samples;
  std::optional<double> timeout;
  std::optional<unsigned> workers;
  bool json_flag = false;
  app.add_option("--config", config_path, "key = value settings file");
  app.add_option("--budget", budget, "search node limit");
  app.add_option("--timeout", timeout, "search wall-clock limit in seconds");
  app.add_option("--workers", workers, "OpenMP threads for the backtracker");
  app.add_option("--seed", seed, "seed for sampled modes");
  app.add_option("--samples", samples, "assignments drawn by sampled modes");
  app.add_flag("--json", json_flag, "JSON output");

  int code = kError;
  auto* formula_cmd = app.add_subcommand("formula", "formula catalog and validity checks");
  formula_cmd->require_subcommand(1);
  std::string f_which, f_group, f_strategy = "";
  auto* f_check = formula_cmd->add_subcommand("check", "decide a formula in a group");
  f_check->add_option("formula", f_which, "catalog id or formula file")->required();
  f_check->add_option("--group,-g", f_group, "census name, construction or JSON file")->required();
  f_check->add_option("--strategy", f_strategy, "auto | exhaustive | backtrack");
  auto* f_list = formula_cmd->add_subcommand("list", "list catalog formulas");
  auto* f_show = formula_cmd->add_subcommand("show", "print a formula and its catalog data");
  f_show->add_option("formula", f_which)->required();

  auto* basis_cmd = app.add_subcommand("basis", "basis claims");
  basis_cmd->require_subcommand(1);
  std::string b_which;
  auto* b_verify = basis_cmd->add_subcommand("verify", "verify a built-in claim or a claim JSON file");
  b_verify->add_option("claim", b_which)->required();
  auto* b_list = basis_cmd->add_subcommand("list", "list built-in claims");
  auto* b_show = basis_cmd->add_subcommand("show", "print a claim as JSON");
  b_show->add_option("claim", b_which)->required();

  unsigned d_m = 0;
  bool d_verify = false;
  auto* dihedral_cmd = app.add_subcommand("dihedral", "generated basis for D_2m");
  dihedral_cmd->add_option("m", d_m)->required()->check(CLI::Range(2u, 1000u));
  dihedral_cmd->add_flag("--verify", d_verify, "run the campaign");

  std::string t_id;
  auto* translate_cmd = app.add_subcommand("translate", "group-algebra form of a formula");
  translate_cmd->add_option("identity", t_id)->required();

  std::string r_group, r_identity, r_mode = "certified";
  unsigned r_prime = 0;
  auto* rep_cmd = app.add_subcommand("rep", "group-algebra identities");
  rep_cmd->require_subcommand(1);
  auto* r_check = rep_cmd->add_subcommand("check", "decide an identity in F_p[G]");
  r_check->add_option("--group,-g", r_group)->required();
  r_check->add_option("--prime,-p", r_prime, "default: least prime not dividing |G|");
  r_check->add_option("--identity,-i", r_identity)->required();
  r_check->add_option("--mode", r_mode, "exhaustive | certified | sampled");

  unsigned g_order = 0;
  std::string g_name;
  auto* groups_cmd = app.add_subcommand("groups", "group census");
  groups_cmd->require_subcommand(1);
  auto* g_list = groups_cmd->add_subcommand("list", "list census groups");
  g_list->add_option("--order", g_order);
  auto* g_show = groups_cmd->add_subcommand("show", "structure of a group");
  g_show->add_option("group", g_name)->required();
  auto* g_check = groups_cmd->add_subcommand("check", "census self-check");

  std::string l_id;
  auto* lemma_cmd = app.add_subcommand("lemma", "lemma sweeps");
  lemma_cmd->add_option("id", l_id, "lemma id, or 'list'")->required();

  // --json is also accepted after the subcommand.
  for (auto* sub : {f_check, f_list, f_show, b_verify, b_list, b_show, dihedral_cmd, translate_cmd, r_check, g_list,
                    g_show, g_check, lemma_cmd})
    sub->add_flag("--json", json_flag, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty())
      load_config(rc, config_path);
    if (const char* env = std::getenv("DIDENT_BUDGET"))
      rc.budget = std::stoull(env);
    if (const char* env = std::getenv("DIDENT_SEED"))
      rc.seed = std::stoull(env);
    if (budget)
      rc.budget = *budget;
    if (seed)
      rc.seed = *seed;
    if (samples)
      rc.samples = *samples;
    if (timeout)
      rc.timeout = *timeout;
    if (workers)
      rc.workers = *workers;
    if (!f_strategy.empty())
      rc.strategy = f_strategy;
    rc.json = rc.json || json_flag;

    if (*f_check)
      code = cmd_formula_check(rc, f_which, f_group);
    else if (*f_list)
      code = cmd_formula_list(rc);
    else if (*f_show)
      code = cmd_formula_show(rc, f_which);
    else if (*b_verify)
      code = cmd_basis_verify(rc, b_which);
    else if (*b_list) {
      for (const auto& n : builtin_claim_names())
        std::cout << n << "  (target " << builtin_claim(n).target << ")\n";
      code = kPass;
    } else if (*b_show) {
      std::cout << claim_to_json(load_claim(b_which)).dump(2) << "\n";
      code = kPass;
    } else if (*dihedral_cmd)
      code = cmd_dihedral(rc, d_m, d_verify);
    else if (*translate_cmd)
      code = cmd_translate(rc, t_id);
    else if (*r_check)
      code = cmd_rep_check(rc, r_group, r_prime, r_identity, r_mode);
    else if (*g_list)
      code = cmd_groups_list(rc, g_order);
    else if (*g_show)
      code = cmd_groups_show(rc, g_name);
    else if (*g_check)
      code = emit_report(census_selfcheck(), rc);
    else if (*lemma_cmd) {
      if (l_id == "list") {
        for (const auto& id : lemma_ids())
          std::cout << id << "\n";
        code = kPass;
      } else {
        code = emit_report(verify_lemma_instances(l_id, rc.campaign()), rc);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return code;
}
