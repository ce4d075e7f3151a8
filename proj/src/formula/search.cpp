#include "dident/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dident/error.hpp"
#include "dident/subgroup.hpp"

namespace dident {

const char* to_string(Strategy s) {
  switch (s) {
  case Strategy::Auto:
    return "auto";
  case Strategy::Exhaustive:
    return "exhaustive";
  case Strategy::Backtrack:
    return "backtrack";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
  case Status::Valid:
    return "valid";
  case Status::Invalid:
    return "invalid";
  case Status::Indeterminate:
    return "indeterminate";
  }
  return "?";
}

Strategy parse_strategy(std::string_view s) {
  if (s == "auto")
    return Strategy::Auto;
  if (s == "exhaustive")
    return Strategy::Exhaustive;
  if (s == "backtrack")
    return Strategy::Backtrack;
  throw std::invalid_argument("unknown strategy '" + std::string(s) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

struct CompiledClause {
  std::vector<WordProgram> relators;
  std::vector<unsigned> vars; // 0-based

  bool holds(const FiniteGroup& g, std::span<const Elem> a) const {
    for (const auto& r : relators)
      if (r.eval(g, a) == 0)
        return true;
    return false;
  }
};

std::vector<CompiledClause> compile(const UDE& ude) {
  std::vector<CompiledClause> out;
  for (const auto& c : ude.clauses) {
    CompiledClause cc;
    for (const auto& eq : c.equations)
      cc.relators.emplace_back(eq.relator());
    for (auto v : c.variables())
      cc.vars.push_back(v - 1);
    out.push_back(std::move(cc));
  }
  return out;
}

double space_size(std::size_t order, unsigned vars) { return std::pow(static_cast<double>(order), vars); }

// Search plan: variables in branching order, a domain per position and the
// clauses that become fully assigned at each position.
struct Plan {
  std::vector<unsigned> order;
  std::vector<std::vector<Elem>> domain;
  std::vector<std::vector<std::size_t>> check_at;
};

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
  std::uint64_t node_limit = 0;
  Clock::time_point deadline;
  bool has_deadline = false;
  std::string abort_reason;
};

class Worker {
public:
  Worker(const FiniteGroup& g, const std::vector<CompiledClause>& clauses, const Plan& plan, Shared& shared,
         std::size_t task)
      : g_(g), clauses_(clauses), plan_(plan), shared_(shared), task_(task), assign_(plan.order.size(), 0) {}

  // Runs the subtree below the given position; true when a counterexample
  // was found (left in assignment()).
  bool run(std::size_t pos) { return dfs(pos); }
  void set(std::size_t pos, Elem v) { assign_[plan_.order[pos]] = v; }
  bool passes(std::size_t pos) const {
    for (auto ci : plan_.check_at[pos])
      if (clauses_[ci].holds(g_, assign_))
        return false;
    return true;
  }
  const std::vector<Elem>& assignment() const { return assign_; }
  void flush() {
    shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
  }

private:
  bool stop() {
    if (shared_.abort.load(std::memory_order_relaxed))
      return true;
    if (shared_.best_task.load(std::memory_order_relaxed) < task_)
      return true;
    if (local_nodes_ >= 4096) {
      auto total = shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
      local_nodes_ = 0;
      if (total > shared_.node_limit || (shared_.has_deadline && Clock::now() > shared_.deadline)) {
        shared_.abort.store(true);
        return true;
      }
    }
    return false;
  }

  bool dfs(std::size_t pos) {
    if (pos == plan_.order.size())
      return true;
    const unsigned var = plan_.order[pos];
    for (auto v : plan_.domain[pos]) {
      ++local_nodes_;
      if (stop())
        return false;
      assign_[var] = v;
      if (!passes(pos))
        continue;
      if (dfs(pos + 1))
        return true;
    }
    return false;
  }

  const FiniteGroup& g_;
  const std::vector<CompiledClause>& clauses_;
  const Plan& plan_;
  Shared& shared_;
  std::size_t task_;
  std::vector<Elem> assign_;
  std::uint64_t local_nodes_ = 0;
};

void fill_checks(Plan& plan, const std::vector<CompiledClause>& clauses, const std::vector<bool>& skip) {
  const std::size_t n = plan.order.size();
  std::vector<std::size_t> pos_of(n);
  for (std::size_t i = 0; i < n; ++i)
    pos_of[plan.order[i]] = i;
  plan.check_at.assign(n, {});
  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    if (skip[ci])
      continue;
    std::size_t last = 0;
    for (auto v : clauses[ci].vars)
      last = std::max(last, pos_of[v]);
    plan.check_at[last].push_back(ci);
  }
}

struct Outcome {
  Status status = Status::Valid;
  std::vector<Elem> assignment;
  std::string reason;
  std::uint64_t nodes = 0;
  unsigned workers = 1;
};

void arm_limits(Shared& shared, const SearchConfig& cfg) {
  shared.node_limit = cfg.node_limit;
  if (cfg.timeout_seconds > 0) {
    shared.has_deadline = true;
    shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(cfg.timeout_seconds));
  }
}

std::string budget_reason(const Shared& shared, const SearchConfig& cfg) {
  if (shared.has_deadline && Clock::now() > shared.deadline)
    return "timeout of " + std::to_string(cfg.timeout_seconds) + " s exceeded";
  return "node budget of " + std::to_string(cfg.node_limit) + " exceeded";
}

// Serial reference: lexicographic DFS over x1..xn with clause propagation.
Outcome search_exhaustive(const FiniteGroup& g, const std::vector<CompiledClause>& clauses, unsigned n,
                          const SearchConfig& cfg) {
  Outcome out;
  Plan plan;
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    all[x] = x;
  for (unsigned i = 0; i < n; ++i) {
    plan.order.push_back(i);
    plan.domain.push_back(all);
  }
  fill_checks(plan, clauses, std::vector<bool>(clauses.size(), false));
  Shared shared;
  arm_limits(shared, cfg);
  Worker w(g, clauses, plan, shared, 0);
  bool found = w.run(0);
  w.flush();
  out.nodes = shared.nodes.load();
  if (found) {
    out.status = Status::Invalid;
    out.assignment = w.assignment();
  } else if (shared.abort.load()) {
    out.status = Status::Indeterminate;
    out.reason = budget_reason(shared, cfg);
  }
  return out;
}

// Backtracking with unary domain restriction, conjugacy pinning of the first
// branching variable and clause propagation; the representatives of the
// first variable are distributed over OpenMP threads.
Outcome search_backtrack(const FiniteGroup& g, const std::vector<CompiledClause>& clauses, unsigned n,
                         const SearchConfig& cfg) {
  Outcome out;
  std::vector<bool> skip(clauses.size(), false);
  std::vector<std::vector<bool>> allowed(n, std::vector<bool>(g.order(), true));
  std::vector<Elem> a(n, 0);
  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    if (clauses[ci].vars.size() != 1)
      continue;
    // A falsifying assignment must falsify this clause, so the variable
    // only ranges over elements where it fails.
    unsigned v = clauses[ci].vars[0];
    for (Elem x = 0; x < g.order(); ++x) {
      a[v] = x;
      if (clauses[ci].holds(g, a))
        allowed[v][x] = false;
    }
    a[v] = 0;
    skip[ci] = true;
  }
  std::vector<std::vector<Elem>> dom(n);
  for (unsigned v = 0; v < n; ++v) {
    for (Elem x = 0; x < g.order(); ++x)
      if (allowed[v][x])
        dom[v].push_back(x);
    if (dom[v].empty())
      return out; // valid: some unary clause holds everywhere
  }

  auto classes = conjugacy_classes(g);
  auto reps_in = [&](unsigned v) {
    std::vector<Elem> reps;
    for (const auto& cls : classes)
      if (allowed[v][cls.front()])
        reps.push_back(cls.front());
    return reps;
  };

  Plan plan;
  unsigned first = 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (unsigned v = 0; v < n; ++v) {
    auto r = reps_in(v).size();
    if (r < best) {
      best = r;
      first = v;
    }
  }
  std::vector<bool> placed(n, false);
  plan.order.push_back(first);
  placed[first] = true;
  while (plan.order.size() < n) {
    // Prefer the variable that completes the most clauses, then the one
    // with the smallest domain.
    unsigned pick = n;
    std::size_t pick_done = 0, pick_dom = 0;
    for (unsigned v = 0; v < n; ++v) {
      if (placed[v])
        continue;
      std::size_t done = 0;
      for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
        if (skip[ci])
          continue;
        const auto& vs = clauses[ci].vars;
        if (std::find(vs.begin(), vs.end(), v) == vs.end())
          continue;
        bool complete = true;
        for (auto u : vs)
          if (u != v && !placed[u])
            complete = false;
        done += complete;
      }
      if (pick == n || done > pick_done || (done == pick_done && dom[v].size() < pick_dom)) {
        pick = v;
        pick_done = done;
        pick_dom = dom[v].size();
      }
    }
    plan.order.push_back(pick);
    placed[pick] = true;
  }
  for (auto v : plan.order)
    plan.domain.push_back(dom[v]);
  plan.domain[0] = reps_in(first);
  fill_checks(plan, clauses, skip);

  const std::vector<Elem> tasks = plan.domain[0];
  Shared shared;
  arm_limits(shared, cfg);
  std::vector<std::vector<Elem>> found(tasks.size());
  int threads = cfg.workers ? static_cast<int>(cfg.workers) : omp_get_max_threads();
  out.workers = static_cast<unsigned>(threads);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (shared.abort.load() || shared.best_task.load() < t)
      continue;
    Worker w(g, clauses, plan, shared, t);
    w.set(0, tasks[t]);
    if (w.passes(0) && w.run(1)) {
      found[t] = w.assignment();
      std::size_t cur = shared.best_task.load();
      while (t < cur && !shared.best_task.compare_exchange_weak(cur, t)) {
      }
    }
    w.flush();
  }

  out.nodes = shared.nodes.load() + tasks.size();
  std::size_t bt = shared.best_task.load();
  if (bt < tasks.size()) {
    out.status = Status::Invalid;
    out.assignment = found[bt];
  } else if (shared.abort.load()) {
    out.status = Status::Indeterminate;
    out.reason = budget_reason(shared, cfg);
  }
  return out;
}

} // namespace

Verdict omega_valid(const FiniteGroup& g, unsigned n) {
  Verdict v;
  v.stats.strategy = "pigeonhole";
  if (g.order() <= n) {
    v.status = Status::Valid;
  } else {
    v.status = Status::Invalid;
    for (Elem x = 0; x <= n; ++x)
      v.counterexample.push_back(x);
  }
  return v;
}

Verdict is_didentity(const FiniteGroup& g, const UDE& ude, const SearchConfig& config) {
  auto start = Clock::now();
  Verdict v;
  auto finish = [&](Verdict& r) -> Verdict& {
    r.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
  };
  // An omega clause that always holds makes the whole UDE valid; otherwise
  // each omega is falsified independently by n+1 distinct elements.
  for (auto n : ude.omegas)
    if (g.order() <= n) {
      v.status = Status::Valid;
      v.stats.strategy = "pigeonhole";
      return finish(v);
    }

  const unsigned n = ude.variable_count;
  auto clauses = compile(ude);
  // Constant clauses either hold always or never.
  std::vector<CompiledClause> live;
  for (auto& c : clauses) {
    if (c.vars.empty()) {
      if (c.holds(g, {})) {
        v.status = Status::Valid;
        v.stats.strategy = "constant";
        return finish(v);
      }
      continue;
    }
    live.push_back(std::move(c));
  }

  Strategy s = config.strategy;
  double space = space_size(g.order(), n);
  if (s == Strategy::Auto)
    s = space <= config.auto_threshold ? Strategy::Exhaustive : Strategy::Backtrack;
  v.stats.strategy = to_string(s);

  Outcome o;
  if (n == 0) {
    o.status = Status::Invalid;
  } else if (s == Strategy::Exhaustive) {
    if (space > config.space_limit) {
      v.status = Status::Indeterminate;
      v.reason = "exhaustive search space " + std::to_string(g.order()) + "^" + std::to_string(n) +
                 " exceeds the limit";
      return finish(v);
    }
    o = search_exhaustive(g, live, n, config);
  } else {
    o = search_backtrack(g, live, n, config);
  }
  v.status = o.status;
  v.reason = o.reason;
  v.stats.nodes = o.nodes;
  v.stats.workers = o.workers;
  if (o.status == Status::Invalid) {
    v.counterexample = o.assignment;
    v.counterexample.resize(n);
    for (auto w : ude.omegas)
      for (Elem x = 0; x <= w; ++x)
        v.counterexample.push_back(x);
    if (!falsifies(g, ude, v.counterexample))
      throw std::logic_error("is_didentity: emitted counterexample does not falsify the formula");
  }
  return finish(v);
}

bool check_equivalent_on(const FiniteGroup& g, const UDE& a, const UDE& b, const SearchConfig& config) {
  const std::size_t na = a.total_variables(), nb = b.total_variables();
  const std::size_t n = std::max(na, nb);
  if (space_size(g.order(), static_cast<unsigned>(n)) > config.space_limit)
    throw BudgetExceeded("check_equivalent_on: assignment space too large");
  std::vector<Elem> x(n, 0);
  for (;;) {
    bool fa = falsifies(g, a, std::span<const Elem>(x.data(), na));
    bool fb = falsifies(g, b, std::span<const Elem>(x.data(), nb));
    if (fa != fb)
      return false;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++x[i] < g.order())
        break;
      x[i] = 0;
      if (i == 0)
        return true;
    }
    if (n == 0)
      return true;
  }
}

std::vector<std::string> assignment_labels(const FiniteGroup& g, std::span<const Elem> assignment, const UDE& ude) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (; i < ude.variable_count && i < assignment.size(); ++i)
    out.push_back("x" + std::to_string(i + 1) + " = " + g.label(assignment[i]));
  for (auto w : ude.omegas)
    for (unsigned j = 0; j <= w && i < assignment.size(); ++j, ++i)
      out.push_back("omega" + std::to_string(w) + "." + std::to_string(j) + " = " + g.label(assignment[i]));
  return out;
}

std::string format_assignment(const FiniteGroup& g, const std::vector<Elem>& assignment, const UDE& ude) {
  std::string s;
  for (const auto& part : assignment_labels(g, assignment, ude))
    s += (s.empty() ? "" : ", ") + part;
  return s;
}

} // namespace dident
