#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dident/group.hpp"
#include "dident/ude.hpp"

namespace dident {

enum class Strategy { Auto, Exhaustive, Backtrack };
enum class Status { Valid, Invalid, Indeterminate };

const char* to_string(Strategy s);
const char* to_string(Status s);
Strategy parse_strategy(std::string_view s); // throws std::invalid_argument

struct SearchConfig {
  Strategy strategy = Strategy::Auto;
  // Assignments tried before giving up with an indeterminate verdict.
  std::uint64_t node_limit = 200'000'000;
  // Wall-clock limit in seconds; 0 disables it.
  double timeout_seconds = 0;
  // OpenMP threads for the backtracker; 0 = runtime default.
  unsigned workers = 0;
  // The exhaustive strategy refuses assignment spaces above this size.
  double space_limit = 1e10;
  // Auto picks exhaustive when |G|^n is at most this.
  double auto_threshold = 1e6;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
  std::string strategy;
  unsigned workers = 1;
};

struct Verdict {
  Status status = Status::Indeterminate;
  // Values of x1..xn followed by the dedicated omega variables.
  std::vector<Elem> counterexample;
  std::string reason; // why the verdict is indeterminate
  SearchStats stats;

  bool valid() const { return status == Status::Valid; }
  bool invalid() const { return status == Status::Invalid; }
};

// Decides whether the UDE holds for every assignment in g. Omega builtins are
// decided by counting. Invalid verdicts are re-checked with falsifies()
// before they are returned. The exhaustive strategy reports the
// lexicographically least counterexample.
Verdict is_didentity(const FiniteGroup& g, const UDE& ude, const SearchConfig& config = {});

// omega(n) in g: valid iff |g| <= n.
Verdict omega_valid(const FiniteGroup& g, unsigned n);

// Same falsifying assignments (over the larger variable count). Throws
// BudgetExceeded when |g|^vars exceeds config.space_limit.
bool check_equivalent_on(const FiniteGroup& g, const UDE& a, const UDE& b, const SearchConfig& config = {});

// One "x1 = a" entry per variable, omega variables as "omega8.0" onwards.
std::vector<std::string> assignment_labels(const FiniteGroup& g, std::span<const Elem> assignment, const UDE& ude);
// "x1 = a, x2 = b" using element labels.
std::string format_assignment(const FiniteGroup& g, const std::vector<Elem>& assignment, const UDE& ude);

} // namespace dident
