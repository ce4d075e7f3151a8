#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dident/perm.hpp"

namespace dident {

// Element id inside a FiniteGroup; 0 is always the identity.
using Elem = std::uint32_t;

// Multiplication-table backed finite group. Immutable after construction, so
// concurrent readers are safe.
class FiniteGroup {
public:
  FiniteGroup() = default;

  // Takes ownership of a row-major order*order table. Validates the table
  // (identity at id 0, Latin square, associativity) and throws
  // std::invalid_argument when it is not a group.
  FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table,
              std::vector<std::string> labels, std::vector<Elem> generators,
              std::vector<Perm> perms = {});

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t order() const { return order_; }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  static constexpr Elem identity() { return 0; }

  // g^k for any integer k (negative powers use the inverse).
  Elem pow(Elem g, long long k) const;
  // by^-1 * g * by
  Elem conj(Elem g, Elem by) const { return mul(mul(inv(by), g), by); }
  // a^-1 b^-1 a b
  Elem comm(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  unsigned element_order(Elem g) const { return orders_[g]; }
  unsigned exponent() const { return exponent_; }

  const std::string& label(Elem g) const { return labels_[g]; }
  std::optional<Elem> find_label(std::string_view label) const;

  std::span<const Elem> generators() const { return generators_; }

  bool has_perms() const { return !perms_.empty(); }
  const Perm& perm(Elem g) const { return perms_.at(g); }
  std::optional<Elem> find_perm(const Perm& p) const;

  std::span<const Elem> table() const { return table_; }

private:
  void check_and_finish();

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<unsigned> orders_;
  unsigned exponent_ = 1;
  std::vector<std::string> labels_;
  std::vector<Elem> generators_;
  std::vector<Perm> perms_;
};

// Structural self-check: Latin square, two-sided identity 0, inverses, and
// associativity (full triple scan for order <= 64, generator-based checks
// above). Returns a description of the first violation, or nothing.
std::optional<std::string> validate_group_table(std::size_t order, std::span<const Elem> table,
                                                std::span<const Elem> generators);

unsigned element_order(const FiniteGroup& g, Elem x);
unsigned exponent(const FiniteGroup& g);

// Element order -> number of elements of that order.
std::map<unsigned, std::size_t> order_spectrum(const FiniteGroup& g);

// Smallest generating set found greedily, preferring elements of large order.
std::vector<Elem> small_generating_set(const FiniteGroup& g);

// Closure of a set of elements under multiplication, as a sorted id list.
std::vector<Elem> closure(const FiniteGroup& g, std::span<const Elem> gens);

std::string join_labels(const FiniteGroup& g, std::span<const Elem> elems);

} // namespace dident
