#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dident/group.hpp"
#include "dident/report.hpp"

namespace dident {

struct GroupCatalogEntry {
  std::string name;
  std::size_t order = 0;
  std::string construction; // build_named expression
  std::vector<std::string> aliases;
  std::string note;
  // Structural facts recomputed by census_selfcheck, e.g. "order_count 4 >= 3",
  // "involutions = 1", "has_order 15", "derived_length = 3", "unsolvable",
  // "abelian_subgroup 8", "no_order 6".
  std::vector<std::string> facts;
};

// Every group of order 1..24 up to isomorphism, then the named larger groups.
const std::vector<GroupCatalogEntry>& census_entries();

constexpr std::size_t kCensusMaxOrder = 24;
// Number of isomorphism classes of each order 1..24 (index 0 unused).
extern const std::size_t kCensusCounts[kCensusMaxOrder + 1];

// Entries whose name or alias matches, ignoring case; nullptr otherwise.
const GroupCatalogEntry* find_census_entry(std::string_view name);

// Groups are built on first use and shared afterwards; the returned
// references stay valid for the lifetime of the process.
std::vector<const FiniteGroup*> groups_of_order(std::size_t n);
const FiniteGroup& named_group(std::string_view name);

// Census name or alias, construction expression, or a path to a JSON group
// file. The result is a fresh copy.
FiniteGroup resolve_group(std::string_view spec);

// {"name", "elements": [labels], "table": [[ids]]} or {"name", "perms":
// ["(1 2 3)", ...]} or {"name", "construction": "..."}.
FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);

// {name, order, spectrum, construction, aliases} for an entry.
nlohmann::json census_entry_json(const GroupCatalogEntry& e);

VerificationReport census_selfcheck();

} // namespace dident
