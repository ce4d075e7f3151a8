#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dident/group.hpp"

namespace dident {

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Elem> members; // sorted, contains 0
  std::vector<Elem> generators;

  std::size_t order() const { return members.size(); }
  bool contains(Elem x) const;
};

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Elem> generators);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

// All subgroups generated by at most max_gens elements, smallest first.
// max_gens = 0 keeps adding generators until a round finds no new subgroup,
// which yields every subgroup. Throws BudgetExceeded past max_count subgroups.
std::vector<Subgroup> subgroups(const FiniteGroup& g, unsigned max_gens = 0,
                                std::size_t max_count = 200000);

bool is_normal(const FiniteGroup& g, const Subgroup& k);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> elems);

// g / k on right cosets, ordered by least representative (k itself is id 0).
// Throws std::invalid_argument when k is not normal.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& k);

// Classes ordered by least member; each class sorted.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);
// class_size[x] for every element.
std::vector<std::size_t> class_sizes(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h);
// Number of steps of the derived series down to the trivial group, or
// nothing when the series stalls (g is not solvable).
std::optional<unsigned> derived_length(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

// One Sylow p-subgroup, and the full list of its conjugates.
Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p);
std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, unsigned p);

struct IsoWitness {
  // (generator of the source, its image in the target)
  std::vector<std::pair<Elem, Elem>> generator_images;
  // Image of every source element.
  std::vector<Elem> map;
};

std::optional<IsoWitness> is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

// Injective homomorphism from t into g, if any.
std::optional<IsoWitness> find_embedding(const FiniteGroup& t, const FiniteGroup& g);

// True when map (indexed by source id) is a bijective homomorphism.
bool check_isomorphism(const FiniteGroup& g, const FiniteGroup& h, std::span<const Elem> map);

struct SectionWitness {
  Subgroup h;
  Subgroup k; // normal in h, with h / k isomorphic to the requested group
};

// Finds H <= g and K normal in H with H/K isomorphic to t, searching
// subgroups generated by at most max_gens elements (0: all subgroups).
std::optional<SectionWitness> is_section(const FiniteGroup& g, const FiniteGroup& t,
                                         unsigned max_gens = 0);

} // namespace dident
