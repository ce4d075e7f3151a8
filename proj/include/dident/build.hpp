#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dident/group.hpp"
#include "dident/perm.hpp"

namespace dident {

// Closure of the permutations under composition. Element ids follow
// closure-discovery order with the identity at 0; labels are cycle notation.
// Throws BudgetExceeded when the closure grows beyond max_order.
FiniteGroup group_from_perm_generators(std::span<const Perm> gens, std::string name = {},
                                       std::size_t max_order = 50000);

FiniteGroup cyclic(unsigned n);
// Dihedral group of the given order 2m, generated by a rotation a and a
// reflection b (in that order).
FiniteGroup dihedral(unsigned order);
// Dicyclic group of order 4n: <a, x | a^2n = 1, x^2 = a^n, a^x = a^-1>.
FiniteGroup dicyclic(unsigned order);
FiniteGroup quaternion8();
FiniteGroup elementary_abelian(unsigned p, unsigned k);
FiniteGroup symmetric(unsigned n);
FiniteGroup alternating(unsigned n);
// SL(2, p) generated by [[1,1],[0,1]] and [[0,-1],[1,0]].
FiniteGroup special_linear2(unsigned p);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// A x| B where generator j of B acts on A by a^b = action[j][i] for the i-th
// generator a of A. Each action row must extend to an automorphism of A and
// the assignment b_j -> automorphism must respect the relations of B;
// otherwise std::invalid_argument is thrown. Generators of the result are
// those of A followed by those of B.
FiniteGroup semidirect(const FiniteGroup& a, const FiniteGroup& b,
                       const std::vector<std::vector<Elem>>& action);

// Builds a group from an explicit Cayley table with identity at id 0.
FiniteGroup from_cayley_table(const std::vector<std::vector<Elem>>& table, std::string name = {});

// Group generated by a subset of g, keeping g's labels. When embedding is
// given it receives, per new id, the corresponding id of g.
FiniteGroup subgroup_as_group(const FiniteGroup& g, std::span<const Elem> members,
                              std::string name = {}, std::vector<Elem>* embedding = nullptr);

// Evaluates a construction expression such as
//   cyclic(4)  dihedral(8)  quaternion8  dicyclic(12)  elementary_abelian(2,3)
//   symmetric(4)  alternating(5)  sl2(5)  direct_product(cyclic(2), cyclic(6))
//   semidirect(cyclic(3), cyclic(4), {g1^-1})
//   semidirect(elementary_abelian(3,2), cyclic(4), {g2, g1^-1})
//   perms[(1 2 3 4); (1 2)]
// Semidirect actions list, per generator of B, the images of A's generators
// as words in g1..gk; tuples for successive B-generators are separated by ';'.
FiniteGroup build_named(std::string_view expression);

} // namespace dident
