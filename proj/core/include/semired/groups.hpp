#ifndef SEMIRED_GROUPS_HPP_
#define SEMIRED_GROUPS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "semired/semigroup.hpp"

namespace semired {

struct NamedGroup {
  std::string name;
  FiniteSemigroup group;
};

// Group given by <a, b | a^m = 1, b^n = a^t, b a b^-1 = a^r>. Elements are
// a^i b^j, indexed i + m j. Requires r^n = 1 and t (r - 1) = 0 mod m.
FiniteSemigroup metacyclic_group(std::size_t m, std::size_t n, std::size_t r, std::size_t t);

// Dihedral group of order 2k.
FiniteSemigroup dihedral_group(std::size_t k);

// N x| H where action[h][x] is the image of x under the automorphism
// attached to h. Elements (x, h) are indexed x * |H| + h.
FiniteSemigroup semidirect_product(const FiniteSemigroup& normal, const FiniteSemigroup& acting,
                                   const std::vector<std::vector<Element>>& action);

// Closure of permutations of {0..degree-1} under composition (apply the left
// factor first). Element 0 is the identity permutation.
FiniteSemigroup permutation_group(std::size_t degree,
                                  const std::vector<std::vector<std::size_t>>& generators);

bool is_group(const FiniteSemigroup& s);
Element group_inverse(const FiniteSemigroup& g, Element x);

// Exact isomorphism test for small groups (backtracking over images of a
// generating set).
bool groups_isomorphic(const FiniteSemigroup& g, const FiniteSemigroup& h);

// Every group of order <= 24 up to isomorphism (74 groups), ordered by
// order. Built from cyclic, metacyclic, semidirect, direct-product and
// permutation constructions.
const std::vector<NamedGroup>& small_groups();

// Abelian members of small_groups() with order <= max_order.
std::vector<NamedGroup> small_abelian_groups(std::size_t max_order);

}  // namespace semired

#endif  // SEMIRED_GROUPS_HPP_
