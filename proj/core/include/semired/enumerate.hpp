#ifndef SEMIRED_ENUMERATE_HPP_
#define SEMIRED_ENUMERATE_HPP_

#include <cstddef>
#include <functional>
#include <vector>

#include "semired/semigroup.hpp"

namespace semired {

constexpr std::size_t kDefaultEnumerationLimit = 4;
constexpr std::size_t kMaxEnumerationOrder = 5;

struct EnumerationOptions {
  // Order 5 takes a few seconds; callers must opt in.
  bool allow_order_five = false;
};

using SemigroupPredicate = std::function<bool(const FiniteSemigroup&)>;

// Visits one representative of every isomorphism class of semigroups of
// order n, in increasing lexicographic order of the representative's table.
// The representative is the lexicographically least table over all
// relabelings. Throws SizeTooLarge outside 1..4 (1..5 with the opt-in).
void for_each_semigroup(std::size_t n,
                        const std::function<void(const FiniteSemigroup&)>& visit,
                        EnumerationOptions options = {});

std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t n,
                                                  const SemigroupPredicate& predicate = {},
                                                  EnumerationOptions options = {});

// All orders 1..max_order concatenated, smallest order first.
std::vector<FiniteSemigroup> enumerate_semigroups_up_to(std::size_t max_order,
                                                        const SemigroupPredicate& predicate = {},
                                                        EnumerationOptions options = {});

// The lexicographically least relabeling of s's table (canonical form used
// by the enumerator); two semigroups are isomorphic iff these agree.
std::vector<Element> canonical_table(const FiniteSemigroup& s);

}  // namespace semired

#endif  // SEMIRED_ENUMERATE_HPP_
