#ifndef SEMIRED_EVAL_HPP_
#define SEMIRED_EVAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "semired/semigroup.hpp"
#include "semired/term.hpp"
#include "semired/words.hpp"

namespace semired {

// Structural evaluation: letters through the generator map, concatenation
// through the table, t^(w+k) and t^(p^w) through the monogenic structure of
// the value of t. Throws UnboundLetter.
Element eval_term(const FiniteSemigroup& s, const GeneratorMap& g, const Term& t);

// A finite semigroup together with an assignment of letters.
struct Target {
  FiniteSemigroup semigroup;
  GeneratorMap gens;
};

// Replaces every t^(w+k) by a finite power t^N with N >= max index,
// N >= max(1, min_exponent) and N = k modulo the lcm of the periods of the
// values of t across all targets (prime powers use the stabilized residue),
// choosing the least such N. The result evaluates like `t` in every target.
Term unroll(const Term& t, const std::vector<Target>& targets, std::uint64_t min_exponent = 1);

// The word spelled by an omega-free term. Throws InvalidArgument for terms
// with omega nodes and SizeTooLarge past max_length letters.
Word expand_word(const Term& t, std::size_t max_length = std::size_t{1} << 22);

// Calls visit(g) for every assignment of `letters` to elements 0..n-1, in
// lexicographic order of the images; stops early (returning false) when visit
// returns false.
template <typename Visit>
bool for_each_assignment(std::size_t n, const std::string& letters, Visit&& visit);

// First assignment (in for_each_assignment order) where lhs and rhs differ,
// or where lhs <= rhs fails in inequality mode. Throws
// InequalityWithoutOrder for inequalities over unordered semigroups.
std::optional<GeneratorMap> identity_counterexample(const FiniteSemigroup& s, const Identity& id);

bool satisfies_identity(const FiniteSemigroup& s, const Identity& id);
bool satisfies_identity(const FiniteSemigroup& s, const Term& lhs, const Term& rhs,
                        bool inequality = false);

// --- implementation ----------------------------------------------------------

template <typename Visit>
bool for_each_assignment(std::size_t n, const std::string& letters, Visit&& visit) {
  std::vector<Element> images(letters.size(), 0);
  while (true) {
    GeneratorMap g;
    for (std::size_t i = 0; i < letters.size(); ++i) g.images[letters[i]] = images[i];
    if (!visit(g)) return false;
    std::size_t i = letters.size();
    while (true) {
      if (i == 0) return true;
      --i;
      if (++images[i] < n) break;
      images[i] = 0;
    }
  }
}

}  // namespace semired

#endif  // SEMIRED_EVAL_HPP_
