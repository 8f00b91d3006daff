#ifndef SEMIRED_REDUCIBILITY_HPP_
#define SEMIRED_REDUCIBILITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "semired/eval.hpp"
#include "semired/semigroup.hpp"
#include "semired/term.hpp"
#include "semired/varieties.hpp"
#include "semired/words.hpp"

namespace semired {

enum class SolutionMode { Equality, Inequality };

// The equation x = y (or inequality x <= y) over S with right-hand sides s, t
// and letters interpreted through gens.
struct SolutionTriple {
  FiniteSemigroup semigroup;
  Element s = 0;
  Element t = 0;
  GeneratorMap gens;
  SolutionMode mode = SolutionMode::Equality;

  // Throws InvalidArgument for out-of-range elements or generators and
  // InequalityWithoutOrder for an inequality over an unordered semigroup.
  void validate() const;
};

struct WordPair {
  Word u;
  Word v;
  bool operator==(const WordPair&) const = default;
};

// Shortest (then lexicographically least over the generator letters) word
// labelling a path from the identity to `target` in the right Cayley graph;
// a shortest path is simple, so its length is below |M|. M must have an
// identity. Throws Unreachable.
Word simple_path_word(const FiniteSemigroup& m, const GeneratorMap& gens, Element target);

// Follows w through the right Cayley graph from the identity and cuts out
// every loop as soon as it closes. The result is a scattered subword of w with
// the same image, labels a simple path, and is shorter than |M|.
Word loop_removal(std::string_view w, const FiniteSemigroup& m, const GeneratorMap& gens);

// Word solution over J+ from an inequality solution (u, v): u' is loop
// removal on an unrolling of u; v' embeds u' greedily into an unrolling of v
// (exponents at least |S^1|) and loop-removes each gap. Guarantees
// phi(u') = s, phi(v') = t and u' a scattered subword of v'.
// Throws NotASolution when phi(u) != s or phi(v) != t and
// SubwordObstruction when u' does not embed.
WordPair jplus_word_solution(const SolutionTriple& triple, const Term& u, const Term& v);

// Word solution for a locally finite variety represented by finite
// semigroups `v_images`: unrolls both sides against the triple and every
// image at once. Throws NotASolution when phi(u) != s, phi(v) != t, or the
// sides differ (resp. are not ordered) in some image.
WordPair loc_fin_word_solution(const SolutionTriple& triple, const Term& u, const Term& v,
                               const std::vector<Target>& v_images);

constexpr std::size_t kMaxSearchSize = 12;

// Exhaustive search over terms built from the triple's letters with
// concatenation and t^(w+k), k in `offsets`, up to `max_size` nodes, for a
// pair (u, v) with phi(u) = s, phi(v) = t and the variety satisfying u = v.
// Terms that agree in S and in the variety's normal form are interchangeable,
// so each such class keeps one representative (least size, then string).
// Returns the least pair by (size u, string u, size v, string v).
// Varieties: Ab, Com, G (InvalidArgument otherwise); SizeTooLarge past 12.
std::optional<std::pair<Term, Term>> bounded_omega_solution_search(
    const SolutionTriple& triple, VarietyKind variety, std::size_t max_size,
    const std::vector<std::int64_t>& offsets = {0});

}  // namespace semired

#endif  // SEMIRED_REDUCIBILITY_HPP_
