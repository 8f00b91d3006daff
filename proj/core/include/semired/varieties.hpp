#ifndef SEMIRED_VARIETIES_HPP_
#define SEMIRED_VARIETIES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semired/semigroup.hpp"
#include "semired/term.hpp"
#include "semired/words.hpp"

namespace semired {

enum class VarietyKind { Ab, Com, G, Jplus, CRSample };

struct Variety {
  VarietyKind kind = VarietyKind::Ab;
  // Largest enumerated order for CRSample (at most 5).
  std::size_t cr_bound = 4;

  // "ab", "com", "g", "jplus", "cr:N". Throws ParseError.
  static Variety parse(std::string_view text);
  std::string name() const;
};

// Abelian groups: equal images in Z^A.
bool ab_satisfies(const Term& u, const Term& v);

// Commutative semigroups: equal exponent vectors over N + (w + Z).
bool com_satisfies(const Term& u, const Term& v);

// Groups: equal reduced free-group words.
bool g_satisfies(const Term& u, const Term& v);

// J+ |= u <= v for words: u is a scattered subword of v.
bool jplus_leq(std::string_view u, std::string_view v);

// Representatives of all completely regular semigroups (x^(w+1) = x) of
// order <= bound, smallest first. Cached; bound <= 5 (SizeTooLarge beyond).
const std::vector<FiniteSemigroup>& completely_regular_semigroups(std::size_t bound);

// The identity holds in every enumerated completely regular semigroup of
// order <= bound under every assignment. A necessary condition for CR
// membership, not a decision procedure.
bool cr_sample_satisfies(const Term& u, const Term& v, std::size_t bound = 4);

// A finite semigroup and assignment separating the two sides.
struct Witness {
  std::string name;
  FiniteSemigroup semigroup;
  GeneratorMap assignment;
  Element lhs_value = 0;
  Element rhs_value = 0;
};

struct Verdict {
  bool holds = false;
  std::optional<Witness> witness;
};

// Decides (or, for CRSample, samples) the identity over the variety and looks
// for a separating witness when it fails. J+ requires word-like sides; an
// equality over J+ is checked as two inequalities. Inequalities are only
// meaningful over J+ (InvalidArgument otherwise).
Verdict check_identity(const Variety& variety, const Identity& id);

// For words with u not a scattered subword of v: the ordered syntactic monoid
// of the words containing u as a scattered subword, each letter of u and v
// sent to its class. There u's class is not below v's.
Witness jplus_witness(std::string_view u, std::string_view v);

}  // namespace semired

#endif  // SEMIRED_VARIETIES_HPP_
