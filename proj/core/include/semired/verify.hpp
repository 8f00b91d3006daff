#ifndef SEMIRED_VERIFY_HPP_
#define SEMIRED_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semired {

struct Check {
  std::string name;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string section;
  std::vector<Check> checks;
  // Wall-clock duration of the run.
  double millis = 0;

  // True iff every check passes (and there is at least one).
  bool pass() const;
  const Check* find(std::string_view name) const;
};

// Default languages of the three constructions.
inline constexpr std::string_view kComLanguage = "((aab)(aab))* | ((abb)(abb))*";
inline constexpr std::string_view kGroupsLanguage = "aa a+ b+ aa";
inline constexpr std::string_view kCompletelyRegularLanguage = "(aab)(aab)(aab)+(abb)+(aab)(aab)";

// The commutative counterexample: syntactic semigroup of `regex`, the class
// languages of s = [bab^2] and t = [a^2ba], eq. [ab^2]^(w-1) = [ab^2] and
// [a^2b]^(w-1) = [a^2b], the (w-1)-solution (y(xy^2)^(w-1), (x^2y)^(w-1)x) and
// the integer system read off the class languages. Checks a-e.
VerificationReport verify_com_counterexample(std::string_view regex = kComLanguage);

// The group counterexample for a^2a^+b^+a^2: [a] = {a}, [a^4] = [a^3],
// [b^2] = [b], the preimage of s = [a^3ba^2], the G-solution
// (x^(w-1)y^w x^2, x), the suffix/factor conditions and the absence of bab in
// the preimage of s. Checks a-f.
VerificationReport verify_groups_counterexample(std::string_view regex = kGroupsLanguage);

// The completely regular counterexample for (a^2b)^2(a^2b)^+(ab^2)^+(a^2b)^2:
// class facts, the unique b^2a^2 occurrence, the (w-1)-solution, the
// identities checked over every completely regular semigroup of order at
// most cr_bound, the L-equivalence step and the Thue-Morse facts. Checks a-g.
VerificationReport verify_cr_counterexample(std::string_view regex = kCompletelyRegularLanguage,
                                            std::size_t cr_bound = 4);

}  // namespace semired

#endif  // SEMIRED_VERIFY_HPP_
