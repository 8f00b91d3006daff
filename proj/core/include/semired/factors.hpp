#ifndef SEMIRED_FACTORS_HPP_
#define SEMIRED_FACTORS_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "semired/term.hpp"
#include "semired/words.hpp"

namespace semired {

// Length-bounded view of a (possibly very long) word: its nonempty factors of
// length at most `bound`, and its prefix and suffix of length
// min(bound, |w|).
struct FactorSummary {
  std::size_t bound = 0;
  std::set<Word> factors;
  Word prefix;
  Word suffix;

  bool has_factor(std::string_view f) const { return factors.count(Word(f)) != 0; }
  bool has_suffix(std::string_view s) const;
  bool has_prefix(std::string_view p) const;

  bool operator==(const FactorSummary&) const = default;
};

FactorSummary summarize_word(std::string_view w, std::size_t bound);

// Summary of concatenation; associative.
FactorSummary combine(const FactorSummary& a, const FactorSummary& b);

// Summary of the word obtained from t by expanding every omega and
// prime-omega power as `omega_repetitions` copies of its base (default
// bound + 2, which already realizes every factor of length <= bound of the
// periodic continuation) and finite powers literally. Costs O(size * log m)
// summary combinations regardless of the expanded length.
FactorSummary bounded_factors(const Term& t, std::size_t bound,
                              std::optional<std::size_t> omega_repetitions = std::nullopt);

}  // namespace semired

#endif  // SEMIRED_FACTORS_HPP_
