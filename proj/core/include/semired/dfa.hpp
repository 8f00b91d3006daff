#ifndef SEMIRED_DFA_HPP_
#define SEMIRED_DFA_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semired/regex.hpp"

namespace semired {

using State = std::uint32_t;

// Complete deterministic automaton over a sorted alphabet of characters.
struct Dfa {
  std::size_t states = 0;
  std::string alphabet;
  // trans[q * alphabet.size() + letter_index]
  std::vector<State> trans;
  State initial = 0;
  std::vector<bool> accepting;
  // Set by minimize(): all states reachable, no two Nerode-equivalent, and
  // states numbered in breadth-first order from the initial state.
  bool minimal = false;

  State next(State q, char letter) const;
  State next_index(State q, std::size_t letter_index) const {
    return trans[q * alphabet.size() + letter_index];
  }
  State run(State q, std::string_view word) const;
  bool accepts(std::string_view word) const { return accepting[run(initial, word)]; }
  std::size_t letter_index(char letter) const;

  // Structural validation (totality, ranges); throws InvalidArgument.
  void validate() const;
};

// Minimal complete DFA of the regex over `alphabet` (defaults to the regex's
// own letters). Throws EmptyAlphabet / AlphabetMismatch.
Dfa compile_min_dfa(const Regex& regex, std::string_view alphabet = {});
Dfa compile_min_dfa(std::string_view regex, std::string_view alphabet = {});

// Moore partition refinement after trimming unreachable states.
Dfa minimize(const Dfa& dfa);

// Throws AlphabetMismatch when the alphabets differ.
bool languages_equal(const Dfa& a, const Dfa& b);

Dfa intersect(const Dfa& a, const Dfa& b);
Dfa complement(const Dfa& a);
bool is_empty(const Dfa& a);
bool is_finite(const Dfa& a);

// Accepted words of length <= max_length in shortlex order, at most `limit`
// of them.
std::vector<std::string> accepted_words(const Dfa& a, std::size_t max_length,
                                        std::size_t limit = static_cast<std::size_t>(-1));

// Dump format:
//   states k
//   alphabet a b
//   initial i
//   accepting j1 j2 ...
//   trans:
//   q a q'          (one line per state and letter, states ascending)
std::string format_dfa(const Dfa& a);
Dfa parse_dfa(std::string_view text);

}  // namespace semired

#endif  // SEMIRED_DFA_HPP_
