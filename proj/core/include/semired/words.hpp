#ifndef SEMIRED_WORDS_HPP_
#define SEMIRED_WORDS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semired {

// Finite words are plain strings of single-character letters.
using Word = std::string;

// u is a scattered subword of v: v = v0 a1 v1 ... an vn where u = a1 ... an.
bool scattered_subword(std::string_view u, std::string_view v);

// Positions in v matched by the leftmost (greedy) embedding of u, or nullopt.
std::optional<std::vector<std::size_t>> greedy_embedding(std::string_view u, std::string_view v);

// u occurs contiguously in v.
bool is_factor(std::string_view u, std::string_view v);

// Number of (possibly overlapping) occurrences of f in w.
std::size_t count_occurrences(std::string_view w, std::string_view f);

// |w|_a for every letter a in `alphabet`.
std::vector<std::size_t> letter_counts(std::string_view w, std::string_view alphabet);

// Size of a largest set of pairwise non-overlapping occurrences of a nonempty
// f in w (the leftmost-first greedy count, which is optimal).
std::size_t disjoint_occurrences(std::string_view w, std::string_view f);

// Prouhet-Thue-Morse substitution x -> xy, y -> yx applied letterwise; other
// letters are rejected with InvalidArgument.
Word thue_morse_step(std::string_view w);

// mu^n(x), of length 2^n. n is capped at 30 (SizeTooLarge beyond).
Word ptm_iterate(std::size_t n);

// No nonempty factor of the form fff.
bool is_cube_free(std::string_view w);

}  // namespace semired

#endif  // SEMIRED_WORDS_HPP_
