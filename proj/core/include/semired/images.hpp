#ifndef SEMIRED_IMAGES_HPP_
#define SEMIRED_IMAGES_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semired/term.hpp"

namespace semired {

// Integer vector indexed by letters; letters with coefficient 0 are never
// stored, so equality of maps is equality of vectors.
using AbVector = std::map<char, std::int64_t>;

// Image in the free abelian group: letters count 1, concatenation adds,
// t^(w+k) scales by k, t^m scales by m. Throws UnsupportedPrimePower.
AbVector ab_image(const Term& t);

std::string format_ab_vector(const AbVector& v);

// An exponent in N disjoint-union (w + Z): Fin(n) is the natural number n,
// Inf(k) is w + k.
class ExponentValue {
 public:
  static ExponentValue fin(std::uint64_t n) { return ExponentValue(false, static_cast<std::int64_t>(n)); }
  static ExponentValue inf(std::int64_t k) { return ExponentValue(true, k); }

  bool is_infinite() const noexcept { return infinite_; }
  // n for Fin(n), k for Inf(k).
  std::int64_t value() const noexcept { return value_; }

  friend ExponentValue operator+(ExponentValue a, ExponentValue b);
  // Exponent of (x^a)^(w+j).
  ExponentValue omega_power(std::int64_t j) const;
  // Exponent of (x^a)^m.
  ExponentValue times(std::uint64_t m) const;

  bool operator==(const ExponentValue&) const = default;

  // "3" or "w+3", "w", "w-1".
  std::string to_string() const;

 private:
  ExponentValue(bool infinite, std::int64_t value) : infinite_(infinite), value_(value) {}
  bool infinite_;
  std::int64_t value_;
};

// Letters absent from the map have exponent Fin(0); Fin(0) entries are never
// stored.
using ExponentVector = std::map<char, ExponentValue>;

// Normal form in the free commutative profinite semigroup restricted to the
// N + (w + Z) fragment. Throws UnsupportedPrimePower.
ExponentVector com_exponents(const Term& t);

std::string format_exponent_vector(const ExponentVector& v);

// A letter of a free-group word: `letter` or its inverse.
struct FreeLetter {
  char letter;
  bool inverse = false;
  bool operator==(const FreeLetter&) const = default;
};

using FreeWord = std::vector<FreeLetter>;

// Freely reduced image in the free group: w-powers vanish, t^(w+k) becomes
// the k-th power. Throws UnsupportedPrimePower.
FreeWord free_group_normal_form(const Term& t);

// Free reduction of an arbitrary signed word.
FreeWord free_reduce(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);

// "x^-1y^-1xy"; the empty word prints as "1".
std::string format_free_word(const FreeWord& w);

}  // namespace semired

#endif  // SEMIRED_IMAGES_HPP_
