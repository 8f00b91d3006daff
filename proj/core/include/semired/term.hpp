#ifndef SEMIRED_TERM_HPP_
#define SEMIRED_TERM_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace semired {

// Immutable sigma-term: letters, binary concatenation, t^(omega+k) for any
// integer k, t^(p^omega) for a prime p, and finite powers t^m (m >= 1).
// Subterms are shared; copies are cheap.
class Term {
 public:
  enum class Kind { Letter, Concat, OmegaPower, PrimeOmegaPower, FinitePower };

  static Term letter(char c);
  static Term concat(Term left, Term right);
  static Term omega(Term base, std::int64_t offset = 0);
  static Term prime_omega(Term base, std::uint32_t prime);
  static Term power(Term base, std::uint64_t exponent);
  // Left-nested concatenation of the letters of a nonempty word.
  static Term word(std::string_view letters);

  Kind kind() const noexcept { return node_->kind; }
  char symbol() const noexcept { return node_->symbol; }
  const Term& left() const;
  const Term& right() const;
  const Term& base() const { return left(); }
  std::int64_t offset() const noexcept { return node_->offset; }
  std::uint32_t prime() const noexcept { return static_cast<std::uint32_t>(node_->count); }
  std::uint64_t exponent() const noexcept { return node_->count; }

  // Node count of the syntax tree.
  std::size_t size() const noexcept { return node_->size; }
  // Sorted, duplicate-free letters.
  const std::string& alphabet() const noexcept { return node_->alphabet; }
  // No omega or prime-omega node anywhere.
  bool is_word_like() const noexcept { return node_->word_like; }
  bool has_prime_power() const noexcept { return node_->has_prime; }

  // Canonical concrete syntax accepted by parse_term, e.g. "y(xy^2)^(w-1)".
  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind = Kind::Letter;
    char symbol = 0;
    std::int64_t offset = 0;
    std::uint64_t count = 0;
    std::shared_ptr<const Term> left;
    std::shared_ptr<const Term> right;
    std::size_t size = 1;
    std::string alphabet;
    bool word_like = true;
    bool has_prime = false;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Node node);

  std::shared_ptr<const Node> node_;
};

// Concrete syntax: single-character letters; juxtaposition concatenates;
// parentheses group; postfix exponents `^w`, `^(w+K)`, `^(w-K)`,
// `^(p^w)` for a prime p, and `^N` for N >= 1. Whitespace is ignored.
// Throws ParseError.
Term parse_term(std::string_view text);

struct Identity {
  Term lhs;
  Term rhs;
  bool inequality = false;  // lhs <= rhs
};

// [x, _n y]: [x, y] = x^(w-1) y^(w-1) x y and [x, _(n+1) y] = [[x, _n y], y].
// The size doubles with each level; n is capped at 8 (DepthCap beyond).
Term iterated_commutator(std::size_t n, char x = 'x', char y = 'y');

// "u = v" or "u <= v".
Identity parse_identity(std::string_view text);

}  // namespace semired

#endif  // SEMIRED_TERM_HPP_
