#include <cctype>
#include <charconv>
#include <optional>

#include "semired/error.hpp"
#include "semired/semigroup.hpp"
#include "semired/term.hpp"

namespace semired {

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse_all() {
    Term t = parse_product();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(ErrorKind::ParseError, "term: " + what + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_factor() {
    const auto c = peek();
    return c && (*c == '(' || std::isalpha(static_cast<unsigned char>(*c)));
  }

  Term parse_product() {
    if (!starts_factor()) fail(pos_ >= text_.size() ? "unexpected end of input" : "expected a letter or '('");
    Term t = parse_factor();
    while (starts_factor()) t = Term::concat(t, parse_factor());
    return t;
  }

  Term parse_factor() {
    Term t = parse_atom();
    while (peek() == '^') {
      ++pos_;
      t = parse_exponent(std::move(t));
    }
    return t;
  }

  Term parse_atom() {
    if (peek() == '(') {
      ++pos_;
      Term t = parse_product();
      expect(')');
      return t;
    }
    return Term::letter(text_[pos_++]);
  }

  std::uint64_t parse_number() {
    skip_space();
    std::uint64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto [end, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || end == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - first);
    return value;
  }

  bool at_digit() {
    const auto c = peek();
    return c && std::isdigit(static_cast<unsigned char>(*c));
  }

  Term parse_exponent(Term base) {
    if (peek() == 'w') {
      ++pos_;
      return Term::omega(std::move(base));
    }
    if (at_digit()) return finite(std::move(base), parse_number());
    if (peek() != '(') fail("expected an exponent");
    ++pos_;
    Term result = base;
    if (peek() == 'w') {
      ++pos_;
      const auto sign = peek();
      if (sign == '+' || sign == '-') {
        ++pos_;
        const auto k = parse_number();
        if (k > static_cast<std::uint64_t>(INT64_MAX)) fail("offset out of range");
        const auto offset = static_cast<std::int64_t>(k);
        result = Term::omega(std::move(base), sign == '+' ? offset : -offset);
      } else {
        result = Term::omega(std::move(base));
      }
    } else if (at_digit()) {
      const auto n = parse_number();
      if (peek() == '^') {
        ++pos_;
        if (peek() != 'w') fail("expected 'w' in a prime power exponent");
        ++pos_;
        if (n > UINT32_MAX || !is_prime(n)) fail(std::to_string(n) + " is not a prime");
        result = Term::prime_omega(std::move(base), static_cast<std::uint32_t>(n));
      } else {
        result = finite(std::move(base), n);
      }
    } else {
      fail("expected an exponent");
    }
    expect(')');
    return result;
  }

  Term finite(Term base, std::uint64_t n) {
    if (n == 0) fail("exponent must be at least 1");
    return n == 1 ? base : Term::power(std::move(base), n);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse_all(); }

Identity parse_identity(std::string_view text) {
  const auto le = text.find("<=");
  if (le != std::string_view::npos) {
    return {parse_term(text.substr(0, le)), parse_term(text.substr(le + 2)), true};
  }
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) raise(ErrorKind::ParseError, "identity: expected '=' or '<='");
  return {parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1)), false};
}

}  // namespace semired
