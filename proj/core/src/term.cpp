#include "semired/term.hpp"

#include <algorithm>

#include "semired/error.hpp"
#include "semired/semigroup.hpp"

namespace semired {

namespace {

std::string merge_alphabets(const std::string& a, const std::string& b) {
  std::string out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Term Term::make(Node node) { return Term(std::make_shared<const Node>(std::move(node))); }

Term Term::letter(char c) {
  Node n;
  n.kind = Kind::Letter;
  n.symbol = c;
  n.alphabet = std::string(1, c);
  return make(std::move(n));
}

Term Term::concat(Term left, Term right) {
  Node n;
  n.kind = Kind::Concat;
  n.size = 1 + left.size() + right.size();
  n.alphabet = merge_alphabets(left.alphabet(), right.alphabet());
  n.word_like = left.is_word_like() && right.is_word_like();
  n.has_prime = left.has_prime_power() || right.has_prime_power();
  n.left = std::make_shared<const Term>(std::move(left));
  n.right = std::make_shared<const Term>(std::move(right));
  return make(std::move(n));
}

Term Term::omega(Term base, std::int64_t offset) {
  Node n;
  n.kind = Kind::OmegaPower;
  n.offset = offset;
  n.size = 1 + base.size();
  n.alphabet = base.alphabet();
  n.word_like = false;
  n.has_prime = base.has_prime_power();
  n.left = std::make_shared<const Term>(std::move(base));
  return make(std::move(n));
}

Term Term::prime_omega(Term base, std::uint32_t prime) {
  if (!is_prime(prime)) raise(ErrorKind::InvalidArgument, std::to_string(prime) + " is not prime");
  Node n;
  n.kind = Kind::PrimeOmegaPower;
  n.count = prime;
  n.size = 1 + base.size();
  n.alphabet = base.alphabet();
  n.word_like = false;
  n.has_prime = true;
  n.left = std::make_shared<const Term>(std::move(base));
  return make(std::move(n));
}

Term Term::power(Term base, std::uint64_t exponent) {
  if (exponent == 0) raise(ErrorKind::InvalidArgument, "finite powers start at 1");
  Node n;
  n.kind = Kind::FinitePower;
  n.count = exponent;
  n.size = 1 + base.size();
  n.alphabet = base.alphabet();
  n.word_like = base.is_word_like();
  n.has_prime = base.has_prime_power();
  n.left = std::make_shared<const Term>(std::move(base));
  return make(std::move(n));
}

Term Term::word(std::string_view letters) {
  if (letters.empty()) raise(ErrorKind::InvalidArgument, "terms are nonempty");
  Term t = letter(letters.front());
  for (std::size_t i = 1; i < letters.size(); ++i) t = concat(t, letter(letters[i]));
  return t;
}

const Term& Term::left() const {
  if (!node_->left) raise(ErrorKind::InvalidArgument, "letter has no subterm");
  return *node_->left;
}

const Term& Term::right() const {
  if (!node_->right) raise(ErrorKind::InvalidArgument, "only concatenations have a right subterm");
  return *node_->right;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Letter: return a.symbol() == b.symbol();
    case Term::Kind::Concat: return a.left() == b.left() && a.right() == b.right();
    case Term::Kind::OmegaPower: return a.offset() == b.offset() && a.base() == b.base();
    case Term::Kind::PrimeOmegaPower:
    case Term::Kind::FinitePower: return a.exponent() == b.exponent() && a.base() == b.base();
  }
  return false;
}

namespace {

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Letter:
      out += t.symbol();
      return;
    case Term::Kind::Concat:
      print(t.left(), out);
      print(t.right(), out);
      return;
    default:
      break;
  }
  const Term& base = t.base();
  if (base.kind() == Term::Kind::Letter) {
    out += base.symbol();
  } else {
    out += '(';
    print(base, out);
    out += ')';
  }
  switch (t.kind()) {
    case Term::Kind::OmegaPower:
      if (t.offset() == 0) out += "^w";
      else if (t.offset() > 0) out += "^(w+" + std::to_string(t.offset()) + ")";
      else out += "^(w-" + std::to_string(-t.offset()) + ")";
      break;
    case Term::Kind::PrimeOmegaPower:
      out += "^(" + std::to_string(t.prime()) + "^w)";
      break;
    case Term::Kind::FinitePower:
      out += "^" + std::to_string(t.exponent());
      break;
    default:
      break;
  }
}

}  // namespace

std::string Term::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

namespace {

Term commutator(const Term& s, const Term& t) {
  return Term::concat(Term::concat(Term::concat(Term::omega(s, -1), Term::omega(t, -1)), s), t);
}

}  // namespace

Term iterated_commutator(std::size_t n, char x, char y) {
  if (n == 0) raise(ErrorKind::InvalidArgument, "commutator depth starts at 1");
  if (n > 8) raise(ErrorKind::DepthCap, "commutator depth is capped at 8");
  const Term ty = Term::letter(y);
  Term c = commutator(Term::letter(x), ty);
  for (std::size_t i = 1; i < n; ++i) c = commutator(c, ty);
  return c;
}

}  // namespace semired
