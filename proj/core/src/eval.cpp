#include "semired/eval.hpp"

#include <algorithm>
#include <numeric>

#include "semired/error.hpp"

namespace semired {

Element eval_term(const FiniteSemigroup& s, const GeneratorMap& g, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Letter: {
      const Element e = g.at(t.symbol());
      if (e >= s.size()) {
        raise(ErrorKind::InvalidArgument, std::string("letter '") + t.symbol() + "' maps outside the semigroup");
      }
      return e;
    }
    case Term::Kind::Concat:
      return s.mul(eval_term(s, g, t.left()), eval_term(s, g, t.right()));
    case Term::Kind::OmegaPower:
      return omega_plus_k(s, eval_term(s, g, t.base()), t.offset());
    case Term::Kind::PrimeOmegaPower:
      return p_omega_power(s, eval_term(s, g, t.base()), t.prime());
    case Term::Kind::FinitePower:
      return s.power(eval_term(s, g, t.base()), t.exponent());
  }
  raise(ErrorKind::InvalidArgument, "unknown term kind");
}

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 40;

Term unroll_rec(const Term& t, const std::vector<Target>& targets, std::uint64_t min_exponent) {
  switch (t.kind()) {
    case Term::Kind::Letter:
      return t;
    case Term::Kind::Concat:
      return Term::concat(unroll_rec(t.left(), targets, min_exponent),
                          unroll_rec(t.right(), targets, min_exponent));
    case Term::Kind::FinitePower:
      return Term::power(unroll_rec(t.base(), targets, min_exponent), t.exponent());
    case Term::Kind::OmegaPower:
    case Term::Kind::PrimeOmegaPower:
      break;
  }
  std::uint64_t index = 1;
  std::uint64_t modulus = 1;
  for (const Target& target : targets) {
    const MonogenicData data = monogenic_data(target.semigroup, eval_term(target.semigroup, target.gens, t.base()));
    index = std::max<std::uint64_t>(index, data.index);
    modulus = std::lcm(modulus, static_cast<std::uint64_t>(data.period));
    if (modulus > kMaxModulus) raise(ErrorKind::SizeTooLarge, "period lcm too large to unroll");
  }
  const auto m = static_cast<std::int64_t>(modulus);
  const std::uint64_t residue =
      t.kind() == Term::Kind::OmegaPower
          ? static_cast<std::uint64_t>(((t.offset() % m) + m) % m)
          : stabilized_prime_residue(t.prime(), modulus);
  const std::uint64_t lower = std::max({index, min_exponent, std::uint64_t{1}});
  const std::uint64_t exponent = lower + (residue + modulus - lower % modulus) % modulus;
  if (exponent < 1 || exponent % modulus != residue) {
    raise(ErrorKind::NoValidExponent, "no exponent satisfies the unrolling constraints");
  }
  Term base = unroll_rec(t.base(), targets, min_exponent);
  return exponent == 1 ? base : Term::power(std::move(base), exponent);
}

std::size_t word_length(const Term& t, std::size_t cap) {
  switch (t.kind()) {
    case Term::Kind::Letter:
      return 1;
    case Term::Kind::Concat:
      return std::min(cap + 1, word_length(t.left(), cap) + word_length(t.right(), cap));
    case Term::Kind::FinitePower: {
      const std::size_t base = word_length(t.base(), cap);
      if (t.exponent() > cap || base > cap / t.exponent()) return cap + 1;
      return base * t.exponent();
    }
    default:
      raise(ErrorKind::InvalidArgument, "term " + t.to_string() + " has omega powers; unroll it first");
  }
}

void spell(const Term& t, Word& out) {
  switch (t.kind()) {
    case Term::Kind::Letter:
      out += t.symbol();
      return;
    case Term::Kind::Concat:
      spell(t.left(), out);
      spell(t.right(), out);
      return;
    case Term::Kind::FinitePower: {
      const std::size_t start = out.size();
      spell(t.base(), out);
      const Word chunk = out.substr(start);
      for (std::uint64_t i = 1; i < t.exponent(); ++i) out += chunk;
      return;
    }
    default:
      return;
  }
}

}  // namespace

Term unroll(const Term& t, const std::vector<Target>& targets, std::uint64_t min_exponent) {
  if (targets.empty()) raise(ErrorKind::InvalidArgument, "unrolling needs at least one target");
  return unroll_rec(t, targets, min_exponent);
}

Word expand_word(const Term& t, std::size_t max_length) {
  const std::size_t length = word_length(t, max_length);
  if (length > max_length) {
    raise(ErrorKind::SizeTooLarge, "expanded word exceeds " + std::to_string(max_length) + " letters");
  }
  Word out;
  out.reserve(length);
  spell(t, out);
  return out;
}

std::optional<GeneratorMap> identity_counterexample(const FiniteSemigroup& s, const Identity& id) {
  if (id.inequality && !s.has_order()) {
    raise(ErrorKind::InequalityWithoutOrder, "inequalities need an ordered semigroup");
  }
  std::string letters;
  std::set_union(id.lhs.alphabet().begin(), id.lhs.alphabet().end(), id.rhs.alphabet().begin(),
                 id.rhs.alphabet().end(), std::back_inserter(letters));
  std::optional<GeneratorMap> witness;
  for_each_assignment(s.size(), letters, [&](const GeneratorMap& g) {
    const Element a = eval_term(s, g, id.lhs);
    const Element b = eval_term(s, g, id.rhs);
    const bool holds = id.inequality ? s.leq(a, b) : a == b;
    if (!holds) witness = g;
    return holds;
  });
  return witness;
}

bool satisfies_identity(const FiniteSemigroup& s, const Identity& id) {
  return !identity_counterexample(s, id).has_value();
}

bool satisfies_identity(const FiniteSemigroup& s, const Term& lhs, const Term& rhs, bool inequality) {
  return satisfies_identity(s, Identity{lhs, rhs, inequality});
}

}  // namespace semired
