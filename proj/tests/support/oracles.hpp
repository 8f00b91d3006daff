// Independent reference implementations and random generators shared by the
// unit, property and acceptance tests. Everything here is deliberately naive:
// powers come from the limit definition x^(n!+k), Green's relations from
// explicit ideals, isomorphism classes from brute force over permutations.

#ifndef SEMIRED_TESTS_SUPPORT_ORACLES_HPP_
#define SEMIRED_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "semired/dfa.hpp"
#include "semired/semigroup.hpp"
#include "semired/term.hpp"

namespace oracle {

using semired::Element;
using semired::FiniteSemigroup;
using semired::GeneratorMap;
using semired::Term;

// --- randomness ---------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(between(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }
  template <typename T>
  const T& pick(const std::vector<T>& items) { return items[below(items.size())]; }
  std::string word(const std::string& alphabet, std::size_t max_length, std::size_t min_length = 0) {
    const std::size_t n = static_cast<std::size_t>(between(static_cast<std::int64_t>(min_length),
                                                           static_cast<std::int64_t>(max_length)));
    std::string w;
    for (std::size_t i = 0; i < n; ++i) w += alphabet[below(alphabet.size())];
    return w;
  }

 private:
  std::mt19937_64 gen_;
};

// --- powers from the limit definition -----------------------------------------

inline Element power(const FiniteSemigroup& s, Element x, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("power: exponent 0");
  Element result = x;
  Element base = x;
  bool have = false;
  while (n > 0) {
    if (n & 1U) {
      result = have ? s.mul(result, base) : base;
      have = true;
    }
    n >>= 1U;
    if (n > 0) base = s.mul(base, base);
  }
  return result;
}

// x^1, x^2, ... until the first repeat: index i and period p with x^(i+p) = x^i.
inline std::pair<std::uint64_t, std::uint64_t> index_and_period(const FiniteSemigroup& s, Element x) {
  std::map<Element, std::uint64_t> first_seen;
  Element y = x;
  for (std::uint64_t k = 1;; ++k) {
    auto [it, inserted] = first_seen.emplace(y, k);
    if (!inserted) return {it->second, k - it->second};
    y = s.mul(y, x);
  }
}

// lcm(1..n), or 0 when it does not fit comfortably.
inline std::uint64_t lcm_up_to(std::size_t n) {
  std::uint64_t l = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    l = std::lcm(l, i);
    if (l > (std::uint64_t{1} << 40)) return 0;
  }
  return l;
}

// x^(w+k) as x^N with N a large multiple of lcm(1..|S|) shifted by k: this is
// x^(n!+k) for large n, since every period divides lcm(1..|S|).
inline Element omega_plus_k(const FiniteSemigroup& s, Element x, std::int64_t k) {
  const std::uint64_t magnitude = static_cast<std::uint64_t>(k < 0 ? -k : k);
  std::uint64_t l = lcm_up_to(s.size());
  if (l == 0) l = index_and_period(s, x).second;  // large S: fall back to the element's own period
  const std::uint64_t n = l * (s.size() + magnitude + 1);
  return power(s, x, k >= 0 ? n + magnitude : n - magnitude);
}

inline Element idempotent_power(const FiniteSemigroup& s, Element x) { return oracle::omega_plus_k(s, x, 0); }

// x^(p^w) as the limit of x^(p^M) over M = multiples of lcm(1..|S|): iterate
// y -> y^p, find the eventual cycle of that map, and stop at a position that is
// a multiple of the cycle length past the tail.
inline Element prime_omega(const FiniteSemigroup& s, Element x, std::uint32_t p) {
  std::vector<Element> orbit{x};
  std::map<Element, std::size_t> seen{{x, 0}};
  std::size_t tail = 0;
  std::size_t cycle = 0;
  for (;;) {
    const Element next = power(s, orbit.back(), p);
    auto it = seen.find(next);
    if (it != seen.end()) {
      tail = it->second;
      cycle = orbit.size() - it->second;
      break;
    }
    seen.emplace(next, orbit.size());
    orbit.push_back(next);
  }
  std::size_t m = cycle;
  while (m < tail) m += cycle;
  const std::size_t position = tail + ((m - tail) % cycle);
  return orbit[position];
}

// --- term evaluation ----------------------------------------------------------

inline Element eval(const FiniteSemigroup& s, const GeneratorMap& g, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Letter: return g.images.at(t.symbol());
    case Term::Kind::Concat: return s.mul(eval(s, g, t.left()), eval(s, g, t.right()));
    case Term::Kind::OmegaPower: return oracle::omega_plus_k(s, eval(s, g, t.base()), t.offset());
    case Term::Kind::PrimeOmegaPower: return oracle::prime_omega(s, oracle::eval(s, g, t.base()), t.prime());
    case Term::Kind::FinitePower: return power(s, eval(s, g, t.base()), t.exponent());
  }
  throw std::logic_error("unreachable");
}

inline Element eval_word(const FiniteSemigroup& s, const GeneratorMap& g, const std::string& w) {
  Element e = g.images.at(w.at(0));
  for (std::size_t i = 1; i < w.size(); ++i) e = s.mul(e, g.images.at(w[i]));
  return e;
}

// Every assignment of `letters` into S, odometer order.
inline std::vector<GeneratorMap> all_assignments(std::size_t n, const std::string& letters) {
  std::vector<GeneratorMap> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < letters.size(); ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    GeneratorMap g;
    std::size_t rest = code;
    for (char c : letters) {
      g.images[c] = static_cast<Element>(rest % n);
      rest /= n;
    }
    out.push_back(g);
  }
  return out;
}

inline bool holds_everywhere(const FiniteSemigroup& s, const Term& u, const Term& v) {
  std::string letters = u.alphabet() + v.alphabet();
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  for (const auto& g : all_assignments(s.size(), letters))
    if (eval(s, g, u) != eval(s, g, v)) return false;
  return true;
}

// --- semigroup constructions ----------------------------------------------------

inline FiniteSemigroup from_function(std::size_t n, const std::function<Element(Element, Element)>& mul) {
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * n + b] = mul(a, b);
  return FiniteSemigroup(n, std::move(table));
}

// Monogenic semigroup <s | s^(i+p) = s^i> with an identity adjoined as the
// last element; element e < i+p-1 stands for s^(e+1).
inline FiniteSemigroup monogenic_with_identity(std::size_t i, std::size_t p) {
  const std::size_t m = i + p - 1;
  auto reduce = [&](std::size_t k) {
    while (k >= i + p) k -= p;
    return k;
  };
  return from_function(m + 1, [&](Element a, Element b) -> Element {
    if (a == m) return b;
    if (b == m) return a;
    return static_cast<Element>(reduce(a + b + 2) - 1);
  });
}

// Closure of a set of transformations of {0..degree-1} under composition
// (left to right); returns the semigroup and the elements of the generators.
struct TransformationSemigroup {
  FiniteSemigroup semigroup;
  std::vector<Element> generators;
};

inline TransformationSemigroup transformation_closure(const std::vector<std::vector<std::size_t>>& gens,
                                                      std::size_t cap = 64) {
  std::vector<std::vector<std::size_t>> elements;
  std::map<std::vector<std::size_t>, Element> index;
  auto intern = [&](const std::vector<std::size_t>& f) {
    auto [it, inserted] = index.emplace(f, static_cast<Element>(elements.size()));
    if (inserted) elements.push_back(f);
    return it->second;
  };
  std::vector<Element> gen_ids;
  for (const auto& g : gens) gen_ids.push_back(intern(g));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements.size() > cap) throw std::length_error("closure too large");
    for (const auto& g : gens) {
      std::vector<std::size_t> h(g.size());
      for (std::size_t q = 0; q < g.size(); ++q) h[q] = g[elements[i][q]];
      intern(h);
    }
  }
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      std::vector<std::size_t> h(elements[a].size());
      for (std::size_t q = 0; q < h.size(); ++q) h[q] = elements[b][elements[a][q]];
      table[a * n + b] = index.at(h);
    }
  return {FiniteSemigroup(n, std::move(table)), gen_ids};
}

// A random transformation semigroup with at most max_order elements.
inline FiniteSemigroup random_semigroup(Rng& rng, std::size_t max_order) {
  for (;;) {
    const std::size_t degree = static_cast<std::size_t>(rng.between(2, 4));
    const std::size_t count = static_cast<std::size_t>(rng.between(1, 2));
    std::vector<std::vector<std::size_t>> gens(count, std::vector<std::size_t>(degree));
    for (auto& g : gens)
      for (auto& q : g) q = rng.below(degree);
    try {
      auto closure = transformation_closure(gens, max_order);
      if (closure.semigroup.size() <= max_order) return closure.semigroup;
    } catch (const std::length_error&) {
      // too large; draw again
    }
  }
}

inline bool is_associative(std::size_t n, const std::vector<Element>& t) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
  return true;
}

// Isomorphism classes of all associative n x n tables (small n only) whose
// semigroup satisfies `keep`, by brute force over every table and relabelling.
inline std::size_t brute_force_count(std::size_t n, const std::function<bool(const FiniteSemigroup&)>& keep = {}) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= n;
  std::vector<std::size_t> perm(n);
  std::set<std::vector<Element>> classes;
  std::vector<Element> t(n * n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (auto& cell : t) {
      cell = static_cast<Element>(rest % n);
      rest /= n;
    }
    if (!is_associative(n, t)) continue;
    if (keep && !keep(FiniteSemigroup(n, t))) continue;
    std::vector<Element> best;
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::vector<Element> r(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) r[perm[a] * n + perm[b]] = static_cast<Element>(perm[t[a * n + b]]);
      if (best.empty() || r < best) best = r;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

// --- Green's relations from ideals ------------------------------------------------

inline std::set<Element> left_ideal(const FiniteSemigroup& s, Element a) {
  std::set<Element> out{a};
  for (Element x = 0; x < s.size(); ++x) out.insert(s.mul(x, a));
  return out;
}
inline std::set<Element> right_ideal(const FiniteSemigroup& s, Element a) {
  std::set<Element> out{a};
  for (Element x = 0; x < s.size(); ++x) out.insert(s.mul(a, x));
  return out;
}
inline std::set<Element> two_sided_ideal(const FiniteSemigroup& s, Element a) {
  std::set<Element> out = left_ideal(s, a);
  for (Element r : right_ideal(s, a)) out.insert(r);
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y) out.insert(s.mul(s.mul(x, a), y));
  return out;
}
inline bool l_equivalent(const FiniteSemigroup& s, Element a, Element b) { return left_ideal(s, a) == left_ideal(s, b); }
inline bool r_equivalent(const FiniteSemigroup& s, Element a, Element b) { return right_ideal(s, a) == right_ideal(s, b); }
inline bool j_equivalent(const FiniteSemigroup& s, Element a, Element b) {
  return two_sided_ideal(s, a) == two_sided_ideal(s, b);
}

// --- words and automata ---------------------------------------------------------

// All words over `alphabet` of length lo..hi, shortlex order.
inline std::vector<std::string> all_words(const std::string& alphabet, std::size_t lo, std::size_t hi) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 0; len <= hi; ++len) {
    if (len >= lo) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char c : alphabet) next.push_back(w + c);
    layer = std::move(next);
  }
  return out;
}

// Sub(w): every scattered subword, by explicit enumeration of index subsets.
inline std::set<std::string> sub_words(const std::string& w) {
  std::set<std::string> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << w.size()); ++mask) {
    std::string u;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (mask & (std::size_t{1} << i)) u += w[i];
    out.insert(u);
  }
  return out;
}

// Factor set of w (contiguous, lengths 1..bound).
inline std::set<std::string> factors(const std::string& w, std::size_t bound) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; len <= bound && i + len <= w.size(); ++len) out.insert(w.substr(i, len));
  return out;
}

// Random complete DFA (not necessarily minimal or trim).
inline semired::Dfa random_dfa(Rng& rng, std::size_t states, const std::string& alphabet) {
  semired::Dfa d;
  d.states = states;
  d.alphabet = alphabet;
  d.trans.resize(states * alphabet.size());
  for (auto& t : d.trans) t = static_cast<semired::State>(rng.below(states));
  d.initial = 0;
  d.accepting.resize(states);
  for (std::size_t q = 0; q < states; ++q) d.accepting[q] = rng.coin(0.4);
  return d;
}

// Number of Myhill-Nerode classes of reachable states, by comparing acceptance
// of all suffixes up to `depth` from each reachable state.
inline std::size_t nerode_classes(const semired::Dfa& d, std::size_t depth) {
  std::set<semired::State> reachable{d.initial};
  std::vector<semired::State> todo{d.initial};
  while (!todo.empty()) {
    const semired::State q = todo.back();
    todo.pop_back();
    for (char c : d.alphabet)
      if (reachable.insert(d.next(q, c)).second) todo.push_back(d.next(q, c));
  }
  const auto suffixes = all_words(d.alphabet, 0, depth);
  std::set<std::vector<bool>> signatures;
  for (semired::State q : reachable) {
    std::vector<bool> sig;
    for (const auto& w : suffixes) sig.push_back(d.accepting[d.run(q, w)]);
    signatures.insert(sig);
  }
  return signatures.size();
}

// --- random terms --------------------------------------------------------------------

struct TermShape {
  std::string letters = "xy";
  std::size_t depth = 3;
  std::int64_t min_offset = -2;
  std::int64_t max_offset = 2;
  bool finite_powers = true;
  bool prime_powers = false;
};

inline Term random_term(Rng& rng, const TermShape& shape, std::size_t depth) {
  if (depth == 0 || rng.coin(0.25)) return Term::letter(shape.letters[rng.below(shape.letters.size())]);
  const auto roll = rng.below(10);
  if (roll < 5) return Term::concat(random_term(rng, shape, depth - 1), random_term(rng, shape, depth - 1));
  if (roll < 8) return Term::omega(random_term(rng, shape, depth - 1), rng.between(shape.min_offset, shape.max_offset));
  if (roll < 9 && shape.prime_powers) {
    static const std::vector<std::uint32_t> primes{2, 3, 5};
    return Term::prime_omega(random_term(rng, shape, depth - 1), rng.pick(primes));
  }
  if (shape.finite_powers) return Term::power(random_term(rng, shape, depth - 1), static_cast<std::uint64_t>(rng.between(2, 3)));
  return Term::concat(random_term(rng, shape, depth - 1), random_term(rng, shape, depth - 1));
}

inline Term random_term(Rng& rng, const TermShape& shape = {}) { return random_term(rng, shape, shape.depth); }

// Rewrites that hold in every finite semigroup: reassociation,
// t^(w+j) t^(w+k) = t^(w+j+k), t t^(w+k) = t^(w+k+1), (t^m)^(w+k) = t^(w+mk),
// t^m = t t^(m-1).
inline Term rewrite_everywhere(Rng& rng, const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Letter: return t;
    case K::Concat: {
      const Term& a = t.left();
      const Term& b = t.right();
      if (b.kind() == K::Concat && rng.coin(0.3)) return Term::concat(Term::concat(a, b.left()), b.right());
      if (a.kind() == K::OmegaPower && b.kind() == K::OmegaPower && a.base() == b.base() && rng.coin(0.7)) {
        return Term::omega(a.base(), a.offset() + b.offset());
      }
      if (b.kind() == K::OmegaPower && b.base() == a && rng.coin(0.7)) return Term::omega(a, b.offset() + 1);
      return Term::concat(rewrite_everywhere(rng, a), rewrite_everywhere(rng, b));
    }
    case K::OmegaPower: {
      if (t.base().kind() == K::FinitePower && rng.coin(0.7)) {
        const auto m = static_cast<std::int64_t>(t.base().exponent());
        return Term::omega(t.base().base(), m * t.offset());
      }
      return Term::omega(rewrite_everywhere(rng, t.base()), t.offset());
    }
    case K::PrimeOmegaPower: return Term::prime_omega(rewrite_everywhere(rng, t.base()), t.prime());
    case K::FinitePower:
      if (rng.coin(0.3)) {
        const Term rest = t.exponent() == 2 ? t.base() : Term::power(t.base(), t.exponent() - 1);
        return Term::concat(t.base(), rest);
      }
      return Term::power(rewrite_everywhere(rng, t.base()), t.exponent());
  }
  return t;
}

// Rewrites valid in commutative semigroups: swap the factors of a product.
inline Term rewrite_commutative(Rng& rng, const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Concat: {
      Term a = rewrite_commutative(rng, t.left());
      Term b = rewrite_commutative(rng, t.right());
      return rng.coin() ? Term::concat(b, a) : Term::concat(a, b);
    }
    case K::OmegaPower: return Term::omega(rewrite_commutative(rng, t.base()), t.offset());
    case K::FinitePower: return Term::power(rewrite_commutative(rng, t.base()), t.exponent());
    default: return rewrite_everywhere(rng, t);
  }
}

// Rewrites valid in groups: insert or delete idempotent powers, insert
// cancelling pairs t t^(w-1).
inline Term rewrite_group(Rng& rng, const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Letter:
      if (rng.coin(0.3)) return Term::concat(Term::concat(t, Term::omega(t, -1)), t);
      if (rng.coin(0.2)) return Term::concat(t, Term::omega(Term::letter(rng.coin() ? 'x' : 'y'), 0));
      return t;
    case K::Concat:
      if (t.right().kind() == K::OmegaPower && t.right().offset() == 0 && rng.coin(0.5)) return rewrite_group(rng, t.left());
      return Term::concat(rewrite_group(rng, t.left()), rewrite_group(rng, t.right()));
    case K::OmegaPower: return Term::omega(rewrite_group(rng, t.base()), t.offset());
    case K::FinitePower: return Term::power(rewrite_group(rng, t.base()), t.exponent());
    default: return t;
  }
}

// u embeds into the result structurally: words are inserted next to letters,
// so u <= result in every ordered monoid satisfying 1 <= x.
inline Term enlarge(Rng& rng, const Term& u, const std::string& letters) {
  using K = Term::Kind;
  const auto extra = [&] { return Term::word(rng.word(letters, 2, 1)); };
  switch (u.kind()) {
    case K::Letter:
      if (rng.coin(0.3)) return Term::concat(extra(), u);
      if (rng.coin(0.3)) return Term::concat(u, extra());
      return u;
    case K::Concat: return Term::concat(oracle::enlarge(rng, u.left(), letters), oracle::enlarge(rng, u.right(), letters));
    case K::OmegaPower: return Term::omega(oracle::enlarge(rng, u.base(), letters), u.offset());
    case K::FinitePower: return Term::power(oracle::enlarge(rng, u.base(), letters), u.exponent());
    default: return u;
  }
}

}  // namespace oracle

#endif  // SEMIRED_TESTS_SUPPORT_ORACLES_HPP_
