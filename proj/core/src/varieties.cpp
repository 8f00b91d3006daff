#include "semired/varieties.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <set>

#include "semired/enumerate.hpp"
#include "semired/error.hpp"
#include "semired/eval.hpp"
#include "semired/groups.hpp"
#include "semired/images.hpp"
#include "semired/syntactic.hpp"

namespace semired {

Variety Variety::parse(std::string_view text) {
  if (text == "ab") return {VarietyKind::Ab};
  if (text == "com") return {VarietyKind::Com};
  if (text == "g") return {VarietyKind::G};
  if (text == "jplus") return {VarietyKind::Jplus};
  if (text.substr(0, 3) == "cr:") {
    std::size_t bound = 0;
    const auto digits = text.substr(3);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), bound);
    if (ec == std::errc{} && end == digits.data() + digits.size() && bound >= 1 && bound <= kMaxEnumerationOrder) {
      return {VarietyKind::CRSample, bound};
    }
    raise(ErrorKind::ParseError, "variety: cr bound must be 1.." + std::to_string(kMaxEnumerationOrder));
  }
  raise(ErrorKind::ParseError, "variety: expected ab, com, g, jplus or cr:N, got '" + std::string(text) + "'");
}

std::string Variety::name() const {
  switch (kind) {
    case VarietyKind::Ab: return "ab";
    case VarietyKind::Com: return "com";
    case VarietyKind::G: return "g";
    case VarietyKind::Jplus: return "jplus";
    case VarietyKind::CRSample: return "cr:" + std::to_string(cr_bound);
  }
  return "?";
}

bool ab_satisfies(const Term& u, const Term& v) { return ab_image(u) == ab_image(v); }

bool com_satisfies(const Term& u, const Term& v) { return com_exponents(u) == com_exponents(v); }

bool g_satisfies(const Term& u, const Term& v) { return free_group_normal_form(u) == free_group_normal_form(v); }

bool jplus_leq(std::string_view u, std::string_view v) { return scattered_subword(u, v); }

const std::vector<FiniteSemigroup>& completely_regular_semigroups(std::size_t bound) {
  if (bound == 0 || bound > kMaxEnumerationOrder) {
    raise(ErrorKind::SizeTooLarge, "completely regular samples go up to order " +
                                       std::to_string(kMaxEnumerationOrder));
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<FiniteSemigroup>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(bound);
  if (it == cache.end()) {
    const auto completely_regular = [](const FiniteSemigroup& s) {
      for (Element x = 0; x < s.size(); ++x)
        if (omega_plus_k(s, x, 1) != x) return false;
      return true;
    };
    EnumerationOptions options;
    options.allow_order_five = bound == kMaxEnumerationOrder;
    it = cache.emplace(bound, enumerate_semigroups_up_to(bound, completely_regular, options)).first;
  }
  return it->second;
}

bool cr_sample_satisfies(const Term& u, const Term& v, std::size_t bound) {
  const Identity id{u, v, false};
  for (const FiniteSemigroup& s : completely_regular_semigroups(bound))
    if (!satisfies_identity(s, id)) return false;
  return true;
}

namespace {

std::string letters_of(const Identity& id) {
  std::string letters;
  std::set_union(id.lhs.alphabet().begin(), id.lhs.alphabet().end(), id.rhs.alphabet().begin(),
                 id.rhs.alphabet().end(), std::back_inserter(letters));
  return letters;
}

std::optional<Witness> make_witness(std::string name, const FiniteSemigroup& s, const GeneratorMap& g,
                                    const Identity& id) {
  const Element a = eval_term(s, g, id.lhs);
  const Element b = eval_term(s, g, id.rhs);
  const bool holds = id.inequality ? s.leq(a, b) : a == b;
  if (holds) return std::nullopt;
  return Witness{std::move(name), s, g, a, b};
}

// Every letter goes to `rest`, except `letter` which goes to `image`.
GeneratorMap spike(const std::string& letters, char letter, Element image, Element rest) {
  GeneratorMap g;
  for (char c : letters) g.images[c] = c == letter ? image : rest;
  return g;
}

std::optional<Witness> ab_witness(const Identity& id) {
  const AbVector a = ab_image(id.lhs);
  const AbVector b = ab_image(id.rhs);
  const std::string letters = letters_of(id);
  for (char c : letters) {
    const auto at = [c](const AbVector& v) {
      const auto it = v.find(c);
      return it == v.end() ? std::int64_t{0} : it->second;
    };
    const std::int64_t d = at(a) - at(b);
    if (d == 0) continue;
    const std::size_t order = static_cast<std::size_t>(d < 0 ? -d : d) + 1;
    return make_witness("C" + std::to_string(order), cyclic_group(order), spike(letters, c, 1, 0), id);
  }
  return std::nullopt;
}

std::optional<Witness> com_witness(const Identity& id) {
  const ExponentVector a = com_exponents(id.lhs);
  const ExponentVector b = com_exponents(id.rhs);
  const std::string letters = letters_of(id);
  for (char c : letters) {
    const auto at = [c](const ExponentVector& v) {
      const auto it = v.find(c);
      return it == v.end() ? ExponentValue::fin(0) : it->second;
    };
    const ExponentValue x = at(a);
    const ExponentValue y = at(b);
    if (x == y) continue;
    // C(i, p)^1 with the letter on the generator and every other letter on
    // the identity: a small grid first, then a size read off the exponents.
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t i = 1; i <= 7; ++i)
      for (std::size_t p = 1; p <= 7; ++p) candidates.emplace_back(i, p);
    const auto magnitude = [](ExponentValue e) {
      return static_cast<std::size_t>(e.value() < 0 ? -e.value() : e.value());
    };
    if (x.is_infinite() && y.is_infinite()) {
      candidates.emplace_back(1, magnitude(ExponentValue::inf(x.value() - y.value())) + 1);
    } else {
      candidates.emplace_back(std::max(x.is_infinite() ? 0 : magnitude(x), y.is_infinite() ? 0 : magnitude(y)) + 1, 1);
    }
    for (const auto& [i, p] : candidates) {
      const FiniteSemigroup m = monogenic_semigroup(i, p).monoid_completion();
      auto w = make_witness("C(" + std::to_string(i) + "," + std::to_string(p) + ")^1", m,
                            spike(letters, c, 0, *m.identity()), id);
      if (w) return w;
    }
  }
  return std::nullopt;
}

// Exhaustive search over a list of semigroups, skipping those whose
// assignment space is too large to scan.
std::optional<Witness> sample_witness(const std::vector<std::pair<std::string, const FiniteSemigroup*>>& pool,
                                      const Identity& id) {
  constexpr double kMaxAssignments = 2e6;
  const std::string letters = letters_of(id);
  for (const auto& [name, s] : pool) {
    double space = 1;
    for (std::size_t i = 0; i < letters.size(); ++i) space *= static_cast<double>(s->size());
    if (space > kMaxAssignments) continue;
    const auto g = identity_counterexample(*s, id);
    if (g) return make_witness(name, *s, *g, id);
  }
  return std::nullopt;
}

std::optional<Witness> group_witness(const Identity& id) {
  std::vector<std::pair<std::string, const FiniteSemigroup*>> pool;
  for (const NamedGroup& g : small_groups()) pool.emplace_back(g.name, &g.group);
  return sample_witness(pool, id);
}

std::optional<Witness> cr_witness(const Identity& id, std::size_t bound) {
  std::vector<std::pair<std::string, const FiniteSemigroup*>> pool;
  std::map<std::size_t, std::size_t> seen;
  for (const FiniteSemigroup& s : completely_regular_semigroups(bound)) {
    const std::size_t k = ++seen[s.size()];
    pool.emplace_back("CR" + std::to_string(s.size()) + "#" + std::to_string(k), &s);
  }
  return sample_witness(pool, id);
}

Word word_side(const Term& t) {
  if (!t.is_word_like()) {
    raise(ErrorKind::InvalidArgument, "jplus compares words; " + t.to_string() + " has omega powers");
  }
  return expand_word(t);
}

}  // namespace

Witness jplus_witness(std::string_view u, std::string_view v) {
  if (scattered_subword(u, v)) raise(ErrorKind::InvalidArgument, "u is a scattered subword of v");
  std::string alphabet(u);
  alphabet += v;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  std::string any = "(";
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i > 0) any += '|';
    any += alphabet[i];
  }
  any += ")*";
  std::string regex = any;
  for (char c : u) {
    regex += c;
    regex += any;
  }
  const SyntacticPresentation sp = syntactic_semigroup(regex, alphabet);
  const FiniteSemigroup m = ordered_syntactic_monoid(sp);
  Witness w{"ordered syntactic monoid of " + regex, m, sp.generators(), sp.classof(u), sp.classof(v)};
  return w;
}

Verdict check_identity(const Variety& variety, const Identity& id) {
  if (id.inequality && variety.kind != VarietyKind::Jplus) {
    raise(ErrorKind::InvalidArgument, "inequalities are only checked over jplus");
  }
  Verdict verdict;
  switch (variety.kind) {
    case VarietyKind::Ab:
      verdict.holds = ab_satisfies(id.lhs, id.rhs);
      if (!verdict.holds) verdict.witness = ab_witness(id);
      break;
    case VarietyKind::Com:
      verdict.holds = com_satisfies(id.lhs, id.rhs);
      if (!verdict.holds) verdict.witness = com_witness(id);
      break;
    case VarietyKind::G:
      verdict.holds = g_satisfies(id.lhs, id.rhs);
      if (!verdict.holds) verdict.witness = group_witness(id);
      break;
    case VarietyKind::CRSample:
      verdict.holds = cr_sample_satisfies(id.lhs, id.rhs, variety.cr_bound);
      if (!verdict.holds) verdict.witness = cr_witness(id, variety.cr_bound);
      break;
    case VarietyKind::Jplus: {
      const Word u = word_side(id.lhs);
      const Word v = word_side(id.rhs);
      if (!jplus_leq(u, v)) {
        verdict.witness = jplus_witness(u, v);
      } else if (!id.inequality && !jplus_leq(v, u)) {
        Witness w = jplus_witness(v, u);
        std::swap(w.lhs_value, w.rhs_value);
        verdict.witness = std::move(w);
      } else {
        verdict.holds = true;
      }
      break;
    }
  }
  return verdict;
}

}  // namespace semired
