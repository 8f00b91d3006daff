#include "semired/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "semired/error.hpp"

namespace semired {

namespace {

std::string at_element(Element a) { return std::to_string(a); }

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::size_t n, std::vector<Element> table,
                                 SemigroupOptions options)
    : n_(n),
      table_(std::move(table)),
      labels_(std::move(options.labels)),
      order_(std::move(options.order)),
      identity_(options.identity) {
  validate(options.generators);
}

FiniteSemigroup::FiniteSemigroup(std::size_t n, std::vector<Element> table,
                                 std::vector<std::string> labels,
                                 std::optional<OrderMatrix> order,
                                 std::optional<Element> identity, bool trusted)
    : n_(n),
      table_(std::move(table)),
      labels_(std::move(labels)),
      order_(std::move(order)),
      identity_(identity) {
  if (!trusted) validate({});
}

void FiniteSemigroup::validate(const std::vector<Element>& generators) const {
  if (n_ == 0) raise(ErrorKind::InvalidSemigroup, "a semigroup needs at least one element");
  if (table_.size() != n_ * n_) {
    raise(ErrorKind::InvalidSemigroup, "table has " + std::to_string(table_.size()) +
                                           " entries, expected " + std::to_string(n_ * n_));
  }
  for (Element v : table_) {
    if (v >= n_) raise(ErrorKind::InvalidSemigroup, "table entry " + at_element(v) + " out of range");
  }
  if (!labels_.empty() && labels_.size() != n_) {
    raise(ErrorKind::InvalidSemigroup, "label count does not match element count");
  }

  for (Element g : generators) {
    if (g >= n_) raise(ErrorKind::InvalidSemigroup, "generator out of range");
  }

  if (generators.empty()) {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        const Element ab = mul(a, b);
        for (Element c = 0; c < n_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            raise(ErrorKind::InvalidSemigroup,
                  "not associative at (" + at_element(a) + "," + at_element(b) + "," +
                      at_element(c) + ")");
          }
        }
      }
  } else {
    // The generators must reach every element.
    std::vector<bool> seen(n_, false);
    std::queue<Element> todo;
    for (Element g : generators) {
      if (!seen[g]) {
        seen[g] = true;
        todo.push(g);
      }
    }
    while (!todo.empty()) {
      const Element a = todo.front();
      todo.pop();
      for (Element g : generators) {
        const Element ag = mul(a, g);
        if (!seen[ag]) {
          seen[ag] = true;
          todo.push(ag);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      raise(ErrorKind::InvalidSemigroup, "the given generators do not generate the table");
    }
    // Light's test: (x g) y = x (g y) for every generator g.
    for (Element g : generators)
      for (Element x = 0; x < n_; ++x) {
        const Element xg = mul(x, g);
        for (Element y = 0; y < n_; ++y) {
          if (mul(xg, y) != mul(x, mul(g, y))) {
            raise(ErrorKind::InvalidSemigroup,
                  "not associative at (" + at_element(x) + "," + at_element(g) + "," +
                      at_element(y) + ")");
          }
        }
      }
  }

  if (identity_) {
    const Element e = *identity_;
    if (e >= n_) raise(ErrorKind::InvalidSemigroup, "identity out of range");
    for (Element a = 0; a < n_; ++a) {
      if (mul(e, a) != a || mul(a, e) != a) {
        raise(ErrorKind::InvalidSemigroup, "element " + at_element(e) + " is not a two-sided identity");
      }
    }
  }

  validate_order(generators);
}

void FiniteSemigroup::validate_order(const std::vector<Element>& generators) const {
  if (order_) {
    const OrderMatrix& le = *order_;
    if (le.size() != n_ * n_) raise(ErrorKind::InvalidSemigroup, "order matrix has wrong size");
    for (Element a = 0; a < n_; ++a) {
      if (!le[a * n_ + a]) raise(ErrorKind::InvalidSemigroup, "order is not reflexive");
      for (Element b = 0; b < n_; ++b) {
        if (a != b && le[a * n_ + b] && le[b * n_ + a]) {
          raise(ErrorKind::InvalidSemigroup, "order is not antisymmetric");
        }
        if (!le[a * n_ + b]) continue;
        for (Element c = 0; c < n_; ++c) {
          if (le[b * n_ + c] && !le[a * n_ + c]) {
            raise(ErrorKind::InvalidSemigroup, "order is not transitive");
          }
        }
      }
    }
    std::vector<Element> multipliers = generators;
    if (multipliers.empty()) {
      multipliers.resize(n_);
      std::iota(multipliers.begin(), multipliers.end(), Element{0});
    }
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        if (!le[a * n_ + b]) continue;
        for (Element c : multipliers) {
          if (!le[mul(a, c) * n_ + mul(b, c)] || !le[mul(c, a) * n_ + mul(c, b)]) {
            raise(ErrorKind::InvalidSemigroup, "order is not compatible with multiplication");
          }
        }
      }
  }
}

Element FiniteSemigroup::power(Element s, std::uint64_t k) const {
  if (k == 0) raise(ErrorKind::InvalidArgument, "semigroup powers start at 1");
  Element result = s;
  Element base = s;
  --k;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

bool FiniteSemigroup::leq(Element a, Element b) const {
  if (!order_) raise(ErrorKind::InequalityWithoutOrder, "semigroup carries no order");
  return (*order_)[a * n_ + b];
}

std::string FiniteSemigroup::label(Element e) const {
  if (!labels_.empty()) return labels_[e];
  return std::to_string(e);
}

bool FiniteSemigroup::is_commutative() const noexcept {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteSemigroup FiniteSemigroup::with_order(OrderMatrix order,
                                            const std::vector<Element>& generators) const {
  FiniteSemigroup out(n_, table_, labels_, std::move(order), identity_, true);
  out.validate_order(generators);
  return out;
}

FiniteSemigroup FiniteSemigroup::without_order() const {
  return FiniteSemigroup(n_, table_, labels_, std::nullopt, identity_, true);
}

FiniteSemigroup FiniteSemigroup::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n_) {
    raise(ErrorKind::InvalidSemigroup, "label count does not match element count");
  }
  return FiniteSemigroup(n_, table_, std::move(labels), order_, identity_, true);
}

FiniteSemigroup FiniteSemigroup::monoid_completion() const {
  if (identity_) return *this;
  for (Element e = 0; e < n_; ++e) {
    bool neutral = true;
    for (Element a = 0; a < n_ && neutral; ++a) neutral = mul(e, a) == a && mul(a, e) == a;
    if (neutral) return FiniteSemigroup(n_, table_, labels_, order_, e, true);
  }
  const std::size_t m = n_ + 1;
  const auto one = static_cast<Element>(n_);
  std::vector<Element> table(m * m);
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b) {
      if (a == one) table[a * m + b] = b;
      else if (b == one) table[a * m + b] = a;
      else table[a * m + b] = mul(a, b);
    }
  std::vector<std::string> labels = labels_;
  if (!labels.empty()) labels.push_back("1");
  std::optional<OrderMatrix> order;
  if (order_) {
    OrderMatrix le(m * m, false);
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) le[a * m + b] = (*order_)[a * n_ + b];
    le[one * m + one] = true;
    order = std::move(le);
  }
  return FiniteSemigroup(m, std::move(table), std::move(labels), std::move(order), one, true);
}

Element GeneratorMap::at(char letter) const {
  auto it = images.find(letter);
  if (it == images.end()) {
    raise(ErrorKind::UnboundLetter, std::string("letter '") + letter + "' has no image");
  }
  return it->second;
}

void GeneratorMap::validate_for(const FiniteSemigroup& s) const {
  for (const auto& [letter, e] : images) {
    if (e >= s.size()) {
      raise(ErrorKind::InvalidArgument,
            std::string("image of '") + letter + "' is not an element of the semigroup");
    }
  }
}

Element evaluate_word(const FiniteSemigroup& s, const GeneratorMap& gens,
                      std::string_view word) {
  if (word.empty()) {
    if (!s.identity()) raise(ErrorKind::InvalidArgument, "the empty word needs a monoid");
    return *s.identity();
  }
  Element acc = gens.at(word.front());
  for (std::size_t i = 1; i < word.size(); ++i) acc = s.mul(acc, gens.at(word[i]));
  return acc;
}

Element MonogenicData::cycle_power(std::int64_t exponent) const {
  const auto p = static_cast<std::int64_t>(period);
  std::int64_t r = (exponent - static_cast<std::int64_t>(index)) % p;
  if (r < 0) r += p;
  return cycle_elements[static_cast<std::size_t>(r)];
}

MonogenicData monogenic_data(const FiniteSemigroup& s, Element x) {
  if (x >= s.size()) raise(ErrorKind::InvalidArgument, "element out of range");
  // first_exponent[e] = least k with x^k = e, or 0 if not yet seen.
  std::vector<std::size_t> first_exponent(s.size(), 0);
  std::vector<Element> powers;
  Element current = x;
  std::size_t k = 1;
  while (first_exponent[current] == 0) {
    first_exponent[current] = k;
    powers.push_back(current);
    current = s.mul(current, x);
    ++k;
  }
  MonogenicData data;
  data.index = first_exponent[current];
  data.period = k - data.index;
  data.cycle_elements.assign(powers.begin() + static_cast<std::ptrdiff_t>(data.index - 1),
                             powers.end());
  return data;
}

Element idempotent_power(const FiniteSemigroup& s, Element x) {
  return monogenic_data(s, x).cycle_power(0);
}

Element omega_plus_k(const FiniteSemigroup& s, Element x, std::int64_t k) {
  return monogenic_data(s, x).cycle_power(k);
}

namespace {

__extension__ typedef unsigned __int128 Wide;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<Wide>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t stabilized_prime_residue(std::uint64_t p, std::uint64_t m) {
  if (m == 0) raise(ErrorKind::InvalidArgument, "modulus must be positive");
  // r_n = p^(n!) mod m, r_n = r_(n-1)^n. On the p'-part of m the residue is 1
  // once the multiplicative order divides n! (n >= m suffices); on the p-part
  // it is 0 once n! exceeds its exponent (n >= bit length of m suffices).
  std::size_t bits = 0;
  for (std::uint64_t v = p; v > 0; v >>= 1U) ++bits;
  const std::uint64_t steps = m + bits;
  std::uint64_t r = p % m;
  for (std::uint64_t n = 2; n <= steps; ++n) r = pow_mod(r, n, m);
  return r;
}

Element p_omega_power(const FiniteSemigroup& s, Element x, std::uint32_t p) {
  if (!is_prime(p)) raise(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  const MonogenicData data = monogenic_data(s, x);
  const std::uint64_t r = stabilized_prime_residue(p, data.period);
  return data.cycle_power(static_cast<std::int64_t>(r));
}

std::vector<std::vector<Element>> classes_of(const std::vector<std::size_t>& ids) {
  std::vector<std::vector<Element>> out;
  std::map<std::size_t, std::size_t> slot;
  for (Element e = 0; e < ids.size(); ++e) {
    auto [it, inserted] = slot.try_emplace(ids[e], out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(e);
  }
  return out;
}

FiniteSemigroup cyclic_group(std::size_t order) {
  if (order == 0) raise(ErrorKind::InvalidArgument, "group order must be positive");
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      table[a * order + b] = static_cast<Element>((a + b) % order);
  SemigroupOptions options;
  options.identity = 0;
  return FiniteSemigroup(order, std::move(table), std::move(options));
}

FiniteSemigroup monogenic_semigroup(std::size_t index, std::size_t period) {
  if (index == 0 || period == 0) raise(ErrorKind::InvalidArgument, "index and period must be positive");
  const std::size_t n = index + period - 1;
  // Element e stands for s^(e+1).
  auto reduce = [&](std::size_t exponent) {
    while (exponent >= index + period) exponent -= period;
    return exponent;
  };
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Element>(reduce(a + b + 2) - 1);
  SemigroupOptions options;
  for (std::size_t e = 0; e < n; ++e)
    options.labels.push_back(e == 0 ? std::string("s") : "s^" + std::to_string(e + 1));
  options.generators = {0};
  return FiniteSemigroup(n, std::move(table), std::move(options));
}

FiniteSemigroup rectangular_band(std::size_t rows, std::size_t cols) {
  const std::size_t n = rows * cols;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Element>((a / cols) * cols + (b % cols));
  return FiniteSemigroup(n, std::move(table));
}

FiniteSemigroup full_transformation_monoid(std::size_t degree) {
  if (degree == 0 || degree > 5) raise(ErrorKind::InvalidArgument, "degree must be in 1..5");
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> f(degree, 0);
  for (;;) {
    maps.push_back(f);
    std::size_t i = degree;
    while (i > 0 && f[i - 1] == degree - 1) f[--i] = 0;
    if (i == 0) break;
    ++f[i - 1];
  }
  std::vector<std::size_t> identity(degree);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  auto id_it = std::find(maps.begin(), maps.end(), identity);
  std::rotate(maps.begin(), id_it, id_it + 1);

  const std::size_t n = maps.size();
  std::map<std::vector<std::size_t>, Element> index;
  for (Element e = 0; e < n; ++e) index.emplace(maps[e], e);
  std::vector<Element> table(n * n);
  std::vector<std::size_t> composed(degree);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      for (std::size_t q = 0; q < degree; ++q) composed[q] = maps[b][maps[a][q]];
      table[a * n + b] = index.at(composed);
    }
  SemigroupOptions options;
  options.identity = 0;
  for (const auto& m : maps) {
    std::string label = "[";
    for (std::size_t q = 0; q < degree; ++q) label += std::to_string(m[q] + 1);
    options.labels.push_back(label + "]");
  }
  return FiniteSemigroup(n, std::move(table), std::move(options));
}

FiniteSemigroup direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      table[x * n + y] =
          static_cast<Element>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  SemigroupOptions options;
  if (a.identity() && b.identity()) {
    options.identity = static_cast<Element>(*a.identity() * nb + *b.identity());
  }
  if (a.has_labels() || b.has_labels()) {
    for (Element x = 0; x < n; ++x)
      options.labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
  }
  return FiniteSemigroup(n, std::move(table), std::move(options));
}

}  // namespace semired
