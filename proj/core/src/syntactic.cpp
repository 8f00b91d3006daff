#include "semired/syntactic.hpp"

#include <map>
#include <numeric>

#include "semired/error.hpp"

namespace semired {

Element SyntacticPresentation::classof(std::string_view word) const {
  Element e = monoid_identity();
  for (char c : word) e = right_multiply(e, dfa_.letter_index(c));
  return e;
}

SyntacticPresentation syntactic_semigroup(const Dfa& input, std::size_t max_elements) {
  Dfa dfa = input.minimal ? input : minimize(input);
  const std::size_t k = dfa.alphabet.size();
  const std::size_t q = dfa.states;

  std::vector<Transformation> elements;
  std::vector<std::string> reps;
  std::map<Transformation, Element> index;
  auto intern = [&](Transformation t, std::string rep) {
    auto [it, inserted] = index.try_emplace(t, static_cast<Element>(elements.size()));
    if (inserted) {
      if (elements.size() >= max_elements) {
        raise(ErrorKind::SizeTooLarge,
              "syntactic semigroup exceeds " + std::to_string(max_elements) + " elements");
      }
      elements.push_back(std::move(t));
      reps.push_back(std::move(rep));
    }
    return it->second;
  };

  std::vector<Element> letter_elements(k);
  for (std::size_t a = 0; a < k; ++a) {
    Transformation t(q);
    for (State s = 0; s < q; ++s) t[s] = dfa.next_index(s, a);
    letter_elements[a] = intern(std::move(t), std::string(1, dfa.alphabet[a]));
  }
  // Breadth-first closure under right multiplication by letters; discovery
  // order is the shortlex order of least representatives.
  std::vector<Element> right;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    for (std::size_t a = 0; a < k; ++a) {
      Transformation t(q);
      for (State s = 0; s < q; ++s) t[s] = dfa.next_index(elements[e][s], a);
      right.push_back(intern(std::move(t), reps[e] + dfa.alphabet[a]));
    }
  }
  const std::size_t n = elements.size();

  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element acc = x;
      for (char c : reps[y]) acc = right[acc * k + dfa.letter_index(c)];
      table[x * n + y] = acc;
    }

  Transformation identity(q);
  std::iota(identity.begin(), identity.end(), State{0});
  const auto found = index.find(identity);

  SemigroupOptions options;
  options.labels = reps;
  options.generators = letter_elements;
  if (found != index.end()) options.identity = found->second;
  FiniteSemigroup semigroup(n, table, options);

  std::vector<Transformation> monoid_elements = elements;
  std::vector<std::string> monoid_labels = reps;
  std::vector<Element> monoid_right = right;
  std::vector<Element> monoid_table = table;
  Element one = 0;
  std::size_t m = n;
  if (found != index.end()) {
    one = found->second;
  } else {
    one = static_cast<Element>(n);
    m = n + 1;
    monoid_table.assign(m * m, 0);
    for (Element x = 0; x < m; ++x)
      for (Element y = 0; y < m; ++y)
        monoid_table[x * m + y] = x == one ? y : (y == one ? x : table[x * n + y]);
    monoid_elements.push_back(identity);
    monoid_labels.push_back("1");
    for (std::size_t a = 0; a < k; ++a) monoid_right.push_back(letter_elements[a]);
  }
  SemigroupOptions monoid_options;
  monoid_options.labels = monoid_labels;
  monoid_options.identity = one;
  monoid_options.generators = letter_elements;
  if (m != n) monoid_options.generators.push_back(one);
  FiniteSemigroup monoid(m, std::move(monoid_table), std::move(monoid_options));

  SyntacticPresentation sp(std::move(dfa), std::move(semigroup), std::move(monoid));
  for (std::size_t a = 0; a < k; ++a) sp.generators_.images[sp.dfa_.alphabet[a]] = letter_elements[a];
  sp.transformations_ = std::move(monoid_elements);
  sp.representatives_ = std::move(monoid_labels);
  sp.right_ = std::move(monoid_right);
  return sp;
}

SyntacticPresentation syntactic_semigroup(std::string_view regex, std::string_view alphabet) {
  return syntactic_semigroup(compile_min_dfa(regex, alphabet));
}

namespace {

// included[p * q + r] iff the language accepted from p is contained in the
// language accepted from r (greatest fixed point).
std::vector<bool> state_inclusion(const Dfa& dfa) {
  const std::size_t q = dfa.states;
  const std::size_t k = dfa.alphabet.size();
  std::vector<bool> included(q * q);
  for (State p = 0; p < q; ++p)
    for (State r = 0; r < q; ++r) included[p * q + r] = !dfa.accepting[p] || dfa.accepting[r];
  bool changed = true;
  while (changed) {
    changed = false;
    for (State p = 0; p < q; ++p)
      for (State r = 0; r < q; ++r) {
        if (!included[p * q + r]) continue;
        for (std::size_t a = 0; a < k; ++a) {
          if (!included[dfa.next_index(p, a) * q + dfa.next_index(r, a)]) {
            included[p * q + r] = false;
            changed = true;
            break;
          }
        }
      }
  }
  return included;
}

}  // namespace

OrderMatrix syntactic_order_monoid(const SyntacticPresentation& sp) {
  const std::size_t m = sp.monoid().size();
  const std::size_t q = sp.dfa().states;
  const auto included = state_inclusion(sp.dfa());
  // Every state of a minimal DFA is reachable, so left contexts range over
  // all states.
  OrderMatrix le(m * m);
  for (Element u = 0; u < m; ++u)
    for (Element v = 0; v < m; ++v) {
      const Transformation& tu = sp.transformation(u);
      const Transformation& tv = sp.transformation(v);
      bool below = true;
      for (State s = 0; s < q && below; ++s) below = included[tu[s] * q + tv[s]];
      le[u * m + v] = below;
    }
  return le;
}

OrderMatrix syntactic_order(const SyntacticPresentation& sp) {
  const std::size_t n = sp.semigroup().size();
  const std::size_t m = sp.monoid().size();
  const OrderMatrix full = syntactic_order_monoid(sp);
  OrderMatrix le(n * n);
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) le[u * n + v] = full[u * m + v];
  return le;
}

FiniteSemigroup ordered_syntactic_semigroup(const SyntacticPresentation& sp) {
  std::vector<Element> gens;
  for (const auto& [letter, e] : sp.generators().images) gens.push_back(e);
  return sp.semigroup().with_order(syntactic_order(sp), gens);
}

FiniteSemigroup ordered_syntactic_monoid(const SyntacticPresentation& sp) {
  std::vector<Element> gens;
  for (const auto& [letter, e] : sp.generators().images) gens.push_back(e);
  return sp.monoid().with_order(syntactic_order_monoid(sp), gens);
}

Dfa class_language(const SyntacticPresentation& sp, Element e) {
  const std::size_t n = sp.semigroup().size();
  if (e >= n) {
    raise(ErrorKind::ElementNotWordImage,
          "element " + std::to_string(e) + " is not the image of a nonempty word");
  }
  const std::size_t k = sp.alphabet().size();
  Dfa d;
  d.alphabet = sp.alphabet();
  d.states = n + 1;
  d.initial = 0;
  d.accepting.assign(n + 1, false);
  d.accepting[e + 1] = true;
  d.trans.resize((n + 1) * k);
  for (std::size_t a = 0; a < k; ++a) {
    d.trans[a] = sp.generators().at(sp.alphabet()[a]) + 1;
    for (Element x = 0; x < n; ++x) d.trans[(x + 1) * k + a] = sp.right_multiply(x, a) + 1;
  }
  return minimize(d);
}

}  // namespace semired
