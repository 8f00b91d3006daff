#ifndef SEMIRED_SEMIGROUP_HPP_
#define SEMIRED_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semired {

using Element = std::uint32_t;

// Row-major n x n relation; leq[a * n + b] is true iff a <= b.
using OrderMatrix = std::vector<bool>;

struct SemigroupOptions {
  std::vector<std::string> labels;
  std::optional<OrderMatrix> order;
  std::optional<Element> identity;
  // When non-empty, associativity and order stability are verified with
  // Light's test against these generators instead of all n^3 triples. The
  // generators must generate the semigroup; this is checked.
  std::vector<Element> generators;
};

// A finite semigroup given by its Cayley table, optionally ordered and
// optionally carrying a distinguished identity. Immutable once built; the
// constructor rejects tables that are not associative, orders that are not
// stable partial orders, and identities that are not two-sided neutral.
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::size_t n, std::vector<Element> table,
                  SemigroupOptions options = {});

  std::size_t size() const noexcept { return n_; }

  Element mul(Element a, Element b) const noexcept { return table_[a * n_ + b]; }

  // s^k for k >= 1, in O(log k) multiplications.
  Element power(Element s, std::uint64_t k) const;

  std::span<const Element> table() const noexcept { return table_; }

  bool has_order() const noexcept { return order_.has_value(); }
  bool leq(Element a, Element b) const;
  const std::optional<OrderMatrix>& order() const noexcept { return order_; }

  const std::optional<Element>& identity() const noexcept { return identity_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Display string for an element: its label when present, else its index.
  std::string label(Element e) const;

  bool is_idempotent(Element e) const noexcept { return mul(e, e) == e; }
  bool is_commutative() const noexcept;

  // Attaches an order after checking it is a partial order compatible with
  // multiplication (against `generators` when given, else all elements).
  FiniteSemigroup with_order(OrderMatrix order, const std::vector<Element>& generators = {}) const;
  FiniteSemigroup without_order() const;
  FiniteSemigroup with_labels(std::vector<std::string> labels) const;

  // S^1: returns *this (with identity recorded) when S already has a
  // two-sided identity, else adjoins a fresh identity as element n. An order,
  // when present, is extended with the new identity comparable only to itself.
  FiniteSemigroup monoid_completion() const;

  bool operator==(const FiniteSemigroup& other) const = default;

 private:
  FiniteSemigroup(std::size_t n, std::vector<Element> table,
                  std::vector<std::string> labels,
                  std::optional<OrderMatrix> order,
                  std::optional<Element> identity, bool trusted);

  void validate(const std::vector<Element>& generators) const;
  void validate_order(const std::vector<Element>& generators) const;

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
  std::optional<OrderMatrix> order_;
  std::optional<Element> identity_;
};

// Letter -> element assignment inducing a homomorphism from nonempty words.
struct GeneratorMap {
  std::map<char, Element> images;

  GeneratorMap() = default;
  GeneratorMap(std::initializer_list<std::pair<const char, Element>> init)
      : images(init) {}

  // Throws UnboundLetter if the letter has no image.
  Element at(char letter) const;
  bool contains(char letter) const { return images.count(letter) != 0; }

  // Checks that every image is an element of s.
  void validate_for(const FiniteSemigroup& s) const;
};

// Image of a word under the homomorphism; the empty word maps to the
// semigroup identity (InvalidArgument if there is none).
Element evaluate_word(const FiniteSemigroup& s, const GeneratorMap& gens,
                      std::string_view word);

struct MonogenicData {
  std::size_t index = 1;
  std::size_t period = 1;
  // s^index, ..., s^(index + period - 1).
  std::vector<Element> cycle_elements;

  // s^e for any e >= index, using only e mod period.
  Element cycle_power(std::int64_t exponent) const;
};

MonogenicData monogenic_data(const FiniteSemigroup& s, Element x);

// x^omega: the unique idempotent power of x.
Element idempotent_power(const FiniteSemigroup& s, Element x);

// x^(omega+k) for any integer k, realized inside the cycle of x.
Element omega_plus_k(const FiniteSemigroup& s, Element x, std::int64_t k);

// Residue of p^(n!) modulo m once it has stabilized in n.
std::uint64_t stabilized_prime_residue(std::uint64_t p, std::uint64_t m);

// x^(p^omega) for a prime p.
Element p_omega_power(const FiniteSemigroup& s, Element x, std::uint32_t p);

bool is_prime(std::uint64_t p) noexcept;

// Green's relations as class-id vectors: two elements are related iff their
// ids agree. Ids are numbered by first occurrence.
struct GreenClasses {
  std::vector<std::size_t> r;
  std::vector<std::size_t> l;
  std::vector<std::size_t> j;
  std::vector<std::size_t> h;

  bool r_equivalent(Element a, Element b) const { return r[a] == r[b]; }
  bool l_equivalent(Element a, Element b) const { return l[a] == l[b]; }
  bool j_equivalent(Element a, Element b) const { return j[a] == j[b]; }
  bool h_equivalent(Element a, Element b) const { return h[a] == h[b]; }
};

GreenClasses green_classes(const FiniteSemigroup& s);

// Groups the elements by class id, each class sorted, classes ordered by
// their least element.
std::vector<std::vector<Element>> classes_of(const std::vector<std::size_t>& ids);

// --- small standard semigroups -------------------------------------------

FiniteSemigroup cyclic_group(std::size_t order);
// Monogenic semigroup <s | s^(index+period) = s^index>.
FiniteSemigroup monogenic_semigroup(std::size_t index, std::size_t period);
FiniteSemigroup rectangular_band(std::size_t rows, std::size_t cols);
// Full transformation monoid on {0..degree-1}, composition left to right
// (x * y means apply x, then y). Element 0 is the identity map.
FiniteSemigroup full_transformation_monoid(std::size_t degree);
FiniteSemigroup direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b);

// --- text format ------------------------------------------------------------
//
//   n [ordered] [monoid=<idx>]
//   n rows of n space-separated indices
//   [order:
//    i<=j lines, one strict pair per line]

std::string format_semigroup(const FiniteSemigroup& s);
FiniteSemigroup parse_semigroup(std::string_view text);

}  // namespace semired

#endif  // SEMIRED_SEMIGROUP_HPP_
