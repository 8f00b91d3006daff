#ifndef SEMIRED_SYNTACTIC_HPP_
#define SEMIRED_SYNTACTIC_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "semired/dfa.hpp"
#include "semired/semigroup.hpp"

namespace semired {

using Transformation = std::vector<State>;

constexpr std::size_t kDefaultSyntacticLimit = 100000;

// Transition semigroup of a minimal DFA: elements are the distinct state
// transformations induced by nonempty words, numbered in shortlex order of
// their least representative (which is also the element's label).
// x * y is "act by x, then by y".
class SyntacticPresentation {
 public:
  const Dfa& dfa() const noexcept { return dfa_; }
  const std::string& alphabet() const noexcept { return dfa_.alphabet; }

  const FiniteSemigroup& semigroup() const noexcept { return semigroup_; }
  const GeneratorMap& generators() const noexcept { return generators_; }

  // S^1 realized as the transition monoid: the identity transformation is
  // either already an element or appended as the last element, labelled "1".
  const FiniteSemigroup& monoid() const noexcept { return monoid_; }
  Element monoid_identity() const noexcept { return *monoid_.identity(); }

  const Transformation& transformation(Element e) const { return transformations_.at(e); }

  // Element of a nonempty word; the empty word yields monoid_identity().
  Element classof(std::string_view word) const;
  // Shortest, then lexicographically least, word of the class.
  const std::string& representative(Element e) const { return representatives_.at(e); }

  // Right Cayley graph of the monoid over the alphabet's letters.
  Element right_multiply(Element e, std::size_t letter_index) const {
    return right_[e * alphabet().size() + letter_index];
  }

 private:
  friend SyntacticPresentation syntactic_semigroup(const Dfa& dfa, std::size_t max_elements);

  SyntacticPresentation(Dfa dfa, FiniteSemigroup semigroup, FiniteSemigroup monoid)
      : dfa_(std::move(dfa)), semigroup_(std::move(semigroup)), monoid_(std::move(monoid)) {}

  Dfa dfa_;
  FiniteSemigroup semigroup_;
  FiniteSemigroup monoid_;
  GeneratorMap generators_;
  std::vector<Transformation> transformations_;
  std::vector<std::string> representatives_;
  std::vector<Element> right_;
};

// Minimizes first when the input is not flagged minimal. Throws SizeTooLarge
// past max_elements.
SyntacticPresentation syntactic_semigroup(const Dfa& dfa,
                                          std::size_t max_elements = kDefaultSyntacticLimit);
SyntacticPresentation syntactic_semigroup(std::string_view regex, std::string_view alphabet = {});

// [u] <= [v] iff every context (x, y) with x u y in L also has x v y in L.
// Returned over the monoid elements (the semigroup elements form a prefix).
OrderMatrix syntactic_order_monoid(const SyntacticPresentation& sp);
// Restriction to the semigroup elements.
OrderMatrix syntactic_order(const SyntacticPresentation& sp);

FiniteSemigroup ordered_syntactic_semigroup(const SyntacticPresentation& sp);
FiniteSemigroup ordered_syntactic_monoid(const SyntacticPresentation& sp);

// Nonempty words whose class is e, as a minimal DFA over the same alphabet.
Dfa class_language(const SyntacticPresentation& sp, Element e);

}  // namespace semired

#endif  // SEMIRED_SYNTACTIC_HPP_
