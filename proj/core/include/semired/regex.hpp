#ifndef SEMIRED_REGEX_HPP_
#define SEMIRED_REGEX_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace semired {

// Regular expression AST. Concrete syntax: single-character letters
// (ASCII letters and digits), juxtaposition for concatenation, `|`, postfix
// `*` and `+`, parentheses; `()` denotes the empty word. Whitespace is
// ignored.
class Regex {
 public:
  enum class Kind { Epsilon, Letter, Union, Concat, Star, Plus };

  static Regex epsilon();
  static Regex letter(char c);
  static Regex alt(Regex a, Regex b);
  static Regex concat(Regex a, Regex b);
  static Regex star(Regex a);
  static Regex plus(Regex a);

  Kind kind() const noexcept { return node_->kind; }
  char symbol() const noexcept { return node_->symbol; }
  const Regex& left() const { return node_->children.at(0); }
  const Regex& right() const { return node_->children.at(1); }

  // Sorted, duplicate-free letters occurring in the expression.
  std::string alphabet() const;
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    char symbol = 0;
    std::vector<Regex> children;
  };
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Throws ParseError with the offending position.
Regex parse_regex(std::string_view text);

}  // namespace semired

#endif  // SEMIRED_REGEX_HPP_
