#include "semired/regex.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "semired/error.hpp"

namespace semired {

Regex Regex::epsilon() { return Regex(std::make_shared<const Node>(Node{Kind::Epsilon, 0, {}})); }

Regex Regex::letter(char c) { return Regex(std::make_shared<const Node>(Node{Kind::Letter, c, {}})); }

Regex Regex::alt(Regex a, Regex b) {
  return Regex(std::make_shared<const Node>(Node{Kind::Union, 0, {std::move(a), std::move(b)}}));
}

Regex Regex::concat(Regex a, Regex b) {
  return Regex(std::make_shared<const Node>(Node{Kind::Concat, 0, {std::move(a), std::move(b)}}));
}

Regex Regex::star(Regex a) { return Regex(std::make_shared<const Node>(Node{Kind::Star, 0, {std::move(a)}})); }

Regex Regex::plus(Regex a) { return Regex(std::make_shared<const Node>(Node{Kind::Plus, 0, {std::move(a)}})); }

std::string Regex::alphabet() const {
  std::set<char> letters;
  std::vector<const Regex*> stack{this};
  while (!stack.empty()) {
    const Regex* r = stack.back();
    stack.pop_back();
    if (r->kind() == Kind::Letter) letters.insert(r->symbol());
    for (const Regex& c : r->node_->children) stack.push_back(&c);
  }
  return {letters.begin(), letters.end()};
}

std::string Regex::to_string() const {
  switch (kind()) {
    case Kind::Epsilon: return "()";
    case Kind::Letter: return std::string(1, symbol());
    case Kind::Union: return "(" + left().to_string() + "|" + right().to_string() + ")";
    case Kind::Concat: return left().to_string() + right().to_string();
    case Kind::Star:
    case Kind::Plus: {
      const std::string inner = left().to_string();
      const bool atomic = left().kind() == Kind::Letter || left().kind() == Kind::Union ||
                          left().kind() == Kind::Epsilon;
      return (atomic ? inner : "(" + inner + ")") + (kind() == Kind::Star ? "*" : "+");
    }
  }
  return {};
}

namespace {

class RegexParser {
 public:
  explicit RegexParser(std::string_view text) : text_(text) {}

  Regex parse() {
    Regex r = parse_union();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(ErrorKind::ParseError, "regex at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Regex parse_union() {
    Regex r = parse_concat();
    while (peek('|')) {
      ++pos_;
      r = Regex::alt(r, parse_concat());
    }
    return r;
  }

  bool at_atom_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  Regex parse_concat() {
    if (!at_atom_start()) {
      skip_space();
      // Empty alternative, e.g. "(|a)".
      if (pos_ >= text_.size() || text_[pos_] == '|' || text_[pos_] == ')') return Regex::epsilon();
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    Regex r = parse_postfix();
    while (at_atom_start()) r = Regex::concat(r, parse_postfix());
    return r;
  }

  Regex parse_postfix() {
    Regex r = parse_atom();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        r = Regex::star(r);
      } else if (peek('+')) {
        ++pos_;
        r = Regex::plus(r);
      } else {
        return r;
      }
    }
  }

  Regex parse_atom() {
    skip_space();
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      if (peek(')')) {
        ++pos_;
        return Regex::epsilon();
      }
      Regex r = parse_union();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return r;
    }
    ++pos_;
    return Regex::letter(c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Regex parse_regex(std::string_view text) { return RegexParser(text).parse(); }

}  // namespace semired
