#include <sstream>

#include "semired/error.hpp"
#include "semired/semigroup.hpp"

namespace semired {

std::string format_semigroup(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  std::ostringstream out;
  out << n;
  if (s.has_order()) out << " ordered";
  if (s.identity()) out << " monoid=" << *s.identity();
  out << '\n';
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (b > 0) out << ' ';
      out << s.mul(a, b);
    }
    out << '\n';
  }
  if (s.has_order()) {
    out << "order:\n";
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (a != b && s.leq(a, b)) out << a << "<=" << b << '\n';
  }
  return out.str();
}

namespace {

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  raise(ErrorKind::ParseError, "semigroup text, line " + std::to_string(line) + ": " + what);
}

Element parse_index(const std::string& token, std::size_t n, std::size_t line) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(token, &used);
  } catch (const std::exception&) {
    bad(line, "expected an element index, got '" + token + "'");
  }
  if (used != token.size()) bad(line, "expected an element index, got '" + token + "'");
  if (value >= n) bad(line, "element index " + token + " out of range");
  return static_cast<Element>(value);
}

}  // namespace

FiniteSemigroup parse_semigroup(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) bad(0, "empty input");
  std::istringstream header(line);
  std::string token;
  header >> token;
  std::size_t n = 0;
  try {
    n = std::stoul(token);
  } catch (const std::exception&) {
    bad(line_no, "expected element count");
  }
  if (n == 0) bad(line_no, "element count must be positive");
  bool ordered = false;
  std::optional<Element> identity;
  while (header >> token) {
    if (token == "ordered") {
      ordered = true;
    } else if (token.rfind("monoid=", 0) == 0) {
      identity = parse_index(token.substr(7), n, line_no);
    } else {
      bad(line_no, "unknown header token '" + token + "'");
    }
  }

  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    if (!next_line()) bad(line_no, "table ended early");
    std::istringstream cells(line);
    std::size_t count = 0;
    while (cells >> token) {
      table.push_back(parse_index(token, n, line_no));
      ++count;
    }
    if (count != n) bad(line_no, "row has " + std::to_string(count) + " entries");
  }

  SemigroupOptions options;
  options.identity = identity;
  if (next_line()) {
    if (line.find("order:") == std::string::npos) bad(line_no, "expected 'order:'");
    if (!ordered) bad(line_no, "order block without 'ordered' in header");
    OrderMatrix le(n * n, false);
    for (Element a = 0; a < n; ++a) le[a * n + a] = true;
    std::string rest = line.substr(line.find("order:") + 6);
    do {
      std::istringstream pairs(rest);
      while (pairs >> token) {
        const auto sep = token.find("<=");
        if (sep == std::string::npos) bad(line_no, "expected i<=j, got '" + token + "'");
        const Element a = parse_index(token.substr(0, sep), n, line_no);
        const Element b = parse_index(token.substr(sep + 2), n, line_no);
        le[a * n + b] = true;
      }
      if (!next_line()) break;
      rest = line;
    } while (true);
    options.order = std::move(le);
  } else if (ordered) {
    // A header-only "ordered" flag means the trivial (equality) order.
    OrderMatrix le(n * n, false);
    for (Element a = 0; a < n; ++a) le[a * n + a] = true;
    options.order = std::move(le);
  }
  return FiniteSemigroup(n, std::move(table), std::move(options));
}

}  // namespace semired
