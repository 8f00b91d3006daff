#include "render.hpp"

#include <algorithm>
#include <sstream>

#include "semired/dfa.hpp"

namespace semired::cli {

namespace {

constexpr std::size_t kFiniteClassListing = 12;
constexpr std::size_t kInfiniteClassListing = 6;
constexpr std::size_t kClassWordLength = 40;

std::string bracket(const FiniteSemigroup& s, Element e) { return "[" + s.label(e) + "]"; }

std::string render_partition(const FiniteSemigroup& s, const std::vector<std::size_t>& ids) {
  std::string out;
  for (const auto& cls : classes_of(ids)) {
    out += " {";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i > 0) out += ", ";
      out += s.label(cls[i]);
    }
    out += "}";
  }
  return out;
}

}  // namespace

std::string render_table(const FiniteSemigroup& s) {
  std::size_t width = 1;
  for (Element e = 0; e < s.size(); ++e) width = std::max(width, s.label(e).size());
  std::ostringstream out;
  auto cell = [&](const std::string& text) { out << ' ' << text << std::string(width - text.size(), ' '); };
  cell("");
  out << " |";
  for (Element e = 0; e < s.size(); ++e) cell(s.label(e));
  out << '\n' << std::string((width + 1) * (s.size() + 1) + 2, '-') << '\n';
  for (Element a = 0; a < s.size(); ++a) {
    cell(s.label(a));
    out << " |";
    for (Element b = 0; b < s.size(); ++b) cell(s.label(s.mul(a, b)));
    out << '\n';
  }
  return out.str();
}

std::string render_order(const FiniteSemigroup& s) {
  std::ostringstream out;
  std::size_t pairs = 0;
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b)
      if (a != b && s.leq(a, b)) {
        out << bracket(s, a) << " <= " << bracket(s, b) << '\n';
        ++pairs;
      }
  if (pairs == 0) out << "(trivial order)\n";
  return out.str();
}

std::string render_green(const FiniteSemigroup& s) {
  const GreenClasses g = green_classes(s);
  return "R:" + render_partition(s, g.r) + "\nL:" + render_partition(s, g.l) + "\nJ:" + render_partition(s, g.j) +
         "\nH:" + render_partition(s, g.h) + "\n";
}

std::string render_classes(const SyntacticPresentation& sp) {
  std::ostringstream out;
  const FiniteSemigroup& s = sp.semigroup();
  for (Element e = 0; e < s.size(); ++e) {
    const Dfa language = class_language(sp, e);
    const bool finite = is_finite(language);
    const std::size_t shown = finite ? kFiniteClassListing : kInfiniteClassListing;
    const auto words = accepted_words(language, kClassWordLength, shown + 1);
    out << bracket(s, e) << " = {";
    for (std::size_t i = 0; i < std::min(shown, words.size()); ++i) out << (i > 0 ? ", " : "") << words[i];
    if (!finite || words.size() > shown) out << ", ...";
    out << "}" << (finite ? " (finite)" : "") << '\n';
  }
  return out.str();
}

std::string render_report(const VerificationReport& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const Check& c : report.checks) passed += c.pass ? 1 : 0;
  out << "section " << report.section << ": " << (report.pass() ? "PASS" : "FAIL") << " (" << passed << "/"
      << report.checks.size() << " checks)\n";
  for (const Check& c : report.checks) {
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ". " << c.description << '\n'
        << "         expected: " << c.expected << '\n'
        << "         computed: " << c.computed << '\n';
  }
  return out.str();
}

Json report_json(const VerificationReport& report, bool timing) {
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"description", c.description},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  }
  Json out = {{"section", report.section}, {"checks", checks}, {"pass", report.pass()}};
  if (timing) out["millis"] = report.millis;
  return out;
}

std::string render_assignment(const FiniteSemigroup& s, const GeneratorMap& g) {
  std::string out;
  for (const auto& [letter, e] : g.images) {
    if (!out.empty()) out += ", ";
    out += letter;
    out += " -> ";
    out += s.label(e);
  }
  return out;
}

Json witness_json(const Witness& w) {
  const FiniteSemigroup& s = w.semigroup;
  Json table = Json::array();
  for (Element a = 0; a < s.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < s.size(); ++b) row.push_back(s.mul(a, b));
    table.push_back(row);
  }
  Json assignment = Json::object();
  for (const auto& [letter, e] : w.assignment.images) assignment[std::string(1, letter)] = e;
  Json out = {{"semigroup", w.name},
              {"size", s.size()},
              {"table", table},
              {"assignment", assignment},
              {"lhs_value", w.lhs_value},
              {"rhs_value", w.rhs_value}};
  if (s.has_labels()) out["labels"] = s.labels();
  if (s.has_order()) {
    Json pairs = Json::array();
    for (Element a = 0; a < s.size(); ++a)
      for (Element b = 0; b < s.size(); ++b)
        if (a != b && s.leq(a, b)) pairs.push_back({a, b});
    out["order"] = pairs;
  }
  return out;
}

}  // namespace semired::cli
