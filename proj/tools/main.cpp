// semired: syntactic semigroups, omega-term evaluation, identity checks over
// Ab/Com/G/J+/CR samples, J+ word solutions and the counterexample verifiers.
//
// Exit codes: 0 success (or identity holds / verification passes),
//             1 false verdict or failed verification,
//             2 usage or parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "render.hpp"
#include "semired/enumerate.hpp"
#include "semired/error.hpp"
#include "semired/eval.hpp"
#include "semired/reducibility.hpp"
#include "semired/syntactic.hpp"
#include "semired/term.hpp"
#include "semired/varieties.hpp"
#include "semired/verify.hpp"

namespace {

using namespace semired;
using cli::Json;

constexpr int kSuccess = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

// Letter map "x=a,y=bb": each letter goes to the class of a nonempty word.
// Without an explicit map, letters of the alphabet map to themselves and the
// remaining letters (in sorted order) to the alphabet letters in order.
GeneratorMap letter_map(const SyntacticPresentation& sp, const std::string& map_text, const std::string& letters) {
  GeneratorMap g;
  if (!map_text.empty()) {
    std::stringstream in(map_text);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq != 1 || item.size() < 3) raise(ErrorKind::ParseError, "map entries look like x=word, got '" + item + "'");
      g.images[item[0]] = sp.classof(item.substr(2));
    }
    return g;
  }
  std::size_t next = 0;
  for (char c : letters) {
    if (sp.alphabet().find(c) != std::string::npos) {
      g.images[c] = sp.classof(std::string(1, c));
    } else {
      if (next >= sp.alphabet().size()) raise(ErrorKind::UnboundLetter, std::string("no default image for '") + c + "'");
      g.images[c] = sp.classof(std::string(1, sp.alphabet()[next++]));
    }
  }
  return g;
}

std::string merged_alphabet(const Term& a, const Term& b) {
  std::string letters = a.alphabet() + b.alphabet();
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return letters;
}

void emit_json(const Json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) raise(ErrorKind::InvalidArgument, "cannot write " + path);
  out << doc.dump(2) << '\n';
}

// --- syn ----------------------------------------------------------------------

struct SynArgs {
  std::string regex;
  std::string alphabet;
  bool order = false;
  bool green = false;
  bool classes = false;
};

int run_syn(const SynArgs& args) {
  const SyntacticPresentation sp = syntactic_semigroup(args.regex, args.alphabet);
  const FiniteSemigroup& s = sp.semigroup();
  std::cout << "language: " << args.regex << '\n'
            << "alphabet: " << sp.alphabet() << '\n'
            << "minimal dfa states: " << sp.dfa().states << '\n'
            << "elements: " << s.size() << (s.identity() ? " (monoid)" : "") << '\n'
            << "table:\n"
            << cli::render_table(s);
  if (args.order) std::cout << "order:\n" << cli::render_order(ordered_syntactic_semigroup(sp));
  if (args.green) std::cout << "green:\n" << cli::render_green(s);
  if (args.classes) std::cout << "classes:\n" << cli::render_classes(sp);
  return kSuccess;
}

// --- eval ---------------------------------------------------------------------

struct EvalArgs {
  std::string regex;
  std::string alphabet;
  std::string term;
  std::string map;
};

int run_eval(const EvalArgs& args) {
  const SyntacticPresentation sp = syntactic_semigroup(args.regex, args.alphabet);
  const Term t = parse_term(args.term);
  const GeneratorMap g = letter_map(sp, args.map, t.alphabet());
  const Element e = eval_term(sp.semigroup(), g, t);
  std::cout << t.to_string() << " = [" << sp.semigroup().label(e) << "]   (" << cli::render_assignment(sp.semigroup(), g)
            << ")\n";
  return kSuccess;
}

// --- check --------------------------------------------------------------------

struct CheckArgs {
  std::string variety;
  std::string lhs;
  std::string rhs;
  bool leq = false;
  bool json = false;
};

int run_check(const CheckArgs& args) {
  const Variety variety = Variety::parse(args.variety);
  if (args.leq && variety.kind != VarietyKind::Jplus) {
    raise(ErrorKind::ParseError, "--leq is only meaningful with --variety jplus");
  }
  const Identity id{parse_term(args.lhs), parse_term(args.rhs), args.leq};
  const Verdict verdict = check_identity(variety, id);
  const std::string relation = args.leq ? "<=" : "=";
  if (args.json) {
    Json doc = {{"variety", variety.name()},
                {"lhs", id.lhs.to_string()},
                {"rhs", id.rhs.to_string()},
                {"relation", relation},
                {"verdict", verdict.holds}};
    if (verdict.witness) doc["witness"] = cli::witness_json(*verdict.witness);
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << variety.name() << " |= " << id.lhs.to_string() << ' ' << relation << ' ' << id.rhs.to_string()
              << ": " << (verdict.holds ? "true" : "false") << '\n';
    if (verdict.witness) {
      const Witness& w = *verdict.witness;
      std::cout << "witness: " << w.name << " (" << w.semigroup.size() << " elements)\n"
                << "assignment: " << cli::render_assignment(w.semigroup, w.assignment) << '\n'
                << "lhs = " << w.semigroup.label(w.lhs_value) << ", rhs = " << w.semigroup.label(w.rhs_value) << '\n';
    } else if (!verdict.holds) {
      std::cout << "witness: none found in the sample\n";
    }
  }
  return verdict.holds ? kSuccess : kFalse;
}

// --- reduce jplus ---------------------------------------------------------------

struct ReduceArgs {
  std::string regex;
  std::string alphabet;
  std::string u;
  std::string v;
  std::string map;
};

int run_reduce_jplus(const ReduceArgs& args) {
  const SyntacticPresentation sp = syntactic_semigroup(args.regex, args.alphabet);
  const Term u = parse_term(args.u);
  const Term v = parse_term(args.v);
  FiniteSemigroup ordered = ordered_syntactic_semigroup(sp);
  GeneratorMap gens = letter_map(sp, args.map, merged_alphabet(u, v));
  const Element s_value = eval_term(ordered, gens, u);
  const Element t_value = eval_term(ordered, gens, v);
  const SolutionTriple triple{std::move(ordered), s_value, t_value, std::move(gens), SolutionMode::Inequality};
  const WordPair words = jplus_word_solution(triple, u, v);
  const FiniteSemigroup& s = triple.semigroup;
  std::cout << "triple: s = [" << s.label(triple.s) << "], t = [" << s.label(triple.t) << "]   ("
            << cli::render_assignment(s, triple.gens) << ")\n"
            << "u' = " << (words.u.empty() ? "1" : words.u) << '\n'
            << "v' = " << (words.v.empty() ? "1" : words.v) << '\n'
            << "u' is a scattered subword of v': " << (scattered_subword(words.u, words.v) ? "true" : "false")
            << '\n';
  return kSuccess;
}

// --- enum ---------------------------------------------------------------------

struct EnumArgs {
  std::size_t order = 0;
  std::string identity;
  bool large = false;
  bool count_only = false;
};

int run_enum(const EnumArgs& args) {
  std::optional<Identity> filter;
  if (!args.identity.empty()) filter = parse_identity(args.identity);
  if (filter && filter->inequality) raise(ErrorKind::ParseError, "enum filters take equations, not inequalities");
  EnumerationOptions options;
  options.allow_order_five = args.large;
  std::size_t count = 0;
  for_each_semigroup(
      args.order,
      [&](const FiniteSemigroup& s) {
        if (filter && !satisfies_identity(s, *filter)) return;
        ++count;
        if (!args.count_only) std::cout << format_semigroup(s) << '\n';
      },
      options);
  std::cout << "# " << count << " semigroup" << (count == 1 ? "" : "s") << " of order " << args.order
            << " up to isomorphism" << (filter ? " satisfying " + filter->lhs.to_string() + " = " + filter->rhs.to_string() : "")
            << '\n';
  return kSuccess;
}

// --- verify-paper ---------------------------------------------------------------

struct VerifyArgs {
  std::string section = "all";
  std::size_t cr_bound = 4;
  std::optional<std::string> json;
  bool timing = false;
};

int run_verify(const VerifyArgs& args) {
  std::vector<VerificationReport> reports;
  if (args.section == "4" || args.section == "all") reports.push_back(verify_com_counterexample());
  if (args.section == "5" || args.section == "all") reports.push_back(verify_groups_counterexample());
  if (args.section == "6" || args.section == "all") {
    reports.push_back(verify_cr_counterexample(kCompletelyRegularLanguage, args.cr_bound));
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();

  const bool json_to_stdout = args.json && (args.json->empty() || *args.json == "-");
  if (!json_to_stdout) {
    for (const auto& r : reports) std::cout << cli::render_report(r);
    std::cout << (pass ? "all checks passed" : "verification FAILED") << '\n';
  }
  if (args.json) {
    Json doc;
    if (reports.size() == 1) {
      doc = cli::report_json(reports.front(), args.timing);
    } else {
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(cli::report_json(r, args.timing));
      doc = {{"section", "all"}, {"reports", list}, {"pass", pass}};
    }
    emit_json(doc, *args.json);
  }
  return pass ? kSuccess : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semired: finite semigroups, syntactic monoids and omega-term reducibility"};
  app.require_subcommand(1);

  SynArgs syn;
  auto* syn_cmd = app.add_subcommand("syn", "Syntactic semigroup of a regular expression");
  syn_cmd->add_option("regex", syn.regex, "Regular expression (letters, |, *, +, parentheses)")->required();
  syn_cmd->add_option("--alphabet", syn.alphabet, "Alphabet (default: letters of the expression)");
  syn_cmd->add_flag("--order", syn.order, "Print the syntactic order");
  syn_cmd->add_flag("--green", syn.green, "Print Green's classes");
  syn_cmd->add_flag("--classes", syn.classes, "Print the words of each class");

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term in a syntactic semigroup");
  eval_cmd->add_option("--regex", ev.regex, "Regular expression")->required();
  eval_cmd->add_option("--term", ev.term, "Term, e.g. (x^2y)^(w-1)x")->required();
  eval_cmd->add_option("--map", ev.map, "Letter images, e.g. x=a,y=b");
  eval_cmd->add_option("--alphabet", ev.alphabet, "Alphabet (default: letters of the expression)");

  CheckArgs chk;
  auto* check_cmd = app.add_subcommand("check", "Decide an identity over a variety");
  check_cmd->add_option("--variety", chk.variety, "ab | com | g | jplus | cr:N")->required();
  check_cmd->add_option("--lhs", chk.lhs, "Left-hand term")->required();
  check_cmd->add_option("--rhs", chk.rhs, "Right-hand term")->required();
  check_cmd->add_flag("--leq", chk.leq, "Check lhs <= rhs (jplus only)");
  check_cmd->add_flag("--json", chk.json, "Emit one JSON document");

  ReduceArgs red;
  auto* reduce_cmd = app.add_subcommand("reduce", "Word solutions from omega-term solutions");
  reduce_cmd->require_subcommand(1);
  auto* jplus_cmd = reduce_cmd->add_subcommand("jplus", "J+ word solution of u <= v");
  jplus_cmd->add_option("--regex", red.regex, "Regular expression defining the ordered syntactic semigroup")
      ->required();
  jplus_cmd->add_option("--u", red.u, "Lower term")->required();
  jplus_cmd->add_option("--v", red.v, "Upper term")->required();
  jplus_cmd->add_option("--map", red.map, "Letter images, e.g. x=a,y=b");
  jplus_cmd->add_option("--alphabet", red.alphabet, "Alphabet (default: letters of the expression)");

  EnumArgs en;
  auto* enum_cmd = app.add_subcommand("enum", "Semigroups of order N up to isomorphism");
  enum_cmd->add_option("N", en.order, "Order (1..4, or 5 with --large)")->required()->check(CLI::Range(1, 5));
  enum_cmd->add_option("--identity", en.identity, "Keep those satisfying an identity, e.g. x^(w+1)=x");
  enum_cmd->add_flag("--large", en.large, "Allow order 5");
  enum_cmd->add_flag("--count", en.count_only, "Only print the count");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the counterexample verifiers");
  verify_cmd->add_option("--section", ver.section, "4 | 5 | 6 | all")
      ->check(CLI::IsMember({"4", "5", "6", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--cr-bound", ver.cr_bound, "Largest order of the completely regular sample")
      ->check(CLI::IsMember({4, 5}))
      ->capture_default_str();
  verify_cmd->add_option("--json", ver.json, "Write the JSON report to FILE (stdout when omitted or -)")
      ->expected(0, 1);
  verify_cmd->add_flag("--timing", ver.timing, "Include wall-clock milliseconds in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*syn_cmd) return run_syn(syn);
    if (*eval_cmd) return run_eval(ev);
    if (*check_cmd) return run_check(chk);
    if (*jplus_cmd) return run_reduce_jplus(red);
    if (*enum_cmd) return run_enum(en);
    if (*verify_cmd) return run_verify(ver);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::EmptyAlphabet:
      case ErrorKind::AlphabetMismatch:
      case ErrorKind::UnboundLetter:
      case ErrorKind::InvalidArgument:
      case ErrorKind::InequalityWithoutOrder:
      case ErrorKind::SizeTooLarge:
        return kUsage;
      default:
        return kFalse;
    }
  }
  return kUsage;
}
