#include "semired/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "semired/dfa.hpp"
#include "semired/error.hpp"
#include "semired/eval.hpp"
#include "semired/factors.hpp"
#include "semired/syntactic.hpp"
#include "semired/varieties.hpp"

namespace semired {

bool VerificationReport::pass() const {
  if (checks.empty()) return false;
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

// Runs checks in order; a check that throws is recorded as failed with the
// error as its computed value, and later checks still run.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string section)
      : start_(std::chrono::steady_clock::now()) {
    report_.section = std::move(section);
  }

  // body fills `computed` and returns the pass flag.
  void check(std::string name, std::string description, std::string expected,
             const std::function<bool(std::string&)>& body) {
    Check c{std::move(name), std::move(description), std::move(expected), {}, false};
    try {
      c.pass = body(c.computed);
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
      c.pass = false;
    }
    report_.checks.push_back(std::move(c));
  }

  VerificationReport finish() {
    report_.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  std::chrono::steady_clock::time_point start_;
};

// x -> [a], y -> [b].
GeneratorMap letters_to_classes(const SyntacticPresentation& sp) {
  return GeneratorMap{{'x', sp.classof("a")}, {'y', sp.classof("b")}};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string element(const SyntacticPresentation& sp, Element e) { return "[" + sp.semigroup().label(e) + "]"; }

bool same_language(const SyntacticPresentation& sp, Element e, std::string_view regex, std::string& computed) {
  const bool equal = languages_equal(class_language(sp, e), compile_min_dfa(regex, sp.alphabet()));
  computed += element(sp, e) + (equal ? " = " : " != ") + std::string(regex);
  return equal;
}

// Parikh vectors (|w|_a, |w|_b) of a class language up to length 30, checked
// to lie on one arithmetic progression c + k d, k = 0, 1, 2, ...
struct Progression {
  std::int64_t c[2];
  std::int64_t d[2];
};

std::optional<Progression> parikh_progression(const Dfa& language) {
  std::set<std::pair<std::int64_t, std::int64_t>> vectors;
  for (const std::string& w : accepted_words(language, 30)) {
    const auto counts = letter_counts(w, "ab");
    vectors.emplace(static_cast<std::int64_t>(counts[0]), static_cast<std::int64_t>(counts[1]));
  }
  if (vectors.size() < 3) return std::nullopt;
  std::vector<std::pair<std::int64_t, std::int64_t>> sorted(vectors.begin(), vectors.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first + a.second, a) < std::make_pair(b.first + b.second, b);
  });
  Progression p{{sorted[0].first, sorted[0].second},
                {sorted[1].first - sorted[0].first, sorted[1].second - sorted[0].second}};
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const auto i = static_cast<std::int64_t>(k);
    if (sorted[k].first != p.c[0] + i * p.d[0] || sorted[k].second != p.c[1] + i * p.d[1]) return std::nullopt;
  }
  return p;
}

std::string affine(std::int64_t slope, const char* var, std::int64_t intercept) {
  std::ostringstream out;
  out << slope << var << (intercept < 0 ? " - " : " + ") << (intercept < 0 ? -intercept : intercept);
  return out.str();
}

}  // namespace

VerificationReport verify_com_counterexample(std::string_view regex) {
  ReportBuilder r("4");
  std::optional<SyntacticPresentation> sp;
  r.check("a", "syntactic semigroup of " + std::string(regex) + " over {a,b}", "built",
          [&](std::string& out) {
            sp = syntactic_semigroup(regex, "ab");
            out = "built, " + std::to_string(sp->semigroup().size()) + " elements";
            return true;
          });
  if (!sp) return r.finish();
  const FiniteSemigroup& S = sp->semigroup();
  const Element s = sp->classof("babb");
  const Element t = sp->classof("aaba");

  r.check("b", "class languages of s = [bab^2] and t = [a^2ba]",
          "[babb] = babb((abb)(abb))*; [aaba] = ((aab)(aab))*aaba", [&](std::string& out) {
            const bool ok_s = same_language(*sp, s, "babb((abb)(abb))*", out);
            out += "; ";
            const bool ok_t = same_language(*sp, t, "((aab)(aab))*aaba", out);
            return ok_s && ok_t;
          });

  r.check("c", "[ab^2]^(w-1) = [ab^2] and [a^2b]^(w-1) = [a^2b]", "[abb]^(w-1) = [abb]; [aab]^(w-1) = [aab]",
          [&](std::string& out) {
            const Element abb = sp->classof("abb");
            const Element aab = sp->classof("aab");
            const Element p = omega_plus_k(S, abb, -1);
            const Element q = omega_plus_k(S, aab, -1);
            out = "[abb]^(w-1) = " + element(*sp, p) + "; [aab]^(w-1) = " + element(*sp, q);
            return p == abb && q == aab;
          });

  r.check("d", "(y(xy^2)^(w-1), (x^2y)^(w-1)x) evaluates to (s, t) under x->[a], y->[b] and Com satisfies it",
          "(" + element(*sp, s) + ", " + element(*sp, t) + "), com: true", [&](std::string& out) {
            const GeneratorMap g = letters_to_classes(*sp);
            const Term u = parse_term("y(xy^2)^(w-1)");
            const Term v = parse_term("(x^2y)^(w-1)x");
            const Element eu = eval_term(S, g, u);
            const Element ev = eval_term(S, g, v);
            const bool com = com_satisfies(u, v);
            out = "(" + element(*sp, eu) + ", " + element(*sp, ev) + "), com: " + yes_no(com);
            return eu == s && ev == t && com;
          });

  r.check("e",
          "Parikh vectors of the classes of s and t are (2alpha+1, 4alpha+3) and (4beta+3, 2beta+1); "
          "equal Ab images force beta = 2alpha+1, alpha = 2beta+1",
          "unique integer solution alpha = beta = -1; no solution in N^2", [&](std::string& out) {
            const auto pu = parikh_progression(class_language(*sp, s));
            const auto pv = parikh_progression(class_language(*sp, t));
            if (!pu || !pv) {
              out = "class Parikh vectors are not a single arithmetic progression";
              return false;
            }
            out = "|u| = (" + affine(pu->d[0], "alpha", pu->c[0]) + ", " + affine(pu->d[1], "alpha", pu->c[1]) +
                  "), |v| = (" + affine(pv->d[0], "beta", pv->c[0]) + ", " + affine(pv->d[1], "beta", pv->c[1]) +
                  "); ";
            // du alpha - dv beta = cv - cu, componentwise; Cramer's rule.
            const std::int64_t a11 = pu->d[0], a12 = -pv->d[0], b1 = pv->c[0] - pu->c[0];
            const std::int64_t a21 = pu->d[1], a22 = -pv->d[1], b2 = pv->c[1] - pu->c[1];
            const std::int64_t det = a11 * a22 - a12 * a21;
            if (det == 0) {
              out += "singular system";
              return false;
            }
            const std::int64_t na = b1 * a22 - a12 * b2;
            const std::int64_t nb = a11 * b2 - b1 * a21;
            if (na % det != 0 || nb % det != 0) {
              out += "no integer solution";
              return false;
            }
            const std::int64_t alpha = na / det;
            const std::int64_t beta = nb / det;
            const bool natural = alpha >= 0 && beta >= 0;
            out += "unique integer solution alpha = " + std::to_string(alpha) + ", beta = " + std::to_string(beta) +
                   (natural ? "; solution in N^2" : "; no solution in N^2");
            return alpha == -1 && beta == -1 && !natural;
          });
  return r.finish();
}

VerificationReport verify_groups_counterexample(std::string_view regex) {
  ReportBuilder r("5");
  std::optional<SyntacticPresentation> sp;
  r.check("a", "syntactic semigroup of " + std::string(regex) + " over {a,b}", "built", [&](std::string& out) {
    sp = syntactic_semigroup(regex, "ab");
    out = "built, " + std::to_string(sp->semigroup().size()) + " elements";
    return true;
  });
  if (!sp) return r.finish();
  const FiniteSemigroup& S = sp->semigroup();
  const Element s = sp->classof("aaabaa");
  const Element t = sp->classof("a");

  r.check("b", "[a] = {a}, [a^4] = [a^3], [b^2] = [b]", "|[a]| = 1 (words up to length 6); [aaaa] = [aaa]; [bb] = [b]",
          [&](std::string& out) {
            const auto words = accepted_words(class_language(*sp, t), 6);
            const bool singleton = words.size() == 1 && words.front() == "a" && is_finite(class_language(*sp, t));
            const bool a4 = sp->classof("aaaa") == sp->classof("aaa");
            const bool b2 = sp->classof("bb") == sp->classof("b");
            out = "|[a]| = " + std::to_string(words.size()) + " (words up to length 6); [aaaa] " +
                  (a4 ? "=" : "!=") + " [aaa]; [bb] " + (b2 ? "=" : "!=") + " [b]";
            return singleton && a4 && b2;
          });

  r.check("c", "preimage of s = [a^3ba^2] is a^3 a* b b* a^2", "[aaabaa] = aaa a* b b* aa", [&](std::string& out) {
    return same_language(*sp, s, "aaa a* b b* aa", out);
  });

  r.check("d", "x^(w-1) y^w x^2 evaluates to s, x to t, and G satisfies x^(w-1) y^w x^2 = x",
          "(" + element(*sp, s) + ", " + element(*sp, t) + "), g: true", [&](std::string& out) {
            const GeneratorMap g = letters_to_classes(*sp);
            const Term u = parse_term("x^(w-1)y^w x^2");
            const Term v = parse_term("x");
            const Element eu = eval_term(S, g, u);
            const Element ev = eval_term(S, g, v);
            const bool group = g_satisfies(u, v);
            out = "(" + element(*sp, eu) + ", " + element(*sp, ev) + "), g: " + yes_no(group);
            return eu == s && ev == t && group;
          });

  r.check("e", "x^3 is a suffix of x^w; xyx and yxy are factors of [x, _2 y]",
          "suffix: true; xyx: true; yxy: true", [&](std::string& out) {
            const FactorSummary omega = bounded_factors(parse_term("x^w"), 3);
            const FactorSummary comm = bounded_factors(iterated_commutator(2), 3);
            const bool suffix = omega.has_suffix("xxx");
            const bool xyx = comm.has_factor("xyx");
            const bool yxy = comm.has_factor("yxy");
            out = "suffix: " + yes_no(suffix) + "; xyx: " + yes_no(xyx) + "; yxy: " + yes_no(yxy);
            return suffix && xyx && yxy;
          });

  r.check("f", "no word of the preimage of s has the factor bab (yxy after renaming)",
          "preimage(s) & (a|b)*bab(a|b)* is empty", [&](std::string& out) {
            const Dfa meet = intersect(class_language(*sp, s), compile_min_dfa("(a|b)*bab(a|b)*", "ab"));
            const bool empty = is_empty(meet);
            out = empty ? "preimage(s) & (a|b)*bab(a|b)* is empty"
                        : "intersection contains " + accepted_words(meet, 64, 1).front();
            return empty;
          });
  return r.finish();
}

VerificationReport verify_cr_counterexample(std::string_view regex, std::size_t cr_bound) {
  ReportBuilder r("6");
  std::optional<SyntacticPresentation> sp;
  r.check("a", "syntactic semigroup of " + std::string(regex) + " over {a,b}", "built", [&](std::string& out) {
    sp = syntactic_semigroup(regex, "ab");
    out = "built, " + std::to_string(sp->semigroup().size()) + " elements";
    return true;
  });
  if (!sp) return r.finish();
  const FiniteSemigroup& S = sp->semigroup();
  const Element s = sp->classof("aabaabaababbaabaab");
  const Element t = sp->classof("aab");

  r.check("b", "[a^2b] = {a^2b}, [a^2b]^4 = [a^2b]^3, [ab^2]^2 = [ab^2]",
          "|[aab]| = 1; [aab]^4 = [aab]^3; [abb]^2 = [abb]", [&](std::string& out) {
            const Dfa cls = class_language(*sp, t);
            const auto words = accepted_words(cls, 64, 2);
            const bool singleton = is_finite(cls) && words.size() == 1 && words.front() == "aab";
            const bool fourth = S.power(t, 4) == S.power(t, 3);
            const Element abb = sp->classof("abb");
            const bool idem = S.is_idempotent(abb);
            out = "|[aab]| = " + std::to_string(words.size()) + "; [aab]^4 " + (fourth ? "=" : "!=") +
                  " [aab]^3; [abb]^2 " + (idem ? "=" : "!=") + " [abb]";
            return singleton && fourth && idem;
          });

  r.check("c", "every word of L up to length 30 has exactly one occurrence of b^2a^2",
          "all words: 1 occurrence", [&](std::string& out) {
            const auto words = accepted_words(sp->dfa(), 30);
            std::size_t bad = 0;
            for (const std::string& w : words)
              if (count_occurrences(w, "bbaa") != 1) ++bad;
            out = std::to_string(words.size()) + " words, " + std::to_string(bad) + " without exactly 1 occurrence";
            return !words.empty() && bad == 0;
          });

  r.check("d", "((x^2y)^(w-1)(xy^2)^w(x^2y)^2, x^2y) evaluates to (s, t) with s = [(a^2b)^3(ab^2)(a^2b)^2]",
          "(" + element(*sp, s) + ", " + element(*sp, t) + ")", [&](std::string& out) {
            const GeneratorMap g = letters_to_classes(*sp);
            const Element eu = eval_term(S, g, parse_term("(x^2y)^(w-1)(xy^2)^w(x^2y)^2"));
            const Element ev = eval_term(S, g, parse_term("x^2y"));
            out = "(" + element(*sp, eu) + ", " + element(*sp, ev) + ")";
            return eu == s && ev == t;
          });

  const std::string sample = "every completely regular semigroup of order <= " + std::to_string(cr_bound);
  r.check("e", "(x^2y)^(w-1)(xy^2)^w(x^2y)^2 = x^2y and yx(y^2x)^w = yx hold in " + sample,
          "both identities hold", [&](std::string& out) {
            const auto& pool = completely_regular_semigroups(cr_bound);
            const bool main = cr_sample_satisfies(parse_term("(x^2y)^(w-1)(xy^2)^w(x^2y)^2"), parse_term("x^2y"),
                                                  cr_bound);
            const bool step = cr_sample_satisfies(parse_term("yx(y^2x)^w"), parse_term("yx"), cr_bound);
            out = std::string(main && step ? "both identities hold" : "an identity fails") + " (" +
                  std::to_string(pool.size()) + " semigroups)";
            return main && step;
          });

  r.check("f", "yx and y^2x are L-equivalent in " + sample + " under every assignment", "L-equivalent everywhere",
          [&](std::string& out) {
            const Term qp = parse_term("yx");
            const Term qqp = parse_term("y^2x");
            std::size_t failures = 0;
            for (const FiniteSemigroup& T : completely_regular_semigroups(cr_bound)) {
              const GreenClasses green = green_classes(T);
              for_each_assignment(T.size(), "xy", [&](const GeneratorMap& g) {
                if (!green.l_equivalent(eval_term(T, g, qp), eval_term(T, g, qqp))) ++failures;
                return true;
              });
            }
            out = failures == 0 ? "L-equivalent everywhere" : std::to_string(failures) + " assignments differ";
            return failures == 0;
          });

  r.check("g", "mu^12(x) is cube-free; xyx and yxy occur in mu^5(x)", "cube-free: true; xyx: true; yxy: true",
          [&](std::string& out) {
            const Word w12 = ptm_iterate(12);
            const Word w5 = ptm_iterate(5);
            const bool cube_free = w12.size() == 4096 && is_cube_free(w12);
            const bool xyx = is_factor("xyx", w5);
            const bool yxy = is_factor("yxy", w5);
            out = "cube-free: " + yes_no(cube_free) + "; xyx: " + yes_no(xyx) + "; yxy: " + yes_no(yxy);
            return cube_free && xyx && yxy;
          });
  return r.finish();
}

}  // namespace semired
