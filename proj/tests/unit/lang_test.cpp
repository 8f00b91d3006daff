#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "../support/oracles.hpp"
#include "semired/dfa.hpp"
#include "semired/error.hpp"
#include "semired/regex.hpp"
#include "semired/syntactic.hpp"
#include "semired/verify.hpp"
#include "semired/words.hpp"

using namespace semired;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

// Membership of every word up to max_length, read off by brute force.
std::vector<std::string> brute_force_language(const Dfa& d, std::size_t max_length) {
  std::vector<std::string> out;
  for (const auto& w : oracle::all_words(d.alphabet, 0, max_length))
    if (d.accepts(w)) out.push_back(w);
  return out;
}

std::string random_regex(oracle::Rng& rng, std::size_t depth) {
  if (depth == 0 || rng.coin(0.3)) return std::string(1, rng.coin() ? 'a' : 'b');
  switch (rng.below(4)) {
    case 0: return "(" + random_regex(rng, depth - 1) + "|" + random_regex(rng, depth - 1) + ")";
    case 1: return "(" + random_regex(rng, depth - 1) + random_regex(rng, depth - 1) + ")";
    case 2: return "(" + random_regex(rng, depth - 1) + ")*";
    default: return "(" + random_regex(rng, depth - 1) + ")+";
  }
}

// Acceptance of x w y for every bounded context (x, y).
std::vector<bool> context_signature(const Dfa& d, const std::string& w, const std::vector<std::string>& contexts) {
  std::vector<bool> sig;
  sig.reserve(contexts.size() * contexts.size());
  for (const auto& x : contexts) {
    const State q = d.run(d.run(d.initial, x), w);
    for (const auto& y : contexts) sig.push_back(d.accepting[d.run(q, y)]);
  }
  return sig;
}

}  // namespace

TEST_SUITE("regex parsing") {
  TEST_CASE("syntax and printing") {
    CHECK(parse_regex("a b").to_string() == parse_regex("ab").to_string());
    CHECK(parse_regex("(a|b)*a").alphabet() == "ab");
    CHECK(kind_of([] { parse_regex("("); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_regex("a)"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_regex("*a"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("plus is e e*") {
    const std::vector<std::string> regexes{"a", "ab|b", "(ab)*", "a*b"};
    for (const auto& r : regexes) {
      CHECK(languages_equal(compile_min_dfa("(" + r + ")+", "ab"), compile_min_dfa("(" + r + ")(" + r + ")*", "ab")));
    }
  }
}

TEST_SUITE("minimal automata") {
  TEST_CASE("a* over {a,b} has two states") {
    const Dfa d = compile_min_dfa("a*", "ab");
    CHECK(d.states == 2);
    CHECK(d.accepts(""));
    CHECK(d.accepts("aaa"));
    CHECK_FALSE(d.accepts("ab"));
    CHECK(oracle::nerode_classes(d, 4) == 2);
  }

  TEST_CASE("(a|b)*a has two states") {
    const Dfa d = compile_min_dfa("(a|b)*a");
    CHECK(d.states == 2);
    CHECK(oracle::nerode_classes(d, 4) == 2);
  }

  TEST_CASE("a a a+ b+ a a matches the Nerode count up to length 10") {
    const Dfa d = compile_min_dfa(kGroupsLanguage);
    CHECK(d.states == oracle::nerode_classes(d, 10));
    CHECK(d.states == 8);
  }

  TEST_CASE("errors") {
    CHECK(kind_of([] { compile_min_dfa("()"); }) == ErrorKind::EmptyAlphabet);
    CHECK(kind_of([] { compile_min_dfa("abc", "ab"); }) == ErrorKind::AlphabetMismatch);
    CHECK(kind_of([] { languages_equal(compile_min_dfa("a", "a"), compile_min_dfa("a", "ab")); }) ==
          ErrorKind::AlphabetMismatch);
  }

  TEST_CASE("language equality") {
    CHECK(languages_equal(compile_min_dfa("(a|b)*"), compile_min_dfa("(a* b*)*")));
    CHECK_FALSE(languages_equal(compile_min_dfa("a", "a"), compile_min_dfa("aa", "a")));
  }

  TEST_CASE("text format round-trips") {
    const Dfa d = compile_min_dfa(kGroupsLanguage);
    const std::string text = format_dfa(d);
    CHECK(text.rfind("states 8\n", 0) == 0);
    const Dfa back = parse_dfa(text);
    CHECK(format_dfa(back) == text);
    CHECK(languages_equal(back, d));
  }
}

TEST_SUITE("syntactic semigroups") {
  TEST_CASE("the a a a+ b+ a a construction: [a] = {a}, [a^4] = [a^3], [b^2] = [b]") {
    const auto sp = syntactic_semigroup(kGroupsLanguage);
    const Dfa a_class = class_language(sp, sp.classof("a"));
    CHECK(is_finite(a_class));
    CHECK(accepted_words(a_class, 12) == std::vector<std::string>{"a"});
    CHECK(sp.classof("aaaa") == sp.classof("aaa"));
    CHECK(sp.classof("bb") == sp.classof("b"));
  }

  TEST_CASE("the completely regular construction: [a^2b]^4 = [a^2b]^3, [ab^2]^2 = [ab^2]") {
    const auto sp = syntactic_semigroup(kCompletelyRegularLanguage);
    const FiniteSemigroup& s = sp.semigroup();
    const Element aab = sp.classof("aab");
    const Element abb = sp.classof("abb");
    CHECK(s.power(aab, 4) == s.power(aab, 3));
    CHECK(s.mul(abb, abb) == abb);
  }

  TEST_CASE("labels are the shortlex-least words of each class") {
    const auto sp = syntactic_semigroup(kComLanguage);
    const FiniteSemigroup& s = sp.semigroup();
    std::map<Element, std::string> first;
    for (const auto& w : oracle::all_words("ab", 1, 8)) first.try_emplace(sp.classof(w), w);
    CHECK(first.size() == s.size());
    for (const auto& [e, w] : first) {
      CHECK(s.label(e) == w);
      CHECK(sp.representative(e) == w);
    }
    CHECK(sp.semigroup().size() == 41);
  }

  TEST_CASE("class languages of the commutative construction") {
    const auto sp = syntactic_semigroup(kComLanguage);
    CHECK(languages_equal(class_language(sp, sp.classof("babb")), compile_min_dfa("b a b b ((a b b)(a b b))*", "ab")));
    CHECK(languages_equal(class_language(sp, sp.classof("aaba")), compile_min_dfa("((aab)(aab))* aaba", "ab")));
  }

  TEST_CASE("class language of s in the group construction is a^3 a* b b* a^2") {
    const auto sp = syntactic_semigroup(kGroupsLanguage);
    const Dfa s_class = class_language(sp, sp.classof("aaabaa"));
    CHECK(languages_equal(s_class, compile_min_dfa("aaa a* b b* aa", "ab")));
    // {a^m b^n a^2 : m >= 3, n >= 1} checked word by word as well.
    for (const auto& w : oracle::all_words("ab", 0, 11)) {
      const auto first_b = w.find('b');
      const auto last_b = w.rfind('b');
      bool shape = first_b != std::string::npos && first_b >= 3 && w.size() >= last_b + 3 &&
                   w.substr(last_b + 1) == "aa" && w.find('a', first_b) == last_b + 1 &&
                   w.substr(0, first_b) == std::string(first_b, 'a');
      CHECK_MESSAGE(s_class.accepts(w) == shape, w);
    }
  }

  TEST_CASE("syntactic order examples") {
    const auto contains_a = syntactic_semigroup("(a|b)* a (a|b)*");
    const FiniteSemigroup ordered = ordered_syntactic_semigroup(contains_a);
    CHECK(ordered.leq(contains_a.classof("b"), contains_a.classof("a")));
    CHECK_FALSE(ordered.leq(contains_a.classof("a"), contains_a.classof("b")));
    for (Element e = 0; e < ordered.size(); ++e) CHECK(ordered.leq(e, e));

    const auto just_a = syntactic_semigroup("a", "a");
    const FiniteSemigroup o2 = ordered_syntactic_semigroup(just_a);
    CHECK(o2.leq(just_a.classof("aa"), just_a.classof("a")));
    CHECK_FALSE(o2.leq(just_a.classof("a"), just_a.classof("aa")));
  }

  TEST_CASE("words that are no image raise ElementNotWordImage") {
    const auto sp = syntactic_semigroup("a", "a");
    CHECK(kind_of([&] { class_language(sp, static_cast<Element>(sp.semigroup().size() + 3)); }) ==
          ErrorKind::ElementNotWordImage);
  }
}

TEST_SUITE("scattered subwords") {
  TEST_CASE("examples") {
    CHECK(scattered_subword("xy", "yxyy"));
    CHECK_FALSE(scattered_subword("yx", "xxy"));
    CHECK(scattered_subword("", "anything"));
    CHECK(scattered_subword("", ""));
  }
}

TEST_SUITE("properties") {
  TEST_CASE("accepted_words lists the language in shortlex order") {
    oracle::Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
      const Dfa d = compile_min_dfa(random_regex(rng, 4), "ab");
      CHECK(accepted_words(d, 7) == brute_force_language(d, 7));
      const auto limited = accepted_words(d, 7, 5);
      const auto all = brute_force_language(d, 7);
      CHECK(limited == std::vector<std::string>(all.begin(), all.begin() + std::min<std::size_t>(5, all.size())));
    }
  }

  TEST_CASE("minimal automata have exactly the Nerode classes of random automata") {
    oracle::Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
      const Dfa d = oracle::random_dfa(rng, static_cast<std::size_t>(rng.between(1, 6)), "ab");
      const Dfa m = minimize(d);
      CHECK(m.states == oracle::nerode_classes(d, 7));
      CHECK(languages_equal(m, d));
      for (const auto& w : oracle::all_words("ab", 0, 8)) CHECK(m.accepts(w) == d.accepts(w));
    }
  }

  TEST_CASE("classof is a homomorphism on words up to length 6") {
    for (const auto regex : {kComLanguage, kGroupsLanguage, kCompletelyRegularLanguage}) {
      const auto sp = syntactic_semigroup(regex);
      const auto words = oracle::all_words("ab", 1, 6);
      for (const auto& u : words)
        for (const auto& v : {std::string("a"), std::string("b"), std::string("ab"), std::string("bba")}) {
          CHECK(sp.classof(u + v) == sp.semigroup().mul(sp.classof(u), sp.classof(v)));
          CHECK(sp.classof(v + u) == sp.semigroup().mul(sp.classof(v), sp.classof(u)));
        }
    }
  }

  TEST_CASE("same class iff same bounded context set, for random regexes") {
    oracle::Rng rng(23);
    int checked = 0;
    while (checked < 25) {
      const std::string regex = random_regex(rng, 4);
      const auto sp = syntactic_semigroup(regex, "ab");
      if (sp.dfa().states > 6) continue;
      ++checked;
      const auto contexts = oracle::all_words("ab", 0, 5);
      std::map<std::vector<bool>, Element> by_signature;
      for (const auto& w : oracle::all_words("ab", 1, 7)) {
        const auto sig = context_signature(sp.dfa(), w, contexts);
        auto [it, inserted] = by_signature.emplace(sig, sp.classof(w));
        CHECK_MESSAGE(it->second == sp.classof(w), regex << " word " << w);
      }
      // Distinct signatures never share a class.
      std::set<Element> classes;
      for (const auto& [sig, e] : by_signature) CHECK_MESSAGE(classes.insert(e).second, regex);
    }
  }

  TEST_CASE("syntactic order matches bounded contexts and is stable") {
    oracle::Rng rng(24);
    int checked = 0;
    while (checked < 25) {
      const std::string regex = random_regex(rng, 4);
      const auto sp = syntactic_semigroup(regex, "ab");
      if (sp.dfa().states > 6) continue;
      ++checked;
      const FiniteSemigroup ordered = ordered_syntactic_semigroup(sp);
      const auto contexts = oracle::all_words("ab", 0, 5);
      std::vector<std::vector<bool>> sig(ordered.size());
      for (Element e = 0; e < ordered.size(); ++e) sig[e] = context_signature(sp.dfa(), sp.representative(e), contexts);
      for (Element u = 0; u < ordered.size(); ++u)
        for (Element v = 0; v < ordered.size(); ++v) {
          bool implied = true;
          for (std::size_t i = 0; i < sig[u].size(); ++i) implied = implied && (!sig[u][i] || sig[v][i]);
          CHECK_MESSAGE(ordered.leq(u, v) == implied, regex);
          if (!ordered.leq(u, v)) continue;
          for (Element w : {sp.classof("a"), sp.classof("b")}) {
            CHECK(ordered.leq(ordered.mul(w, u), ordered.mul(w, v)));
            CHECK(ordered.leq(ordered.mul(u, w), ordered.mul(v, w)));
          }
        }
    }
  }

  TEST_CASE("class languages partition the nonempty words") {
    for (const auto regex : {kComLanguage, kGroupsLanguage}) {
      const auto sp = syntactic_semigroup(regex);
      std::vector<Dfa> languages;
      for (Element e = 0; e < sp.semigroup().size(); ++e) languages.push_back(class_language(sp, e));
      for (const auto& w : oracle::all_words("ab", 1, 8)) {
        std::size_t hits = 0;
        for (Element e = 0; e < languages.size(); ++e) {
          if (!languages[e].accepts(w)) continue;
          ++hits;
          CHECK(e == sp.classof(w));
        }
        CHECK_MESSAGE(hits == 1, w);
      }
      for (const auto& l : languages) CHECK_FALSE(l.accepts(""));
    }
  }

  TEST_CASE("scattered_subword(u, v) iff Sub(u) is contained in Sub(v)") {
    const auto words = oracle::all_words("xy", 0, 5);
    std::vector<std::set<std::string>> subs;
    for (const auto& w : words) subs.push_back(oracle::sub_words(w));
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < words.size(); ++j) {
        const bool contained = std::includes(subs[j].begin(), subs[j].end(), subs[i].begin(), subs[i].end());
        CHECK(scattered_subword(words[i], words[j]) == contained);
      }
    oracle::Rng rng(25);
    for (int trial = 0; trial < 300; ++trial) {
      const std::string u = rng.word("xyz", 6);
      const std::string v = rng.word("xyz", 6);
      const auto su = oracle::sub_words(u);
      const auto sv = oracle::sub_words(v);
      CHECK(scattered_subword(u, v) == std::includes(sv.begin(), sv.end(), su.begin(), su.end()));
    }
  }
}
