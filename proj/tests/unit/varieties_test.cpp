#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/oracles.hpp"
#include "semired/enumerate.hpp"
#include "semired/error.hpp"
#include "semired/eval.hpp"
#include "semired/groups.hpp"
#include "semired/images.hpp"
#include "semired/term.hpp"
#include "semired/varieties.hpp"
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

Term t(const char* text) { return parse_term(text); }

// A witness must genuinely separate the two sides (or, for inequalities,
// violate the order), checked with the naive evaluator.
void check_witness(const Witness& w, const Identity& id) {
  const Element lhs = oracle::eval(w.semigroup, w.assignment, id.lhs);
  const Element rhs = oracle::eval(w.semigroup, w.assignment, id.rhs);
  CHECK(lhs == w.lhs_value);
  CHECK(rhs == w.rhs_value);
  if (id.inequality) {
    CHECK_FALSE(w.semigroup.leq(lhs, rhs));
  } else {
    CHECK(lhs != rhs);
  }
}

const std::vector<FiniteSemigroup>& naive_cr_up_to_3() {
  // Every completely regular semigroup of order <= 3, one per isomorphism
  // class, found by brute force over all tables.
  static const std::vector<FiniteSemigroup> all = [] {
    const Term lhs = t("x^(w+1)");
    const Term rhs = t("x");
    std::vector<FiniteSemigroup> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      std::set<std::vector<Element>> canon;
      std::size_t total = 1;
      for (std::size_t i = 0; i < n * n; ++i) total *= n;
      std::vector<Element> table(n * n);
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (auto& c : table) {
          c = static_cast<Element>(rest % n);
          rest /= n;
        }
        if (!oracle::is_associative(n, table)) continue;
        FiniteSemigroup s(n, table);
        if (!oracle::holds_everywhere(s, lhs, rhs)) continue;
        if (canon.insert(canonical_table(s)).second) out.push_back(s);
      }
    }
    return out;
  }();
  return all;
}

}  // namespace

TEST_SUITE("variety tags") {
  TEST_CASE("parsing") {
    CHECK(Variety::parse("ab").kind == VarietyKind::Ab);
    CHECK(Variety::parse("com").kind == VarietyKind::Com);
    CHECK(Variety::parse("g").kind == VarietyKind::G);
    CHECK(Variety::parse("jplus").kind == VarietyKind::Jplus);
    const Variety cr = Variety::parse("cr:3");
    CHECK(cr.kind == VarietyKind::CRSample);
    CHECK(cr.cr_bound == 3);
    CHECK(cr.name() == "cr:3");
    CHECK(kind_of([] { Variety::parse("cr:6"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { Variety::parse("cr:x"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { Variety::parse("nil"); }) == ErrorKind::ParseError);
  }
}

TEST_SUITE("abelian groups") {
  TEST_CASE("examples") {
    CHECK(ab_satisfies(t("xy"), t("yx")));
    CHECK(ab_satisfies(t("y(xy^2)^(w-1)"), t("(x^2y)^(w-1)x")));
    CHECK_FALSE(ab_satisfies(t("x"), t("x^2")));
    CHECK(kind_of([] { ab_satisfies(t("x^(3^w)"), t("x")); }) == ErrorKind::UnsupportedPrimePower);
  }

  TEST_CASE("witnesses are cyclic groups") {
    const Identity id{t("x"), t("x^3"), false};
    const Verdict v = check_identity(Variety::parse("ab"), id);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->name == "C3");
    check_witness(*v.witness, id);
  }
}

TEST_SUITE("commutative semigroups") {
  TEST_CASE("examples") {
    CHECK(com_satisfies(t("y(xy^2)^(w-1)"), t("(x^2y)^(w-1)x")));
    CHECK_FALSE(com_satisfies(t("x^w"), t("x")));
    CHECK(com_satisfies(t("x^2(x^3)^w x"), t("x^(w+3)")));
    CHECK_FALSE(com_satisfies(t("xy"), t("x")));
  }

  TEST_CASE("x^w = x is separated by a monogenic monoid") {
    const Identity id{t("x^w"), t("x"), false};
    const Verdict v = check_identity(Variety::parse("com"), id);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    check_witness(*v.witness, id);
  }
}

TEST_SUITE("groups") {
  TEST_CASE("examples") {
    CHECK(g_satisfies(t("x^(w-1) y^w x^2"), t("x")));
    CHECK_FALSE(g_satisfies(t("xy"), t("yx")));
    CHECK_FALSE(g_satisfies(iterated_commutator(1), t("x^w")));
  }

  TEST_CASE("witnesses come from the group sample") {
    for (const Identity& id : {Identity{t("xy"), t("yx"), false}, Identity{iterated_commutator(1), t("x^w"), false}}) {
      const Verdict v = check_identity(Variety::parse("g"), id);
      CHECK_FALSE(v.holds);
      REQUIRE(v.witness.has_value());
      CHECK(v.witness->name == "S3");
      check_witness(*v.witness, id);
    }
  }
}

TEST_SUITE("J+") {
  TEST_CASE("examples") {
    CHECK(jplus_leq("xy", "xxy"));
    CHECK_FALSE(jplus_leq("xyx", "xxy"));
    // u' = a1 a2 a3 embedded in v' = v0 a1 v1 a2 v2 a3 v3.
    CHECK(jplus_leq("abc", std::string("zz") + "a" + "y" + "b" + "" + "c" + "xx"));
  }

  TEST_CASE("inequalities are checked one way, equalities both ways") {
    const Variety jplus = Variety::parse("jplus");
    CHECK(check_identity(jplus, Identity{t("xy"), t("xzy"), true}).holds);
    const Identity equality{t("xy"), t("xzy"), false};
    const Verdict v = check_identity(jplus, equality);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->lhs_value != v.witness->rhs_value);
  }

  TEST_CASE("witnesses are ordered monoids satisfying 1 <= x") {
    const Identity id{t("xyx"), t("xxy"), true};
    const Verdict v = check_identity(Variety::parse("jplus"), id);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    const FiniteSemigroup& m = v.witness->semigroup;
    REQUIRE(m.identity().has_value());
    for (Element e = 0; e < m.size(); ++e) CHECK(m.leq(*m.identity(), e));
    check_witness(*v.witness, id);
  }

  TEST_CASE("omega terms are rejected and inequalities need jplus") {
    CHECK(kind_of([] { check_identity(Variety::parse("jplus"), Identity{t("x^w"), t("x"), true}); }) ==
          ErrorKind::InvalidArgument);
    CHECK(kind_of([] { check_identity(Variety::parse("com"), Identity{t("x"), t("xx"), true}); }) ==
          ErrorKind::InvalidArgument);
  }
}

TEST_SUITE("completely regular sample") {
  TEST_CASE("the sample up to order 3 matches brute force") {
    CHECK(completely_regular_semigroups(3).size() == naive_cr_up_to_3().size());
    std::set<std::vector<Element>> library;
    for (const auto& s : completely_regular_semigroups(3)) library.insert(canonical_table(s));
    for (const auto& s : naive_cr_up_to_3()) CHECK(library.count(canonical_table(s)) == 1);
  }

  TEST_CASE("examples") {
    CHECK(cr_sample_satisfies(t("(x^2y)^(w-1)(xy^2)^w(x^2y)^2"), t("x^2y"), 4));
    CHECK(cr_sample_satisfies(t("yx(y^2x)^w"), t("yx"), 4));
    CHECK_FALSE(cr_sample_satisfies(t("x^2"), t("x"), 4));
    CHECK(kind_of([] { cr_sample_satisfies(t("x"), t("x"), 6); }) == ErrorKind::SizeTooLarge);
  }

  TEST_CASE("x^2 = x fails in a group of order 2 from the sample") {
    const Identity id{t("x^2"), t("x"), false};
    const Verdict v = check_identity(Variety::parse("cr:4"), id);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    check_witness(*v.witness, id);
  }
}

TEST_SUITE("properties") {
  TEST_CASE("Ab equality is a congruence") {
    oracle::Rng rng(41);
    oracle::TermShape shape;
    shape.depth = 2;
    for (int trial = 0; trial < 300; ++trial) {
      const Term u = oracle::random_term(rng, shape);
      const Term v = rng.coin() ? oracle::rewrite_commutative(rng, u) : oracle::random_term(rng, shape);
      const Term w = oracle::random_term(rng, shape);
      CHECK(ab_satisfies(u, u));
      CHECK(ab_satisfies(u, v) == ab_satisfies(v, u));
      if (!ab_satisfies(u, v)) continue;
      CHECK(ab_satisfies(Term::concat(w, u), Term::concat(w, v)));
      CHECK(ab_satisfies(Term::concat(u, w), Term::concat(v, w)));
      const std::int64_t k = rng.between(-3, 3);
      CHECK(ab_satisfies(Term::omega(u, k), Term::omega(v, k)));
      const Term x = oracle::rewrite_commutative(rng, v);
      if (ab_satisfies(v, x)) CHECK(ab_satisfies(u, x));
    }
  }

  TEST_CASE("Com equality implies Ab equality") {
    oracle::Rng rng(42);
    int equal = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const Term u = oracle::random_term(rng);
      const Term v = rng.coin(0.7) ? oracle::rewrite_commutative(rng, oracle::rewrite_everywhere(rng, u)) : oracle::random_term(rng);
      if (!com_satisfies(u, v)) continue;
      ++equal;
      CHECK(ab_satisfies(u, v));
    }
    CHECK(equal > 100);
  }

  TEST_CASE("false verdicts come with separating witnesses") {
    oracle::Rng rng(43);
    oracle::TermShape shape;
    shape.depth = 2;
    for (const char* name : {"ab", "com", "g", "cr:3"}) {
      const Variety variety = Variety::parse(name);
      int witnessed = 0;
      for (int trial = 0; trial < 60; ++trial) {
        const Identity id{oracle::random_term(rng, shape), oracle::random_term(rng, shape), false};
        const Verdict v = check_identity(variety, id);
        if (v.holds) continue;
        if (variety.kind == VarietyKind::Ab || variety.kind == VarietyKind::Com) REQUIRE(v.witness.has_value());
        if (!v.witness) continue;
        ++witnessed;
        check_witness(*v.witness, id);
      }
      CHECK_MESSAGE(witnessed > 10, name);
    }
  }

  TEST_CASE("G equality is sound on the group sample") {
    oracle::Rng rng(44);
    int equal = 0;
    for (int trial = 0; trial < 80; ++trial) {
      const Term u = oracle::random_term(rng);
      const Term v = oracle::rewrite_group(rng, u);
      if (!g_satisfies(u, v)) continue;
      ++equal;
      for (const auto& named : small_groups()) CHECK_MESSAGE(satisfies_identity(named.group, u, v), named.name);
    }
    CHECK(equal > 40);
  }

  TEST_CASE("J+ order is reflexive, transitive and compatible") {
    oracle::Rng rng(45);
    for (int trial = 0; trial < 2000; ++trial) {
      const std::string u = rng.word("xyz", 5);
      const std::string v = rng.word("xyz", 7);
      const std::string w = rng.word("xyz", 9);
      const std::string c = rng.word("xyz", 3);
      CHECK(jplus_leq(u, u));
      if (jplus_leq(u, v) && jplus_leq(v, w)) CHECK(jplus_leq(u, w));
      if (jplus_leq(u, v)) {
        CHECK(jplus_leq(c + u, c + v));
        CHECK(jplus_leq(u + c, v + c));
      }
    }
  }

  TEST_CASE("the CR sample is monotone in the bound") {
    oracle::Rng rng(46);
    oracle::TermShape shape;
    shape.depth = 2;
    for (int trial = 0; trial < 80; ++trial) {
      const Term u = oracle::random_term(rng, shape);
      const Term v = rng.coin(0.5) ? oracle::rewrite_everywhere(rng, u) : oracle::random_term(rng, shape);
      const bool at2 = cr_sample_satisfies(u, v, 2);
      const bool at3 = cr_sample_satisfies(u, v, 3);
      const bool at4 = cr_sample_satisfies(u, v, 4);
      if (at4) CHECK(at3);
      if (at3) CHECK(at2);
      // Against the brute-force sample with the naive evaluator.
      bool naive = true;
      for (const auto& s : naive_cr_up_to_3()) naive = naive && oracle::holds_everywhere(s, u, v);
      CHECK_MESSAGE(at3 == naive, u.to_string() << " = " << v.to_string());
    }
  }
}
