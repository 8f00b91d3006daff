#include "semired/reducibility.hpp"

#include <deque>
#include <limits>

#include "semired/error.hpp"

namespace semired {

void SolutionTriple::validate() const {
  if (s >= semigroup.size() || t >= semigroup.size()) {
    raise(ErrorKind::InvalidArgument, "triple elements lie outside the semigroup");
  }
  gens.validate_for(semigroup);
  if (mode == SolutionMode::Inequality && !semigroup.has_order()) {
    raise(ErrorKind::InequalityWithoutOrder, "inequality triples need an ordered semigroup");
  }
}

namespace {

Element require_identity(const FiniteSemigroup& m) {
  if (!m.identity()) raise(ErrorKind::InvalidArgument, "Cayley-graph paths start at an identity element");
  return *m.identity();
}

}  // namespace

Word simple_path_word(const FiniteSemigroup& m, const GeneratorMap& gens, Element target) {
  const Element one = require_identity(m);
  gens.validate_for(m);
  if (target >= m.size()) raise(ErrorKind::InvalidArgument, "target lies outside the monoid");
  constexpr Element kUnseen = std::numeric_limits<Element>::max();
  std::vector<Element> parent(m.size(), kUnseen);
  std::vector<char> via(m.size(), 0);
  std::deque<Element> queue{one};
  parent[one] = one;
  while (!queue.empty() && parent[target] == kUnseen) {
    const Element e = queue.front();
    queue.pop_front();
    for (const auto& [letter, g] : gens.images) {
      const Element next = m.mul(e, g);
      if (parent[next] != kUnseen) continue;
      parent[next] = e;
      via[next] = letter;
      queue.push_back(next);
    }
  }
  if (parent[target] == kUnseen) {
    raise(ErrorKind::Unreachable, "element " + m.label(target) + " is not reachable from the identity");
  }
  Word w;
  for (Element e = target; e != one; e = parent[e]) w.push_back(via[e]);
  return Word(w.rbegin(), w.rend());
}

Word loop_removal(std::string_view w, const FiniteSemigroup& m, const GeneratorMap& gens) {
  const Element one = require_identity(m);
  // path[i] is the state after the first i kept letters; where[e] is the
  // position of state e on the current path.
  constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> where(m.size(), kAbsent);
  std::vector<Element> path{one};
  Word kept;
  where[one] = 0;
  for (char c : w) {
    const Element next = m.mul(path.back(), gens.at(c));
    if (where[next] != kAbsent) {
      const std::size_t back = where[next];
      for (std::size_t i = back + 1; i < path.size(); ++i) where[path[i]] = kAbsent;
      path.resize(back + 1);
      kept.resize(back);
    } else {
      where[next] = path.size();
      path.push_back(next);
      kept.push_back(c);
    }
  }
  return kept;
}

namespace {

Element word_image(const FiniteSemigroup& m, const GeneratorMap& gens, std::string_view w) {
  return evaluate_word(m, gens, w);
}

void require_images(const SolutionTriple& triple, const Term& u, const Term& v) {
  const Element eu = eval_term(triple.semigroup, triple.gens, u);
  const Element ev = eval_term(triple.semigroup, triple.gens, v);
  if (eu != triple.s || ev != triple.t) {
    raise(ErrorKind::NotASolution, "the pair evaluates to (" + triple.semigroup.label(eu) + ", " +
                                       triple.semigroup.label(ev) + "), not (" +
                                       triple.semigroup.label(triple.s) + ", " +
                                       triple.semigroup.label(triple.t) + ")");
  }
}

}  // namespace

WordPair jplus_word_solution(const SolutionTriple& triple, const Term& u, const Term& v) {
  triple.validate();
  if (triple.mode != SolutionMode::Inequality) {
    raise(ErrorKind::InvalidArgument, "J+ solutions are solutions of inequalities");
  }
  require_images(triple, u, v);
  const FiniteSemigroup monoid = triple.semigroup.monoid_completion();
  const std::vector<Target> targets{{triple.semigroup, triple.gens}};

  const Word u_unrolled = expand_word(unroll(u, targets));
  const Word u_word = loop_removal(u_unrolled, monoid, triple.gens);

  // Every word of length < |M| in the closure of v's finite subwords is a
  // subword of this unrolling.
  const Word v_unrolled = expand_word(unroll(v, targets, monoid.size()));
  const auto positions = greedy_embedding(u_word, v_unrolled);
  if (!positions) {
    raise(ErrorKind::SubwordObstruction,
          "'" + u_word + "' is not a scattered subword of the unrolling of " + v.to_string());
  }
  Word v_word;
  std::size_t from = 0;
  for (std::size_t i = 0; i <= positions->size(); ++i) {
    const std::size_t to = i < positions->size() ? (*positions)[i] : v_unrolled.size();
    v_word += loop_removal(std::string_view(v_unrolled).substr(from, to - from), monoid, triple.gens);
    if (i < positions->size()) v_word += v_unrolled[to];
    from = to + 1;
  }

  const Element su = word_image(monoid, triple.gens, u_word);
  const Element sv = word_image(monoid, triple.gens, v_word);
  if (su != triple.s || sv != triple.t || !scattered_subword(u_word, v_word)) {
    raise(ErrorKind::NotASolution, "word solution failed its postconditions");
  }
  return {u_word, v_word};
}

WordPair loc_fin_word_solution(const SolutionTriple& triple, const Term& u, const Term& v,
                               const std::vector<Target>& v_images) {
  triple.validate();
  require_images(triple, u, v);
  for (const Target& image : v_images) {
    const Element a = eval_term(image.semigroup, image.gens, u);
    const Element b = eval_term(image.semigroup, image.gens, v);
    const bool ok = triple.mode == SolutionMode::Inequality && image.semigroup.has_order()
                        ? image.semigroup.leq(a, b)
                        : a == b;
    if (!ok) raise(ErrorKind::NotASolution, "the pair is separated by a variety image");
  }
  std::vector<Target> targets{{triple.semigroup, triple.gens}};
  targets.insert(targets.end(), v_images.begin(), v_images.end());
  WordPair out{expand_word(unroll(u, targets)), expand_word(unroll(v, targets))};
  for (const Target& target : targets) {
    if (evaluate_word(target.semigroup, target.gens, out.u) != eval_term(target.semigroup, target.gens, u) ||
        evaluate_word(target.semigroup, target.gens, out.v) != eval_term(target.semigroup, target.gens, v)) {
      raise(ErrorKind::NotASolution, "unrolling changed an image");
    }
  }
  return out;
}

}  // namespace semired
