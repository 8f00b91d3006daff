#include "semired/dfa.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "semired/error.hpp"

namespace semired {

State Dfa::next(State q, char letter) const { return next_index(q, letter_index(letter)); }

State Dfa::run(State q, std::string_view word) const {
  for (char c : word) q = next(q, c);
  return q;
}

std::size_t Dfa::letter_index(char letter) const {
  const auto pos = alphabet.find(letter);
  if (pos == std::string::npos) {
    raise(ErrorKind::AlphabetMismatch, std::string("letter '") + letter + "' is not in the alphabet");
  }
  return pos;
}

void Dfa::validate() const {
  if (states == 0) raise(ErrorKind::InvalidArgument, "automaton has no states");
  if (alphabet.empty()) raise(ErrorKind::EmptyAlphabet, "automaton has an empty alphabet");
  if (!std::is_sorted(alphabet.begin(), alphabet.end()) ||
      std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end()) {
    raise(ErrorKind::InvalidArgument, "alphabet must be sorted and duplicate-free");
  }
  if (trans.size() != states * alphabet.size()) raise(ErrorKind::InvalidArgument, "transition table is not total");
  if (accepting.size() != states) raise(ErrorKind::InvalidArgument, "accepting set has wrong size");
  if (initial >= states) raise(ErrorKind::InvalidArgument, "initial state out of range");
  for (State q : trans)
    if (q >= states) raise(ErrorKind::InvalidArgument, "transition target out of range");
}

namespace {

struct Glushkov {
  std::vector<char> letter_at{0};  // position 0 is the start marker
  std::vector<std::set<std::size_t>> follow{{}};

  struct Info {
    bool nullable;
    std::set<std::size_t> first;
    std::set<std::size_t> last;
  };

  void link(const std::set<std::size_t>& from, const std::set<std::size_t>& to) {
    for (std::size_t p : from) follow[p].insert(to.begin(), to.end());
  }

  Info build(const Regex& r) {
    switch (r.kind()) {
      case Regex::Kind::Epsilon: return {true, {}, {}};
      case Regex::Kind::Letter: {
        const std::size_t p = letter_at.size();
        letter_at.push_back(r.symbol());
        follow.emplace_back();
        return {false, {p}, {p}};
      }
      case Regex::Kind::Union: {
        Info a = build(r.left());
        Info b = build(r.right());
        a.nullable = a.nullable || b.nullable;
        a.first.insert(b.first.begin(), b.first.end());
        a.last.insert(b.last.begin(), b.last.end());
        return a;
      }
      case Regex::Kind::Concat: {
        Info a = build(r.left());
        Info b = build(r.right());
        link(a.last, b.first);
        Info out{a.nullable && b.nullable, a.first, b.last};
        if (a.nullable) out.first.insert(b.first.begin(), b.first.end());
        if (b.nullable) out.last.insert(a.last.begin(), a.last.end());
        return out;
      }
      case Regex::Kind::Star:
      case Regex::Kind::Plus: {
        Info a = build(r.left());
        link(a.last, a.first);
        if (r.kind() == Regex::Kind::Star) a.nullable = true;
        return a;
      }
    }
    return {true, {}, {}};
  }
};

}  // namespace

Dfa compile_min_dfa(const Regex& regex, std::string_view alphabet_override) {
  std::string alphabet(alphabet_override);
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  const std::string own = regex.alphabet();
  if (alphabet.empty()) alphabet = own;
  if (alphabet.empty()) raise(ErrorKind::EmptyAlphabet, "regex has no letters and no alphabet was given");
  for (char c : own) {
    if (alphabet.find(c) == std::string::npos) {
      raise(ErrorKind::AlphabetMismatch, std::string("regex letter '") + c + "' is outside the alphabet");
    }
  }

  Glushkov g;
  const Glushkov::Info info = g.build(regex);
  g.follow[0] = info.first;

  using PositionSet = std::vector<std::size_t>;
  std::map<PositionSet, State> ids;
  std::vector<PositionSet> sets;
  auto intern = [&](PositionSet s) {
    auto [it, inserted] = ids.try_emplace(s, static_cast<State>(sets.size()));
    if (inserted) sets.push_back(std::move(s));
    return it->second;
  };
  intern({0});

  Dfa dfa;
  dfa.alphabet = alphabet;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (char c : alphabet) {
      std::set<std::size_t> target;
      for (std::size_t p : sets[k])
        for (std::size_t q : g.follow[p])
          if (g.letter_at[q] == c) target.insert(q);
      const State id = intern(PositionSet(target.begin(), target.end()));
      dfa.trans.push_back(id);
    }
  }
  dfa.states = sets.size();
  dfa.accepting.resize(dfa.states);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    bool acc = false;
    for (std::size_t p : sets[k]) acc = acc || (p == 0 ? info.nullable : info.last.count(p) > 0);
    dfa.accepting[k] = acc;
  }
  dfa.initial = 0;
  return minimize(dfa);
}

Dfa compile_min_dfa(std::string_view regex, std::string_view alphabet) {
  return compile_min_dfa(parse_regex(regex), alphabet);
}

Dfa minimize(const Dfa& dfa) {
  dfa.validate();
  const std::size_t k = dfa.alphabet.size();

  std::vector<bool> reachable(dfa.states, false);
  std::queue<State> todo;
  reachable[dfa.initial] = true;
  todo.push(dfa.initial);
  while (!todo.empty()) {
    const State q = todo.front();
    todo.pop();
    for (std::size_t a = 0; a < k; ++a) {
      const State r = dfa.next_index(q, a);
      if (!reachable[r]) {
        reachable[r] = true;
        todo.push(r);
      }
    }
  }

  std::vector<std::size_t> block(dfa.states, 0);
  for (State q = 0; q < dfa.states; ++q) block[q] = dfa.accepting[q] ? 1 : 0;
  std::size_t block_count = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    std::vector<std::size_t> refined(dfa.states, 0);
    for (State q = 0; q < dfa.states; ++q) {
      if (!reachable[q]) continue;
      std::vector<std::size_t> sig{block[q]};
      for (std::size_t a = 0; a < k; ++a) sig.push_back(block[dfa.next_index(q, a)]);
      refined[q] = signatures.try_emplace(std::move(sig), signatures.size()).first->second;
    }
    block.swap(refined);
    if (signatures.size() == block_count) break;
    block_count = signatures.size();
  }

  // Number blocks breadth-first from the initial state, letters in order.
  constexpr State kNone = ~State{0};
  std::vector<State> number(block_count, kNone);
  std::vector<State> representative;
  number[block[dfa.initial]] = 0;
  representative.push_back(dfa.initial);
  for (std::size_t i = 0; i < representative.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      const State r = dfa.next_index(representative[i], a);
      if (number[block[r]] == kNone) {
        number[block[r]] = static_cast<State>(representative.size());
        representative.push_back(r);
      }
    }
  }

  Dfa out;
  out.states = representative.size();
  out.alphabet = dfa.alphabet;
  out.initial = 0;
  out.accepting.resize(out.states);
  out.trans.resize(out.states * k);
  for (std::size_t i = 0; i < representative.size(); ++i) {
    out.accepting[i] = dfa.accepting[representative[i]];
    for (std::size_t a = 0; a < k; ++a) out.trans[i * k + a] = number[block[dfa.next_index(representative[i], a)]];
  }
  out.minimal = true;
  return out;
}

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (a.alphabet != b.alphabet) {
    raise(ErrorKind::AlphabetMismatch, "alphabets '" + a.alphabet + "' and '" + b.alphabet + "' differ");
  }
}

}  // namespace

Dfa intersect(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet.size();
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](std::pair<State, State> p) {
    auto [it, inserted] = ids.try_emplace(p, static_cast<State>(pairs.size()));
    if (inserted) pairs.push_back(p);
    return it->second;
  };
  intern({a.initial, b.initial});
  Dfa out;
  out.alphabet = a.alphabet;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t c = 0; c < k; ++c)
      out.trans.push_back(intern({a.next_index(pairs[i].first, c), b.next_index(pairs[i].second, c)}));
  out.states = pairs.size();
  for (const auto& [p, q] : pairs) out.accepting.push_back(a.accepting[p] && b.accepting[q]);
  return out;
}

Dfa complement(const Dfa& a) {
  Dfa out = a;
  out.accepting.flip();
  out.minimal = a.minimal;
  return out;
}

bool is_empty(const Dfa& a) {
  std::vector<bool> seen(a.states, false);
  std::queue<State> todo;
  seen[a.initial] = true;
  todo.push(a.initial);
  while (!todo.empty()) {
    const State q = todo.front();
    todo.pop();
    if (a.accepting[q]) return false;
    for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
      const State r = a.next_index(q, c);
      if (!seen[r]) {
        seen[r] = true;
        todo.push(r);
      }
    }
  }
  return true;
}

bool languages_equal(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  std::set<std::pair<State, State>> seen{{a.initial, b.initial}};
  std::queue<std::pair<State, State>> todo;
  todo.push({a.initial, b.initial});
  while (!todo.empty()) {
    const auto [p, q] = todo.front();
    todo.pop();
    if (a.accepting[p] != b.accepting[q]) return false;
    for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
      const std::pair<State, State> next{a.next_index(p, c), b.next_index(q, c)};
      if (seen.insert(next).second) todo.push(next);
    }
  }
  return true;
}

namespace {

// Minimal number of letters from each state to an accepting state; npos if
// none is reachable.
std::vector<std::size_t> distance_to_accept(const Dfa& a) {
  constexpr auto kFar = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(a.states, kFar);
  std::vector<std::vector<State>> reverse(a.states);
  for (State q = 0; q < a.states; ++q)
    for (std::size_t c = 0; c < a.alphabet.size(); ++c) reverse[a.next_index(q, c)].push_back(q);
  std::queue<State> todo;
  for (State q = 0; q < a.states; ++q)
    if (a.accepting[q]) {
      dist[q] = 0;
      todo.push(q);
    }
  while (!todo.empty()) {
    const State q = todo.front();
    todo.pop();
    for (State p : reverse[q])
      if (dist[p] == kFar) {
        dist[p] = dist[q] + 1;
        todo.push(p);
      }
  }
  return dist;
}

}  // namespace

bool is_finite(const Dfa& a) {
  constexpr auto kFar = static_cast<std::size_t>(-1);
  const auto dist = distance_to_accept(a);
  // Cycle detection by iterative DFS on reachable, co-reachable states.
  enum Mark : unsigned char { White, Grey, Black };
  std::vector<Mark> mark(a.states, White);
  std::vector<std::pair<State, std::size_t>> stack;
  if (dist[a.initial] == kFar) return true;
  stack.push_back({a.initial, 0});
  mark[a.initial] = Grey;
  while (!stack.empty()) {
    auto& [q, c] = stack.back();
    if (c == a.alphabet.size()) {
      mark[q] = Black;
      stack.pop_back();
      continue;
    }
    const State r = a.next_index(q, c++);
    if (dist[r] == kFar) continue;
    if (mark[r] == Grey) return false;
    if (mark[r] == White) {
      mark[r] = Grey;
      stack.push_back({r, 0});
    }
  }
  return true;
}

std::vector<std::string> accepted_words(const Dfa& a, std::size_t max_length, std::size_t limit) {
  const auto dist = distance_to_accept(a);
  std::vector<std::string> out;
  std::string word;
  // Depth-first in lexicographic order for each exact length gives shortlex.
  auto visit = [&](auto&& self, State q, std::size_t remaining) -> void {
    if (out.size() >= limit) return;
    if (dist[q] > remaining) return;
    if (remaining == 0) {
      if (a.accepting[q]) out.push_back(word);
      return;
    }
    for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
      word.push_back(a.alphabet[c]);
      self(self, a.next_index(q, c), remaining - 1);
      word.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_length && out.size() < limit; ++len) visit(visit, a.initial, len);
  return out;
}

std::string format_dfa(const Dfa& a) {
  std::ostringstream out;
  out << "states " << a.states << '\n';
  out << "alphabet";
  for (char c : a.alphabet) out << ' ' << c;
  out << "\ninitial " << a.initial << '\n';
  out << "accepting";
  for (State q = 0; q < a.states; ++q)
    if (a.accepting[q]) out << ' ' << q;
  out << "\ntrans:\n";
  for (State q = 0; q < a.states; ++q)
    for (std::size_t c = 0; c < a.alphabet.size(); ++c)
      out << q << ' ' << a.alphabet[c] << ' ' << a.next_index(q, c) << '\n';
  return out.str();
}

Dfa parse_dfa(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto bad = [](const std::string& what) -> void { raise(ErrorKind::ParseError, "dfa text: " + what); };
  Dfa d;
  std::string key;
  std::string line;
  bool in_trans = false;
  std::vector<bool> seen_trans;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    if (!(fields >> key)) continue;
    if (in_trans) {
      State q = 0;
      State r = 0;
      std::string letter;
      std::istringstream row(line);
      if (!(row >> q >> letter >> r) || letter.size() != 1) bad("malformed transition '" + line + "'");
      if (q >= d.states || r >= d.states) bad("transition state out of range");
      const std::size_t idx = d.letter_index(letter[0]);
      d.trans[q * d.alphabet.size() + idx] = r;
      seen_trans[q * d.alphabet.size() + idx] = true;
      continue;
    }
    if (key == "states") {
      fields >> d.states;
    } else if (key == "alphabet") {
      std::string letter;
      while (fields >> letter) {
        if (letter.size() != 1) bad("letters must be single characters");
        d.alphabet += letter;
      }
    } else if (key == "initial") {
      fields >> d.initial;
    } else if (key == "accepting") {
      d.accepting.assign(d.states, false);
      State q = 0;
      while (fields >> q) {
        if (q >= d.states) bad("accepting state out of range");
        d.accepting[q] = true;
      }
    } else if (key == "trans:") {
      in_trans = true;
      d.trans.assign(d.states * d.alphabet.size(), 0);
      seen_trans.assign(d.trans.size(), false);
    } else {
      bad("unknown line '" + line + "'");
    }
  }
  if (d.accepting.empty()) d.accepting.assign(d.states, false);
  if (std::find(seen_trans.begin(), seen_trans.end(), false) != seen_trans.end() || !in_trans) {
    bad("transition function is not total");
  }
  d.validate();
  return d;
}

}  // namespace semired
