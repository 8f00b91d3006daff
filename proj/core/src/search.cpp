#include <map>
#include <string>
#include <functional>
#include <tuple>

#include "semired/error.hpp"
#include "semired/images.hpp"
#include "semired/reducibility.hpp"

namespace semired {

namespace {

// Normal form of a term in the variety, as a comparable string.
std::string variety_key(VarietyKind variety, const Term& t) {
  switch (variety) {
    case VarietyKind::Ab: return format_ab_vector(ab_image(t));
    case VarietyKind::Com: return format_exponent_vector(com_exponents(t));
    case VarietyKind::G: return format_free_word(free_group_normal_form(t));
    default: break;
  }
  raise(ErrorKind::InvalidArgument, "bounded search supports ab, com and g");
}

struct Candidate {
  Term term;
  Element value;
  std::string key;
  std::string text;
};

bool better(const Term& a, const std::string& a_text, const Term& b, const std::string& b_text) {
  return std::make_pair(a.size(), std::cref(a_text)) < std::make_pair(b.size(), std::cref(b_text));
}

}  // namespace

std::optional<std::pair<Term, Term>> bounded_omega_solution_search(const SolutionTriple& triple,
                                                                   VarietyKind variety, std::size_t max_size,
                                                                   const std::vector<std::int64_t>& offsets) {
  if (max_size > kMaxSearchSize) {
    raise(ErrorKind::SizeTooLarge, "bounded search is capped at " + std::to_string(kMaxSearchSize) + " nodes");
  }
  if (variety != VarietyKind::Ab && variety != VarietyKind::Com && variety != VarietyKind::G) {
    raise(ErrorKind::InvalidArgument, "bounded search supports ab, com and g");
  }
  triple.validate();
  const FiniteSemigroup& s = triple.semigroup;

  // Class (value in S, normal form) -> its representative; by_size[n] lists
  // the representatives with n nodes.
  std::map<std::pair<Element, std::string>, std::size_t> seen;
  std::vector<std::vector<Candidate>> by_size(max_size + 1);

  auto offer = [&](std::map<std::pair<Element, std::string>, Candidate>& layer, Term t, Element value) {
    std::string key = variety_key(variety, t);
    auto class_id = std::make_pair(value, key);
    if (seen.count(class_id) != 0) return;
    std::string text = t.to_string();
    auto it = layer.find(class_id);
    if (it == layer.end()) {
      layer.emplace(std::move(class_id), Candidate{std::move(t), value, std::move(key), std::move(text)});
    } else if (better(t, text, it->second.term, it->second.text)) {
      it->second = Candidate{std::move(t), value, std::move(key), std::move(text)};
    }
  };

  for (std::size_t n = 1; n <= max_size; ++n) {
    std::map<std::pair<Element, std::string>, Candidate> layer;
    if (n == 1) {
      for (const auto& [letter, image] : triple.gens.images) offer(layer, Term::letter(letter), image);
    }
    for (std::size_t left = 1; left + 1 < n; ++left) {
      const std::size_t right = n - 1 - left;
      for (const Candidate& a : by_size[left])
        for (const Candidate& b : by_size[right]) offer(layer, Term::concat(a.term, b.term), s.mul(a.value, b.value));
    }
    if (n >= 2) {
      for (const Candidate& a : by_size[n - 1])
        for (std::int64_t k : offsets) offer(layer, Term::omega(a.term, k), omega_plus_k(s, a.value, k));
    }
    for (auto& [class_id, candidate] : layer) {
      seen.emplace(class_id, n);
      by_size[n].push_back(std::move(candidate));
    }
  }

  // Best left side with value s and best right side with value t, per
  // normal form.
  std::map<std::string, const Candidate*> lhs;
  std::map<std::string, const Candidate*> rhs;
  for (const auto& layer : by_size)
    for (const Candidate& c : layer) {
      for (auto [want, side] : {std::make_pair(triple.s, &lhs), std::make_pair(triple.t, &rhs)}) {
        if (c.value != want) continue;
        auto [it, inserted] = side->try_emplace(c.key, &c);
        if (!inserted && better(c.term, c.text, it->second->term, it->second->text)) it->second = &c;
      }
    }
  const Candidate* best_u = nullptr;
  const Candidate* best_v = nullptr;
  for (const auto& [key, u] : lhs) {
    const auto match = rhs.find(key);
    if (match == rhs.end()) continue;
    const Candidate* v = match->second;
    if (best_u == nullptr ||
        std::make_tuple(u->term.size(), u->text, v->term.size(), v->text) <
            std::make_tuple(best_u->term.size(), best_u->text, best_v->term.size(), best_v->text)) {
      best_u = u;
      best_v = v;
    }
  }
  if (best_u == nullptr) return std::nullopt;
  return std::make_pair(best_u->term, best_v->term);
}

}  // namespace semired
