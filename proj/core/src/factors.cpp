#include "semired/factors.hpp"

#include "semired/error.hpp"

namespace semired {

bool FactorSummary::has_suffix(std::string_view s) const {
  return s.size() <= suffix.size() && std::string_view(suffix).substr(suffix.size() - s.size()) == s;
}

bool FactorSummary::has_prefix(std::string_view p) const {
  return p.size() <= prefix.size() && std::string_view(prefix).substr(0, p.size()) == p;
}

namespace {

void add_factors(std::set<Word>& into, std::string_view w, std::size_t bound) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; len <= bound && i + len <= w.size(); ++len) into.emplace(w.substr(i, len));
}

}  // namespace

FactorSummary summarize_word(std::string_view w, std::size_t bound) {
  FactorSummary s;
  s.bound = bound;
  add_factors(s.factors, w, bound);
  s.prefix = Word(w.substr(0, std::min(bound, w.size())));
  s.suffix = Word(w.substr(w.size() - std::min(bound, w.size())));
  return s;
}

FactorSummary combine(const FactorSummary& a, const FactorSummary& b) {
  if (a.bound != b.bound) raise(ErrorKind::InvalidArgument, "summaries use different bounds");
  const std::size_t k = a.bound;
  FactorSummary out;
  out.bound = k;
  out.factors = a.factors;
  out.factors.insert(b.factors.begin(), b.factors.end());
  // Factors straddling the seam lie inside suffix(a) . prefix(b). A prefix
  // shorter than k is the whole word, and likewise for suffixes.
  const Word seam = a.suffix + b.prefix;
  for (std::size_t i = 0; i < a.suffix.size(); ++i)
    for (std::size_t len = a.suffix.size() - i + 1; len <= k && i + len <= seam.size(); ++len)
      out.factors.insert(seam.substr(i, len));
  const Word head = a.prefix + b.prefix;
  out.prefix = a.prefix.size() < k ? head.substr(0, std::min(k, head.size())) : a.prefix;
  const Word tail = a.suffix + b.suffix;
  out.suffix = b.suffix.size() < k ? tail.substr(tail.size() - std::min(k, tail.size())) : b.suffix;
  return out;
}

namespace {

FactorSummary power(const FactorSummary& base, std::uint64_t m) {
  FactorSummary result = base;
  FactorSummary square = base;
  --m;
  while (m > 0) {
    if (m & 1U) result = combine(result, square);
    m >>= 1U;
    if (m > 0) square = combine(square, square);
  }
  return result;
}

FactorSummary summarize(const Term& t, std::size_t bound, std::size_t reps) {
  switch (t.kind()) {
    case Term::Kind::Letter:
      return summarize_word(std::string(1, t.symbol()), bound);
    case Term::Kind::Concat:
      return combine(summarize(t.left(), bound, reps), summarize(t.right(), bound, reps));
    case Term::Kind::FinitePower:
      return power(summarize(t.base(), bound, reps), t.exponent());
    case Term::Kind::OmegaPower:
    case Term::Kind::PrimeOmegaPower:
      return power(summarize(t.base(), bound, reps), reps);
  }
  raise(ErrorKind::InvalidArgument, "unknown term kind");
}

}  // namespace

FactorSummary bounded_factors(const Term& t, std::size_t bound, std::optional<std::size_t> omega_repetitions) {
  if (bound == 0) raise(ErrorKind::InvalidArgument, "factor bound must be positive");
  const std::size_t reps = omega_repetitions.value_or(bound + 2);
  if (reps == 0) raise(ErrorKind::InvalidArgument, "omega powers need at least one repetition");
  return summarize(t, bound, reps);
}

}  // namespace semired
