#include "semired/images.hpp"

#include "semired/error.hpp"

namespace semired {

namespace {

[[noreturn]] void prime_power_unsupported(const Term& t) {
  raise(ErrorKind::UnsupportedPrimePower,
        "prime omega power " + t.to_string() + " has no image in this fragment");
}

void add_scaled(AbVector& into, const AbVector& v, std::int64_t factor) {
  for (const auto& [letter, c] : v) {
    const std::int64_t sum = into[letter] + factor * c;
    if (sum == 0) into.erase(letter);
    else into[letter] = sum;
  }
}

}  // namespace

AbVector ab_image(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Letter:
      return {{t.symbol(), 1}};
    case Term::Kind::Concat: {
      AbVector v = ab_image(t.left());
      add_scaled(v, ab_image(t.right()), 1);
      return v;
    }
    case Term::Kind::OmegaPower: {
      AbVector v;
      add_scaled(v, ab_image(t.base()), t.offset());
      return v;
    }
    case Term::Kind::FinitePower: {
      AbVector v;
      add_scaled(v, ab_image(t.base()), static_cast<std::int64_t>(t.exponent()));
      return v;
    }
    case Term::Kind::PrimeOmegaPower:
      break;
  }
  prime_power_unsupported(t);
}

std::string format_ab_vector(const AbVector& v) {
  std::string out = "(";
  bool first = true;
  for (const auto& [letter, c] : v) {
    if (!first) out += ", ";
    first = false;
    out += letter;
    out += ':';
    out += std::to_string(c);
  }
  return out + ")";
}

ExponentValue operator+(ExponentValue a, ExponentValue b) {
  return ExponentValue(a.infinite_ || b.infinite_, a.value_ + b.value_);
}

ExponentValue ExponentValue::omega_power(std::int64_t j) const {
  if (!infinite_ && value_ == 0) return *this;
  return inf(value_ * j);
}

ExponentValue ExponentValue::times(std::uint64_t m) const {
  return ExponentValue(infinite_, value_ * static_cast<std::int64_t>(m));
}

std::string ExponentValue::to_string() const {
  if (!infinite_) return std::to_string(value_);
  if (value_ == 0) return "w";
  return value_ > 0 ? "w+" + std::to_string(value_) : "w-" + std::to_string(-value_);
}

namespace {

void put(ExponentVector& v, char letter, ExponentValue e) {
  if (e == ExponentValue::fin(0)) v.erase(letter);
  else v.insert_or_assign(letter, e);
}

}  // namespace

ExponentVector com_exponents(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Letter:
      return {{t.symbol(), ExponentValue::fin(1)}};
    case Term::Kind::Concat: {
      ExponentVector v = com_exponents(t.left());
      for (const auto& [letter, e] : com_exponents(t.right())) {
        const auto it = v.find(letter);
        put(v, letter, it == v.end() ? e : it->second + e);
      }
      return v;
    }
    case Term::Kind::OmegaPower: {
      ExponentVector v;
      for (const auto& [letter, e] : com_exponents(t.base())) put(v, letter, e.omega_power(t.offset()));
      return v;
    }
    case Term::Kind::FinitePower: {
      ExponentVector v;
      for (const auto& [letter, e] : com_exponents(t.base())) put(v, letter, e.times(t.exponent()));
      return v;
    }
    case Term::Kind::PrimeOmegaPower:
      break;
  }
  prime_power_unsupported(t);
}

std::string format_exponent_vector(const ExponentVector& v) {
  std::string out = "(";
  bool first = true;
  for (const auto& [letter, e] : v) {
    if (!first) out += ", ";
    first = false;
    out += letter;
    out += ':';
    out += e.to_string();
  }
  return out + ")";
}

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (const FreeLetter& l : w) {
    if (!out.empty() && out.back().letter == l.letter && out.back().inverse != l.inverse) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (FreeLetter& l : out) l.inverse = !l.inverse;
  return out;
}

namespace {

FreeWord free_power(const FreeWord& w, std::int64_t k) {
  const FreeWord unit = k < 0 ? free_inverse(w) : w;
  const std::uint64_t times = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  if (unit.empty() || times == 0) return {};
  // Cancellation only happens at the seams, so reducing after each append
  // keeps the intermediate words short.
  FreeWord out;
  for (std::uint64_t i = 0; i < times; ++i) {
    out.insert(out.end(), unit.begin(), unit.end());
    out = free_reduce(out);
  }
  return out;
}

}  // namespace

FreeWord free_group_normal_form(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Letter:
      return {FreeLetter{t.symbol(), false}};
    case Term::Kind::Concat: {
      FreeWord w = free_group_normal_form(t.left());
      const FreeWord r = free_group_normal_form(t.right());
      w.insert(w.end(), r.begin(), r.end());
      return free_reduce(w);
    }
    case Term::Kind::OmegaPower:
      return free_power(free_group_normal_form(t.base()), t.offset());
    case Term::Kind::FinitePower:
      return free_power(free_group_normal_form(t.base()), static_cast<std::int64_t>(t.exponent()));
    case Term::Kind::PrimeOmegaPower:
      break;
  }
  prime_power_unsupported(t);
}

std::string format_free_word(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const FreeLetter& l : w) {
    out += l.letter;
    if (l.inverse) out += "^-1";
  }
  return out;
}

}  // namespace semired
