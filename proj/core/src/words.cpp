#include "semired/words.hpp"

#include "semired/error.hpp"

namespace semired {

bool scattered_subword(std::string_view u, std::string_view v) {
  std::size_t i = 0;
  for (char c : v) {
    if (i < u.size() && u[i] == c) ++i;
  }
  return i == u.size();
}

std::optional<std::vector<std::size_t>> greedy_embedding(std::string_view u, std::string_view v) {
  std::vector<std::size_t> positions;
  positions.reserve(u.size());
  std::size_t j = 0;
  for (char c : u) {
    while (j < v.size() && v[j] != c) ++j;
    if (j == v.size()) return std::nullopt;
    positions.push_back(j++);
  }
  return positions;
}

bool is_factor(std::string_view u, std::string_view v) { return v.find(u) != std::string_view::npos; }

std::size_t count_occurrences(std::string_view w, std::string_view f) {
  if (f.empty()) return w.size() + 1;
  std::size_t count = 0;
  for (auto pos = w.find(f); pos != std::string_view::npos; pos = w.find(f, pos + 1)) ++count;
  return count;
}

std::vector<std::size_t> letter_counts(std::string_view w, std::string_view alphabet) {
  std::vector<std::size_t> counts(alphabet.size(), 0);
  for (char c : w) {
    const auto pos = alphabet.find(c);
    if (pos != std::string_view::npos) ++counts[pos];
  }
  return counts;
}

std::size_t disjoint_occurrences(std::string_view w, std::string_view f) {
  if (f.empty()) raise(ErrorKind::InvalidArgument, "occurrences of the empty word are not counted");
  std::size_t count = 0;
  for (auto pos = w.find(f); pos != std::string_view::npos; pos = w.find(f, pos + f.size())) ++count;
  return count;
}

Word thue_morse_step(std::string_view w) {
  Word out;
  out.reserve(2 * w.size());
  for (char c : w) {
    if (c == 'x') out += "xy";
    else if (c == 'y') out += "yx";
    else raise(ErrorKind::InvalidArgument, std::string("letter '") + c + "' is not in {x, y}");
  }
  return out;
}

Word ptm_iterate(std::size_t n) {
  if (n > 30) raise(ErrorKind::SizeTooLarge, "mu^n(x) is capped at n = 30");
  Word w = "x";
  for (std::size_t i = 0; i < n; ++i) w = thue_morse_step(w);
  return w;
}

bool is_cube_free(std::string_view w) {
  // A cube of period p starting at i is a run of 2p consecutive positions j
  // with w[j] == w[j + p].
  const std::size_t n = w.size();
  for (std::size_t p = 1; 3 * p <= n; ++p) {
    std::size_t run = 0;
    for (std::size_t j = 0; j + p < n; ++j) {
      run = w[j] == w[j + p] ? run + 1 : 0;
      if (run >= 2 * p) return false;
    }
  }
  return true;
}

}  // namespace semired
