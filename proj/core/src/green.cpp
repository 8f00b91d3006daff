#include <map>

#include "semired/semigroup.hpp"

namespace semired {

namespace {

using Ideal = std::vector<bool>;

std::vector<std::size_t> ids_by_key(const std::vector<Ideal>& keys) {
  std::map<Ideal, std::size_t> seen;
  std::vector<std::size_t> ids(keys.size());
  for (std::size_t e = 0; e < keys.size(); ++e) {
    auto [it, inserted] = seen.try_emplace(keys[e], seen.size());
    ids[e] = it->second;
  }
  return ids;
}

}  // namespace

GreenClasses green_classes(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  std::vector<Ideal> left(n, Ideal(n, false));
  std::vector<Ideal> right(n, Ideal(n, false));
  std::vector<Ideal> two_sided(n, Ideal(n, false));
  for (Element a = 0; a < n; ++a) {
    left[a][a] = right[a][a] = two_sided[a][a] = true;
    for (Element x = 0; x < n; ++x) {
      const Element xa = s.mul(x, a);
      const Element ax = s.mul(a, x);
      left[a][xa] = true;
      right[a][ax] = true;
      two_sided[a][xa] = true;
      two_sided[a][ax] = true;
      for (Element y = 0; y < n; ++y) two_sided[a][s.mul(xa, y)] = true;
    }
  }
  GreenClasses g;
  g.l = ids_by_key(left);
  g.r = ids_by_key(right);
  g.j = ids_by_key(two_sided);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> h_ids;
  g.h.resize(n);
  for (Element a = 0; a < n; ++a) {
    auto [it, inserted] = h_ids.try_emplace({g.r[a], g.l[a]}, h_ids.size());
    g.h[a] = it->second;
  }
  return g;
}

}  // namespace semired
