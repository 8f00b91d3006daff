#include "semired/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "semired/error.hpp"

namespace semired {

FiniteSemigroup metacyclic_group(std::size_t m, std::size_t n, std::size_t r, std::size_t t) {
  if (m == 0 || n == 0) raise(ErrorKind::InvalidArgument, "metacyclic parameters must be positive");
  std::size_t rn = 1;
  for (std::size_t k = 0; k < n; ++k) rn = rn * r % m;
  if (rn != 1 % m || (t * (r + m - 1)) % m != 0) {
    raise(ErrorKind::InvalidArgument, "inconsistent metacyclic parameters");
  }
  std::vector<std::size_t> r_pow(n, 1 % m);
  for (std::size_t j = 1; j < n; ++j) r_pow[j] = r_pow[j - 1] * r % m;
  const std::size_t order = m * n;
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
      std::size_t a = i + k * r_pow[j];
      std::size_t b = j + l;
      if (b >= n) {
        b -= n;
        a += t;
      }
      table[x * order + y] = static_cast<Element>(a % m + m * b);
    }
  SemigroupOptions options;
  options.identity = 0;
  return FiniteSemigroup(order, std::move(table), std::move(options));
}

FiniteSemigroup dihedral_group(std::size_t k) { return metacyclic_group(k, 2, k - 1, 0); }

FiniteSemigroup semidirect_product(const FiniteSemigroup& normal, const FiniteSemigroup& acting,
                                   const std::vector<std::vector<Element>>& action) {
  const std::size_t nn = normal.size();
  const std::size_t nh = acting.size();
  if (action.size() != nh) raise(ErrorKind::InvalidArgument, "action needs one map per acting element");
  for (const auto& phi : action) {
    if (phi.size() != nn) raise(ErrorKind::InvalidArgument, "action map has wrong size");
    for (Element x = 0; x < nn; ++x)
      for (Element y = 0; y < nn; ++y)
        if (phi[normal.mul(x, y)] != normal.mul(phi[x], phi[y])) {
          raise(ErrorKind::InvalidArgument, "action is not by endomorphisms");
        }
  }
  for (Element h = 0; h < nh; ++h)
    for (Element k = 0; k < nh; ++k)
      for (Element x = 0; x < nn; ++x)
        if (action[acting.mul(h, k)][x] != action[h][action[k][x]]) {
          raise(ErrorKind::InvalidArgument, "action is not a homomorphism");
        }
  const std::size_t order = nn * nh;
  std::vector<Element> table(order * order);
  for (std::size_t p = 0; p < order; ++p)
    for (std::size_t q = 0; q < order; ++q) {
      const Element x1 = static_cast<Element>(p / nh), h1 = static_cast<Element>(p % nh);
      const Element x2 = static_cast<Element>(q / nh), h2 = static_cast<Element>(q % nh);
      table[p * order + q] =
          static_cast<Element>(normal.mul(x1, action[h1][x2]) * nh + acting.mul(h1, h2));
    }
  SemigroupOptions options;
  if (normal.identity() && acting.identity()) {
    options.identity = static_cast<Element>(*normal.identity() * nh + *acting.identity());
  }
  return FiniteSemigroup(order, std::move(table), std::move(options));
}

FiniteSemigroup permutation_group(std::size_t degree,
                                  const std::vector<std::vector<std::size_t>>& generators) {
  using Perm = std::vector<std::size_t>;
  Perm identity(degree);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  for (const Perm& g : generators) {
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity) raise(ErrorKind::InvalidArgument, "generator is not a permutation");
  }
  auto compose = [](const Perm& f, const Perm& g) {
    Perm out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
    return out;
  };
  std::vector<Perm> elements{identity};
  std::map<Perm, Element> index{{identity, 0}};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const Perm& g : generators) {
      Perm next = compose(elements[k], g);
      if (index.emplace(next, static_cast<Element>(elements.size())).second) {
        elements.push_back(std::move(next));
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  SemigroupOptions options;
  options.identity = 0;
  return FiniteSemigroup(n, std::move(table), std::move(options));
}

bool is_group(const FiniteSemigroup& s) {
  const auto one = s.monoid_completion().identity();
  if (s.monoid_completion().size() != s.size()) return false;
  for (Element a = 0; a < s.size(); ++a) {
    bool invertible = false;
    for (Element b = 0; b < s.size() && !invertible; ++b) invertible = s.mul(a, b) == *one;
    if (!invertible) return false;
  }
  return true;
}

Element group_inverse(const FiniteSemigroup& g, Element x) {
  const Element one = idempotent_power(g, x);
  for (Element y = 0; y < g.size(); ++y)
    if (g.mul(x, y) == one && g.mul(y, x) == one) return y;
  raise(ErrorKind::InvalidArgument, "element has no inverse");
}

namespace {

std::vector<std::size_t> element_orders(const FiniteSemigroup& g) {
  std::vector<std::size_t> orders(g.size());
  for (Element x = 0; x < g.size(); ++x) orders[x] = monogenic_data(g, x).period;
  return orders;
}

// Greedy generating set: repeatedly add an element of maximal order outside
// the subgroup generated so far.
std::vector<Element> generating_set(const FiniteSemigroup& g, const std::vector<std::size_t>& orders) {
  std::vector<Element> gens;
  std::vector<bool> inside(g.size(), false);
  const Element one = *g.monoid_completion().identity();
  inside[one] = true;
  std::vector<Element> members{one};
  while (members.size() < g.size()) {
    Element best = 0;
    std::size_t best_order = 0;
    for (Element x = 0; x < g.size(); ++x)
      if (!inside[x] && orders[x] > best_order) {
        best = x;
        best_order = orders[x];
      }
    gens.push_back(best);
    for (std::size_t k = 0; k < members.size(); ++k)
      for (Element s : gens) {
        const Element next = g.mul(members[k], s);
        if (!inside[next]) {
          inside[next] = true;
          members.push_back(next);
        }
      }
  }
  return gens;
}

bool extend_to_isomorphism(const FiniteSemigroup& g, const FiniteSemigroup& h,
                           const std::vector<Element>& gens, const std::vector<Element>& images) {
  const std::size_t n = g.size();
  constexpr Element kNone = ~Element{0};
  std::vector<Element> map(n, kNone);
  std::vector<bool> used(n, false);
  const Element g_one = *g.monoid_completion().identity();
  const Element h_one = *h.monoid_completion().identity();
  map[g_one] = h_one;
  used[h_one] = true;
  std::queue<Element> todo;
  todo.push(g_one);
  while (!todo.empty()) {
    const Element x = todo.front();
    todo.pop();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element gx = g.mul(x, gens[k]);
      const Element hx = h.mul(map[x], images[k]);
      if (map[gx] == kNone) {
        if (used[hx]) return false;
        map[gx] = hx;
        used[hx] = true;
        todo.push(gx);
      } else if (map[gx] != hx) {
        return false;
      }
    }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
  return true;
}

bool search_images(const FiniteSemigroup& g, const FiniteSemigroup& h,
                   const std::vector<Element>& gens, const std::vector<std::size_t>& g_orders,
                   const std::vector<std::size_t>& h_orders, std::vector<Element>& images) {
  if (images.size() == gens.size()) return extend_to_isomorphism(g, h, gens, images);
  const std::size_t want = g_orders[gens[images.size()]];
  for (Element y = 0; y < h.size(); ++y) {
    if (h_orders[y] != want) continue;
    images.push_back(y);
    if (search_images(g, h, gens, g_orders, h_orders, images)) return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

bool groups_isomorphic(const FiniteSemigroup& g, const FiniteSemigroup& h) {
  if (g.size() != h.size()) return false;
  const auto g_orders = element_orders(g);
  const auto h_orders = element_orders(h);
  auto sorted_g = g_orders;
  auto sorted_h = h_orders;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) return false;
  if (g.is_commutative() != h.is_commutative()) return false;
  const auto gens = generating_set(g, g_orders);
  std::vector<Element> images;
  return search_images(g, h, gens, g_orders, h_orders, images);
}

namespace {

// Automorphism of a cyclic group Z_m (element i means i) given by i -> r i.
std::vector<Element> multiply_by(std::size_t m, std::size_t r) {
  std::vector<Element> phi(m);
  for (std::size_t i = 0; i < m; ++i) phi[i] = static_cast<Element>(i * r % m);
  return phi;
}

// Action of the cyclic group Z_k on N through powers of one automorphism.
std::vector<std::vector<Element>> cyclic_action(const std::vector<Element>& phi, std::size_t k) {
  std::vector<std::vector<Element>> action(k);
  action[0].resize(phi.size());
  std::iota(action[0].begin(), action[0].end(), Element{0});
  for (std::size_t j = 1; j < k; ++j) {
    action[j].resize(phi.size());
    for (std::size_t x = 0; x < phi.size(); ++x) action[j][x] = phi[action[j - 1][x]];
  }
  return action;
}

std::vector<NamedGroup> build_small_groups() {
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, FiniteSemigroup g) { out.push_back({std::move(name), std::move(g)}); };
  auto C = [](std::size_t k) { return cyclic_group(k); };
  auto D = [](std::size_t k) { return dihedral_group(k); };
  auto Dic = [](std::size_t k) { return metacyclic_group(2 * k, 2, 2 * k - 1, k); };
  const FiniteSemigroup S3 = D(3);
  const FiniteSemigroup Q8 = Dic(2);
  const FiniteSemigroup A4 = permutation_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
  const FiniteSemigroup D4 = D(4);

  // Nonzero vectors of F_3^2 permuted by [[1,1],[0,1]] and [[0,2],[1,0]].
  auto sl23 = [] {
    std::vector<std::pair<int, int>> vectors;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != 0 || b != 0) vectors.emplace_back(a, b);
    auto as_perm = [&](int m00, int m01, int m10, int m11) {
      std::vector<std::size_t> perm(vectors.size());
      for (std::size_t i = 0; i < vectors.size(); ++i) {
        const auto [a, b] = vectors[i];
        const std::pair<int, int> image{(m00 * a + m01 * b) % 3, (m10 * a + m11 * b) % 3};
        perm[i] = static_cast<std::size_t>(std::find(vectors.begin(), vectors.end(), image) - vectors.begin());
      }
      return perm;
    };
    return permutation_group(vectors.size(), {as_perm(1, 1, 0, 1), as_perm(0, 2, 1, 0)});
  };

  add("C1", C(1));
  add("C2", C(2));
  add("C3", C(3));
  add("C4", C(4));
  add("C2xC2", direct_product(C(2), C(2)));
  add("C5", C(5));
  add("C6", C(6));
  add("S3", S3);
  add("C7", C(7));
  add("C8", C(8));
  add("C4xC2", direct_product(C(4), C(2)));
  add("C2xC2xC2", direct_product(direct_product(C(2), C(2)), C(2)));
  add("D8", D4);
  add("Q8", Q8);
  add("C9", C(9));
  add("C3xC3", direct_product(C(3), C(3)));
  add("C10", C(10));
  add("D10", D(5));
  add("C11", C(11));
  add("C12", C(12));
  add("C6xC2", direct_product(C(6), C(2)));
  add("A4", A4);
  add("D12", D(6));
  add("Dic3", Dic(3));
  add("C13", C(13));
  add("C14", C(14));
  add("D14", D(7));
  add("C15", C(15));
  add("C16", C(16));
  add("C8xC2", direct_product(C(8), C(2)));
  add("C4xC4", direct_product(C(4), C(4)));
  add("C4xC2xC2", direct_product(direct_product(C(4), C(2)), C(2)));
  add("C2^4", direct_product(direct_product(C(2), C(2)), direct_product(C(2), C(2))));
  add("D16", D(8));
  add("SD16", metacyclic_group(8, 2, 3, 0));
  add("Q16", Dic(4));
  add("M16", metacyclic_group(8, 2, 5, 0));
  add("C4:C4", metacyclic_group(4, 4, 3, 0));
  {
    // C2 x C2 with the generator of C4 swapping the two factors.
    const FiniteSemigroup v = direct_product(C(2), C(2));
    add("(C2xC2):C4", semidirect_product(v, C(4), cyclic_action({0, 2, 1, 3}, 4)));
  }
  add("C2xD8", direct_product(C(2), D4));
  add("C2xQ8", direct_product(C(2), Q8));
  {
    // Pauli group: (C4 x C2) x| C2 with (c, x) -> (c + 2x, x).
    const FiniteSemigroup n = direct_product(C(4), C(2));
    std::vector<Element> phi(8);
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t x = 0; x < 2; ++x) phi[c * 2 + x] = static_cast<Element>(((c + 2 * x) % 4) * 2 + x);
    add("Pauli", semidirect_product(n, C(2), cyclic_action(phi, 2)));
  }
  add("C17", C(17));
  add("C18", C(18));
  add("C6xC3", direct_product(C(6), C(3)));
  add("D18", D(9));
  add("C3xS3", direct_product(C(3), S3));
  {
    const FiniteSemigroup n = direct_product(C(3), C(3));
    std::vector<Element> inversion(9);
    for (Element x = 0; x < 9; ++x) inversion[x] = group_inverse(n, x);
    add("(C3xC3):C2", semidirect_product(n, C(2), cyclic_action(inversion, 2)));
  }
  add("C19", C(19));
  add("C20", C(20));
  add("C10xC2", direct_product(C(10), C(2)));
  add("D20", D(10));
  add("Dic5", Dic(5));
  add("F20", metacyclic_group(5, 4, 2, 0));
  add("C21", C(21));
  add("C7:C3", metacyclic_group(7, 3, 2, 0));
  add("C22", C(22));
  add("D22", D(11));
  add("C23", C(23));
  add("C24", C(24));
  add("C12xC2", direct_product(C(12), C(2)));
  add("C6xC2xC2", direct_product(direct_product(C(6), C(2)), C(2)));
  add("S4", permutation_group(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}));
  add("SL(2,3)", sl23());
  add("C3:C8", metacyclic_group(3, 8, 2, 0));
  add("Dic6", Dic(6));
  add("C4xS3", direct_product(C(4), S3));
  add("D24", D(12));
  add("C2xDic3", direct_product(C(2), Dic(3)));
  {
    // D8 = <a, b> acting on C3 by inversion through a^i b^j -> i mod 2, whose
    // kernel is a Klein four-group.
    std::vector<std::vector<Element>> action(8);
    for (Element h = 0; h < 8; ++h) action[h] = (h % 4) % 2 == 0 ? multiply_by(3, 1) : multiply_by(3, 2);
    add("C3:D8", semidirect_product(C(3), D4, action));
  }
  add("C3xD8", direct_product(C(3), D4));
  add("C3xQ8", direct_product(C(3), Q8));
  add("C2xA4", direct_product(C(2), A4));
  add("C2xC2xS3", direct_product(direct_product(C(2), C(2)), S3));
  std::stable_sort(out.begin(), out.end(), [](const NamedGroup& a, const NamedGroup& b) {
    return a.group.size() < b.group.size();
  });
  return out;
}

}  // namespace

const std::vector<NamedGroup>& small_groups() {
  static const std::vector<NamedGroup> groups = build_small_groups();
  return groups;
}

std::vector<NamedGroup> small_abelian_groups(std::size_t max_order) {
  std::vector<NamedGroup> out;
  for (const auto& g : small_groups())
    if (g.group.size() <= max_order && g.group.is_commutative()) out.push_back(g);
  return out;
}

}  // namespace semired
