#include "semired/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "semired/error.hpp"

namespace semired {

namespace {

constexpr Element kUnset = ~Element{0};

class TableSearch {
 public:
  TableSearch(std::size_t n, const std::function<void(const FiniteSemigroup&)>& visit)
      : n_(n), visit_(visit), table_(n * n, kUnset) {
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), Element{0});
    do {
      perms_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  void run() { fill(0); }

 private:
  Element at(Element a, Element b) const { return table_[a * n_ + b]; }

  // Associativity of every triple whose four products are already known and
  // which involves the cell (a, b) just written.
  bool consistent(Element a, Element b) const {
    const Element v = at(a, b);
    for (Element z = 0; z < n_; ++z) {
      // (a b) z versus a (b z)
      const Element vz = at(v, z);
      const Element bz = at(b, z);
      if (vz != kUnset && bz != kUnset) {
        const Element a_bz = at(a, bz);
        if (a_bz != kUnset && a_bz != vz) return false;
      }
      // (z a) b versus z (a b)
      const Element za = at(z, a);
      const Element zv = at(z, v);
      if (za != kUnset && zv != kUnset) {
        const Element za_b = at(za, b);
        if (za_b != kUnset && za_b != zv) return false;
      }
    }
    // Cell (a, b) used as an outer product: (x y) b with x y = a, and
    // a (y z) with y z = b.
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        if (at(x, y) == a) {
          const Element yb = at(y, b);
          if (yb != kUnset) {
            const Element x_yb = at(x, yb);
            if (x_yb != kUnset && x_yb != v) return false;
          }
        }
        if (at(x, y) == b) {
          const Element ax = at(a, x);
          if (ax != kUnset) {
            const Element ax_y = at(ax, y);
            if (ax_y != kUnset && ax_y != v) return false;
          }
        }
      }
    return true;
  }

  bool is_canonical() const {
    std::vector<Element> inverse(n_);
    for (const auto& perm : perms_) {
      for (Element i = 0; i < n_; ++i) inverse[perm[i]] = i;
      for (std::size_t cell = 0; cell < n_ * n_; ++cell) {
        const Element i = static_cast<Element>(cell / n_);
        const Element j = static_cast<Element>(cell % n_);
        const Element relabeled = perm[at(inverse[i], inverse[j])];
        if (relabeled < table_[cell]) return false;
        if (relabeled > table_[cell]) break;
      }
    }
    return true;
  }

  void fill(std::size_t cell) {
    if (cell == n_ * n_) {
      if (is_canonical()) visit_(FiniteSemigroup(n_, table_));
      return;
    }
    const auto a = static_cast<Element>(cell / n_);
    const auto b = static_cast<Element>(cell % n_);
    for (Element v = 0; v < n_; ++v) {
      table_[cell] = v;
      if (consistent(a, b)) fill(cell + 1);
    }
    table_[cell] = kUnset;
  }

  std::size_t n_;
  const std::function<void(const FiniteSemigroup&)>& visit_;
  std::vector<Element> table_;
  std::vector<std::vector<Element>> perms_;
};

void check_order(std::size_t n, EnumerationOptions options) {
  const std::size_t limit = options.allow_order_five ? kMaxEnumerationOrder : kDefaultEnumerationLimit;
  if (n == 0 || n > limit) {
    raise(ErrorKind::SizeTooLarge, "enumeration supports orders 1.." + std::to_string(limit) +
                                       (options.allow_order_five ? "" : " (5 needs an explicit opt-in)") +
                                       ", got " + std::to_string(n));
  }
}

}  // namespace

void for_each_semigroup(std::size_t n,
                        const std::function<void(const FiniteSemigroup&)>& visit,
                        EnumerationOptions options) {
  check_order(n, options);
  TableSearch search(n, visit);
  search.run();
}

std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t n,
                                                  const SemigroupPredicate& predicate,
                                                  EnumerationOptions options) {
  std::vector<FiniteSemigroup> out;
  for_each_semigroup(
      n,
      [&](const FiniteSemigroup& s) {
        if (!predicate || predicate(s)) out.push_back(s);
      },
      options);
  return out;
}

std::vector<FiniteSemigroup> enumerate_semigroups_up_to(std::size_t max_order,
                                                        const SemigroupPredicate& predicate,
                                                        EnumerationOptions options) {
  check_order(max_order, options);
  std::vector<FiniteSemigroup> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto part = enumerate_semigroups(n, predicate, options);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Element> canonical_table(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  if (n > 8) raise(ErrorKind::SizeTooLarge, "canonical form is limited to order 8");
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<Element> best(s.table().begin(), s.table().end());
  std::vector<Element> candidate(n * n);
  do {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) candidate[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
    if (candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace semired
