#include "jetinv/embedding.hpp"

#include "jetinv/linalg.hpp"
#include "jetinv/reparam.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jetinv {

SymIndex sym_merge(const SymIndex& a, const SymIndex& b) {
  SymIndex out;
  out.idx.resize(a.idx.size() + b.idx.size());
  std::merge(a.idx.begin(), a.idx.end(), b.idx.begin(), b.idx.end(), out.idx.begin());
  return out;
}

void SymVector::add(const SymIndex& i, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coords.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords.erase(it);
  }
}

SymVector SymVector::from_linear(const Vector& v) {
  SymVector s;
  for (std::size_t i = 0; i < v.size(); ++i) s.add(SymIndex{{static_cast<unsigned>(i + 1)}}, v[i]);
  return s;
}

SymVector operator+(const SymVector& a, const SymVector& b) {
  SymVector s = a;
  for (const auto& [i, c] : b.coords) s.add(i, c);
  return s;
}

SymVector operator*(const Rational& s, const SymVector& a) {
  SymVector out;
  if (s == 0) return out;
  out = a;
  for (auto& [i, c] : out.coords) c *= s;
  return out;
}

SymVector sym_product(const SymVector& a, const SymVector& b) {
  SymVector out;
  for (const auto& [ia, ca] : a.coords)
    for (const auto& [ib, cb] : b.coords) out.add(sym_merge(ia, ib), ca * cb);
  return out;
}

Rational PluckerVector::at(const PluckerKey& key) const {
  auto it = coords.find(key);
  return it == coords.end() ? Rational(0) : it->second;
}

std::vector<SymIndex> sym_basis(unsigned n, unsigned k) {
  if (n < 1 || k < 1) throw std::invalid_argument("sym_basis needs n, k >= 1");
  std::vector<SymIndex> out;
  for (unsigned s = 1; s <= k; ++s) {
    std::vector<unsigned> cur(s, 1);
    while (true) {
      out.push_back(SymIndex{cur});
      // Next non-decreasing sequence over 1..n in lexicographic order.
      int pos = static_cast<int>(s) - 1;
      while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n) --pos;
      if (pos < 0) break;
      const unsigned v = cur[static_cast<std::size_t>(pos)] + 1;
      for (std::size_t q = static_cast<std::size_t>(pos); q < s; ++q) cur[q] = v;
    }
  }
  return out;
}

std::vector<SymVector> phi(const Jet& jet) {
  const unsigned k = jet.k();
  std::vector<SymVector> raw;  // raw[i-1] = f^(i)
  for (unsigned i = 1; i <= k; ++i) raw.push_back(SymVector::from_linear(jet.derivative(i)));
  std::vector<SymVector> out;
  for (unsigned d = 1; d <= k; ++d) {
    SymVector col;
    for (unsigned s = 1; s <= d; ++s) {
      for (const auto& comp : compositions(d, s)) {
        Rational weight = 1;
        SymVector prod = raw[comp[0] - 1];
        weight /= factorial(comp[0]);
        for (std::size_t t = 1; t < comp.size() && !prod.is_zero(); ++t) {
          prod = sym_product(prod, raw[comp[t] - 1]);
          weight /= factorial(comp[t]);
        }
        col = col + weight * prod;
      }
    }
    out.push_back(std::move(col));
  }
  return out;
}

namespace {

std::vector<SymIndex> support_universe(const std::vector<SymVector>& cols) {
  std::set<SymIndex> u;
  for (const auto& c : cols)
    for (const auto& [i, _] : c.coords) u.insert(i);
  return {u.begin(), u.end()};
}

// Calls f(subset) for every increasing size-r subset of {0..n-1}.
template <typename F>
void for_each_subset(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> s(r);
  for (std::size_t i = 0; i < r; ++i) s[i] = i;
  while (true) {
    f(s);
    std::size_t i = r;
    while (i > 0 && s[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < r; ++j) s[j] = s[j - 1] + 1;
  }
}

PluckerVector minors(const std::vector<Vector>& dense_cols, const std::vector<SymIndex>& universe) {
  const std::size_t k = dense_cols.size();
  PluckerVector p;
  p.k = static_cast<unsigned>(k);
  ExactMatrix sub(k, k);
  for_each_subset(universe.size(), k, [&](const std::vector<std::size_t>& rows) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub(a, b) = dense_cols[b][rows[a]];
    Rational det = determinant(sub);
    if (det == 0) return;
    PluckerKey key;
    key.reserve(k);
    for (std::size_t r : rows) key.push_back(universe[r]);
    p.coords.emplace(std::move(key), std::move(det));
  });
  return p;
}

// Coordinates indexed by positions in the universe of p.
struct PositionalPlucker {
  std::vector<SymIndex> universe;
  std::map<std::vector<std::size_t>, Rational> coords;

  explicit PositionalPlucker(const PluckerVector& p) {
    std::set<SymIndex> u;
    for (const auto& [key, _] : p.coords) u.insert(key.begin(), key.end());
    universe.assign(u.begin(), u.end());
    for (const auto& [key, c] : p.coords) {
      std::vector<std::size_t> pos;
      for (const auto& s : key)
        pos.push_back(static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), s) - universe.begin()));
      coords.emplace(std::move(pos), c);
    }
  }

  // Value at an arbitrary ordered tuple: sign of the sorting permutation
  // times the stored coordinate, or 0 on a repeated index.
  Rational signed_at(std::vector<std::size_t> tuple) const {
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i) {
      for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
        if (tuple[j - 1] == tuple[j]) return 0;
        std::swap(tuple[j - 1], tuple[j]);
        sign = -sign;
      }
    }
    auto it = coords.find(tuple);
    if (it == coords.end()) return 0;
    return sign > 0 ? it->second : Rational(-it->second);
  }

  Rational relation(const std::vector<std::size_t>& i_set, const std::vector<std::size_t>& j_set) const {
    Rational total = 0;
    for (std::size_t l = 0; l < j_set.size(); ++l) {
      std::vector<std::size_t> left = i_set;
      left.push_back(j_set[l]);
      std::vector<std::size_t> right;
      for (std::size_t t = 0; t < j_set.size(); ++t)
        if (t != l) right.push_back(j_set[t]);
      const Rational a = signed_at(left);
      if (a == 0) continue;
      const Rational b = signed_at(right);
      if (b == 0) continue;
      if (l % 2 == 0) total += a * b;
      else total -= a * b;
    }
    return total;
  }
};

}  // namespace

PluckerVector plucker(const std::vector<SymVector>& cols) {
  if (cols.empty()) throw std::invalid_argument("plucker needs at least one vector");
  const auto universe = support_universe(cols);
  std::vector<Vector> dense;
  for (const auto& c : cols) {
    Vector v(universe.size());
    for (const auto& [i, q] : c.coords)
      v[static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), i) - universe.begin())] = q;
    dense.push_back(std::move(v));
  }
  return minors(dense, universe);
}

PluckerVector z_point(unsigned n, unsigned k) {
  if (k > n) throw std::domain_error("z_point requires k <= n");
  ExactMatrix raw(n, k);
  for (unsigned j = 0; j < k; ++j) raw(j, j) = 1;
  return plucker(phi(Jet::from_derivatives(raw)));
}

bool projective_equal(const PluckerVector& p, const PluckerVector& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("projective comparison of a zero vector");
  if (p.coords.size() != q.coords.size()) return false;
  const Rational ratio = q.coords.begin()->second / p.coords.begin()->second;
  auto it = q.coords.begin();
  for (const auto& [key, c] : p.coords) {
    if (it->first != key || it->second != ratio * c) return false;
    ++it;
  }
  return true;
}

bool invariance_check(const Jet& jet, const Reparam& g) {
  if (!is_regular(jet)) throw std::domain_error("invariance check is only defined on regular jets");
  return projective_equal(plucker(phi(act(jet, g))), plucker(phi(jet)));
}

bool a_nk_membership(const PluckerVector& p) {
  for (const auto& [key, c] : p.coords) {
    if (std::all_of(key.begin(), key.end(), [](const SymIndex& s) { return s.size() == 1; })) return true;
  }
  return false;
}

std::vector<SymVector> gl_action(const ExactMatrix& g, const std::vector<SymVector>& vecs) {
  const std::size_t n = g.rows();
  if (g.cols() != n || rank(g) != n) throw std::domain_error("gl_action needs an invertible n x n matrix");
  std::vector<SymVector> images;  // g e_i
  for (std::size_t i = 0; i < n; ++i) images.push_back(SymVector::from_linear(g.column(i)));
  std::vector<SymVector> out;
  for (const auto& v : vecs) {
    SymVector acc;
    for (const auto& [idx, c] : v.coords) {
      SymVector term;
      term.add(SymIndex{}, c);
      for (unsigned i : idx.idx) {
        if (i < 1 || i > n) throw std::invalid_argument("SymIndex entry exceeds matrix size");
        term = sym_product(term, images[i - 1]);
      }
      acc = acc + term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::size_t plucker_relation_count(const PluckerVector& p) {
  if (p.k < 2) return 0;
  const PositionalPlucker pp(p);
  const auto n = static_cast<unsigned>(pp.universe.size());
  const Integer count = binomial(n, p.k - 1) * binomial(n, p.k + 1);
  return count.fits_ulong_p() ? count.get_ui() : static_cast<std::size_t>(-1);
}

std::size_t plucker_relation_violations(const PluckerVector& p, std::size_t max_relations, std::uint64_t seed) {
  if (p.k < 2 || p.is_zero()) return 0;
  const PositionalPlucker pp(p);
  const std::size_t n = pp.universe.size();
  std::size_t violations = 0;
  if (plucker_relation_count(p) <= max_relations) {
    for_each_subset(n, p.k - 1, [&](const std::vector<std::size_t>& i_set) {
      for_each_subset(n, p.k + 1, [&](const std::vector<std::size_t>& j_set) {
        if (pp.relation(i_set, j_set) != 0) ++violations;
      });
    });
    return violations;
  }
  Sampler rng(seed);
  auto random_subset = [&](std::size_t r) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < r; ++i) {
      const auto j = static_cast<std::size_t>(rng.integer(static_cast<std::int64_t>(i), static_cast<std::int64_t>(n - 1)));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(r);
    std::sort(pool.begin(), pool.end());
    return pool;
  };
  for (std::size_t t = 0; t < max_relations; ++t) {
    if (pp.relation(random_subset(p.k - 1), random_subset(p.k + 1)) != 0) ++violations;
  }
  return violations;
}

bool is_decomposable(const PluckerVector& p) {
  if (p.is_zero()) throw std::invalid_argument("decomposability of the zero vector");
  if (p.k <= 1) return true;
  const PositionalPlucker pp(p);
  const auto& [anchor, anchor_value] = *pp.coords.begin();
  const std::size_t n = pp.universe.size();
  std::vector<Vector> w(p.k, Vector(n));
  for (std::size_t t = 0; t < p.k; ++t) {
    for (std::size_t j = 0; j < n; ++j) {
      auto tuple = anchor;
      tuple[t] = j;
      w[t][j] = pp.signed_at(tuple);
    }
  }
  const PluckerVector wedge = minors(w, pp.universe);
  Rational scale = 1;
  for (unsigned i = 1; i < p.k; ++i) scale *= anchor_value;
  if (wedge.coords.size() != p.coords.size()) return false;
  for (const auto& [key, c] : p.coords)
    if (wedge.at(key) != scale * c) return false;
  return true;
}

}  // namespace jetinv
