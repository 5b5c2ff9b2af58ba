#include "jetinv/invariants.hpp"

#include "jetinv/lie.hpp"
#include "jetinv/linalg.hpp"
#include "jetinv/sampling.hpp"

#include <algorithm>
#include <map>

namespace jetinv {

CapExceeded::CapExceeded(unsigned k_, unsigned n_, unsigned m_, const Integer& count_, std::size_t cap_)
    : std::runtime_error("monomial space for (k=" + std::to_string(k_) + ", n=" + std::to_string(n_) +
                         ", m=" + std::to_string(m_) + ") has " + count_.get_str() +
                         " monomials, above the cap of " + std::to_string(cap_)),
      k(k_), n(n_), m(m_), count(count_), cap(cap_) {}

WeightedPoly Derivation::apply(const WeightedPoly& p) const {
  WeightedPoly out(p.k, p.n);
  for (const auto& [e, c] : p.poly.terms()) {
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0 || images[v].empty()) continue;
      Exponents base = e;
      --base[v];
      for (const auto& [u, coeff] : images[v]) {
        Exponents t = base;
        ++t[u];
        out.poly.add_term(t, c * coeff * e[v]);
      }
    }
  }
  return out;
}

std::vector<Derivation> unipotent_derivations(unsigned k, unsigned n) {
  std::vector<Derivation> out;
  if (k < 2) return out;
  const auto basis = lie_basis(k);
  const std::size_t nv = static_cast<std::size_t>(k) * n;
  for (unsigned i = 2; i <= k; ++i) {
    const ExactMatrix& e = basis[i - 1].matrix;
    Derivation d{k, n, i, std::vector<std::vector<std::pair<std::size_t, Rational>>>(nv)};
    // (Xi e)(l, c) = sum_r xi_{r,l} e(r, c).
    for (unsigned c = 1; c <= k; ++c) {
      for (unsigned l = 1; l <= n; ++l) {
        auto& img = d.images[xi_index(n, c, l)];
        for (unsigned r = 1; r <= k; ++r) {
          if (e(r - 1, c - 1) != 0) img.emplace_back(xi_index(n, r, l), e(r - 1, c - 1));
        }
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

bool annihilated_by_derivations(const WeightedPoly& p) {
  for (const auto& d : unipotent_derivations(p.k, p.n))
    if (!d.apply(p).is_zero()) return false;
  return true;
}

namespace {

SparseRow integer_row(const std::vector<std::pair<std::uint32_t, Rational>>& entries) {
  Integer l = 1;
  for (const auto& [c, q] : entries) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  SparseRow row;
  row.reserve(entries.size());
  for (const auto& [c, q] : entries) row.push_back({c, q.get_num() * (l / q.get_den())});
  return row;
}

WeightedPoly primitive_poly(unsigned k, unsigned n, const std::vector<Exponents>& monos, const Vector& coords) {
  Integer l = 1;
  Integer g = 0;
  for (const auto& q : coords) {
    if (q == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  for (const auto& q : coords) {
    if (q == 0) continue;
    const Integer v = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  const Rational scale = make_rational(l, g == 0 ? Integer(1) : g);
  WeightedPoly p(k, n);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) p.poly.add_term(monos[i], coords[i] * scale);
  return p;
}

void check_cap(unsigned k, unsigned n, unsigned m, std::size_t cap) {
  const Integer count = monomial_count(k, n, m);
  if (count > Integer(static_cast<unsigned long>(cap))) throw CapExceeded(k, n, m, count, cap);
}

}  // namespace

InvariantSpace invariant_basis(unsigned k, unsigned n, unsigned m, std::size_t cap) {
  if (k < 1 || n < 1) throw std::invalid_argument("k and n must be >= 1");
  if (m < 1) throw std::invalid_argument("weighted degree must be >= 1");
  check_cap(k, n, m, cap);
  const auto monos = monomials(k, n, m);
  InvariantSpace space{k, n, m, monos.size(), {}};

  RowEchelon ech(monos.size());
  for (const auto& d : unipotent_derivations(k, n)) {
    // One row per target monomial of D_i(source), columns are sources.
    std::map<Exponents, std::vector<std::pair<std::uint32_t, Rational>>> rows;
    for (std::size_t col = 0; col < monos.size(); ++col) {
      const WeightedPoly image = d.apply(WeightedPoly(k, n, Polynomial::monomial(monos[col])));
      for (const auto& [t, c] : image.poly.terms()) rows[t].emplace_back(static_cast<std::uint32_t>(col), c);
    }
    for (const auto& [t, entries] : rows) ech.add_row(integer_row(entries));
  }
  for (const auto& v : ech.kernel()) space.basis.push_back(primitive_poly(k, n, monos, v));
  return space;
}

WeightedPoly act_on_poly(const WeightedPoly& p, const Reparam& phi) {
  if (phi.k() != p.k) throw std::invalid_argument("reparametrization order differs from polynomial ring");
  const ExactMatrix g = group_matrix(phi);
  const std::size_t nv = p.nvars();
  // xi_{c,l} -> sum_r g(r, c) xi_{r,l}, column c of Xi * g.
  ExactMatrix l(nv, nv);
  for (unsigned c = 1; c <= p.k; ++c)
    for (unsigned r = 1; r <= p.k; ++r)
      for (unsigned i = 1; i <= p.n; ++i) l(xi_index(p.n, r, i), xi_index(p.n, c, i)) = g(r - 1, c - 1);
  return poly_substitute_linear(p, l);
}

bool verify_invariance(const WeightedPoly& p, const Reparam& u) { return act_on_poly(p, u) == p; }

GenerationProfile generation_profile(unsigned k, unsigned n, unsigned m_max, std::size_t cap) {
  GenerationProfile profile{k, n, m_max, {}, {}};
  for (unsigned m = 1; m <= m_max; ++m) {
    InvariantSpace space = invariant_basis(k, n, m, cap);
    const auto monos = monomials(k, n, m);
    std::map<Exponents, std::uint32_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], static_cast<std::uint32_t>(i));

    RowEchelon products(monos.size());
    for (unsigned a = 1; 2 * a <= m; ++a) {
      const auto& left = profile.spaces[a - 1].basis;
      const auto& right = profile.spaces[m - a - 1].basis;
      for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = (a == m - a ? i : 0); j < right.size(); ++j) {
          const Polynomial prod = left[i].poly * right[j].poly;
          std::vector<std::pair<std::uint32_t, Rational>> entries;
          for (const auto& [e, c] : prod.terms()) entries.emplace_back(index.at(e), c);
          std::sort(entries.begin(), entries.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
          products.add_row(integer_row(entries));
        }
      }
    }
    DimensionRow row{k, n, m, space.monomial_count, space.dim(), products.rank(), false};
    row.new_generators_needed = row.product_span_dim < row.invariant_dim;
    profile.rows.push_back(row);
    profile.spaces.push_back(std::move(space));
  }
  return profile;
}

std::vector<DimensionRow> dimension_table(unsigned k, unsigned n, unsigned m_max, std::size_t cap) {
  return generation_profile(k, n, m_max, cap).rows;
}

bool graded_component_invariance_check(const WeightedPoly& p, std::size_t trials, std::uint64_t seed,
                                       std::int64_t box) {
  Sampler rng(seed);
  std::vector<Reparam> samples;
  for (std::size_t t = 0; t < trials; ++t) samples.push_back(rng.unipotent(p.k, box));
  for (const auto& [m, component] : p.homogeneous_components()) {
    if (!annihilated_by_derivations(component)) return false;
    for (const auto& u : samples)
      if (!verify_invariance(component, u)) return false;
  }
  return true;
}

}  // namespace jetinv
