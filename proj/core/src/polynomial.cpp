#include "jetinv/polynomial.hpp"

#include <functional>
#include <stdexcept>

namespace jetinv {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial ring mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial ring mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  Polynomial p(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  Polynomial d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    d.add_term(f, c * e[var]);
  }
  return d;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < nvars_ && t != 0; ++v) {
      for (unsigned r = 0; r < e[v]; ++r) t *= point[v];
    }
    total += t;
  }
  return total;
}

Polynomial substitute_linear(const Polynomial& p, const ExactMatrix& l) {
  const std::size_t nv = p.nvars();
  if (l.rows() != nv || l.cols() != nv) throw std::invalid_argument("substitution matrix must be nvars x nvars");
  std::vector<Polynomial> images;
  images.reserve(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    Polynomial img(nv);
    for (std::size_t u = 0; u < nv; ++u) {
      if (l(u, v) == 0) continue;
      Exponents e(nv, 0);
      e[u] = 1;
      img.add_term(e, l(u, v));
    }
    images.push_back(std::move(img));
  }
  // powers[v][e] = images[v]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(nv);
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(nv, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Polynomial out(nv);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(nv, c);
    for (std::size_t v = 0; v < nv; ++v) {
      if (e[v] == 0) continue;
      term = term * power(v, e[v]);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

WeightedPoly::WeightedPoly(unsigned k_, unsigned n_, Polynomial p) : k(k_), n(n_), poly(std::move(p)) {
  if (poly.nvars() != nvars()) throw std::invalid_argument("weighted polynomial ring mismatch");
}

WeightedPoly WeightedPoly::xi(unsigned k, unsigned n, unsigned order, unsigned coord) {
  if (order < 1 || order > k || coord < 1 || coord > n) throw std::out_of_range("xi index out of range");
  return WeightedPoly(k, n, Polynomial::variable(static_cast<std::size_t>(k) * n, xi_index(n, order, coord)));
}

std::map<unsigned, WeightedPoly> WeightedPoly::homogeneous_components() const {
  std::map<unsigned, WeightedPoly> out;
  for (const auto& [e, c] : poly.terms()) {
    auto [it, _] = out.try_emplace(weighted_degree(e, n), k, n);
    it->second.poly.add_term(e, c);
  }
  return out;
}

bool WeightedPoly::is_homogeneous(unsigned m) const {
  for (const auto& [e, c] : poly.terms())
    if (weighted_degree(e, n) != m) return false;
  return true;
}

unsigned weighted_degree(const Exponents& e, unsigned n) {
  unsigned d = 0;
  for (std::size_t v = 0; v < e.size(); ++v) d += static_cast<unsigned>(v / n + 1) * e[v];
  return d;
}

std::vector<Exponents> monomials(unsigned k, unsigned n, unsigned m) {
  const std::size_t nv = static_cast<std::size_t>(k) * n;
  std::vector<Exponents> out;
  if (nv == 0) {
    if (m == 0) out.emplace_back();
    return out;
  }
  Exponents e(nv, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned remaining) {
    const unsigned w = static_cast<unsigned>(v / n + 1);
    if (v + 1 == nv) {
      if (remaining % w == 0) {
        e[v] = remaining / w;
        out.push_back(e);
        e[v] = 0;
      }
      return;
    }
    for (unsigned a = remaining / w + 1; a-- > 0;) {
      e[v] = a;
      rec(v + 1, remaining - a * w);
    }
    e[v] = 0;
  };
  rec(0, m);
  return out;
}

Integer monomial_count(unsigned k, unsigned n, unsigned m) {
  // Coefficient of t^m in prod_j (1 - t^j)^{-n}.
  std::vector<Integer> series(m + 1, 0);
  series[0] = 1;
  for (unsigned j = 1; j <= k; ++j) {
    for (unsigned rep = 0; rep < n; ++rep) {
      for (unsigned d = j; d <= m; ++d) series[d] += series[d - j];
    }
  }
  return series[m];
}

WeightedPoly poly_substitute_linear(const WeightedPoly& p, const ExactMatrix& l) {
  return WeightedPoly(p.k, p.n, substitute_linear(p.poly, l));
}

}  // namespace jetinv
