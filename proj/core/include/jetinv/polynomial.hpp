#pragma once

#include "jetinv/matrix.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace jetinv {

using Exponents = std::vector<unsigned>;

// Sparse multivariate polynomial over Q. Terms are kept in a std::map keyed
// by exponent vector, so iteration order is deterministic and no zero
// coefficient is ever stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Exponents& e, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

// x_v -> sum_u L(u, v) x_u, i.e. column v of L is the image of variable v.
// With this convention substitute(substitute(P, L1), L2) == substitute(P, L2 * L1).
Polynomial substitute_linear(const Polynomial& p, const ExactMatrix& l);

// Polynomial in the jet variables xi_{j,i} (order j in 1..k, coordinate i in
// 1..n) graded by weight(xi_{j,i}) = j. Variable xi_{j,i} has flat index
// (j-1)*n + (i-1).
struct WeightedPoly {
  unsigned k = 0;
  unsigned n = 0;
  Polynomial poly;

  WeightedPoly() = default;
  WeightedPoly(unsigned k_, unsigned n_) : k(k_), n(n_), poly(static_cast<std::size_t>(k_) * n_) {}
  WeightedPoly(unsigned k_, unsigned n_, Polynomial p);

  static WeightedPoly xi(unsigned k, unsigned n, unsigned order, unsigned coord);

  std::size_t nvars() const { return static_cast<std::size_t>(k) * n; }
  bool is_zero() const { return poly.is_zero(); }
  // Weighted-homogeneous pieces keyed by weighted degree.
  std::map<unsigned, WeightedPoly> homogeneous_components() const;
  bool is_homogeneous(unsigned m) const;

  friend bool operator==(const WeightedPoly& a, const WeightedPoly& b) {
    return a.k == b.k && a.n == b.n && a.poly == b.poly;
  }
};

inline std::size_t xi_index(unsigned n, unsigned order, unsigned coord) {
  return static_cast<std::size_t>(order - 1) * n + (coord - 1);
}

unsigned weighted_degree(const Exponents& e, unsigned n);

// All exponent vectors of weighted degree exactly m, in decreasing
// lexicographic order (so xi_{1,1}^m comes first).
std::vector<Exponents> monomials(unsigned k, unsigned n, unsigned m);

// Number of weighted-degree-m monomials without materializing them.
Integer monomial_count(unsigned k, unsigned n, unsigned m);

WeightedPoly poly_substitute_linear(const WeightedPoly& p, const ExactMatrix& l);

}  // namespace jetinv
