#pragma once

#include "jetinv/matrix.hpp"

#include <vector>

namespace jetinv {

// Truncated reparametrization t -> a_1 t + a_2 t^2 + ... + a_k t^k of (C, 0),
// a_1 != 0.
class Reparam {
 public:
  // Throws std::domain_error when coeffs is empty or a_1 == 0.
  explicit Reparam(std::vector<Rational> coeffs);

  static Reparam identity(unsigned k);
  // t -> lambda t.
  static Reparam scaling(unsigned k, const Rational& lambda);

  unsigned k() const { return static_cast<unsigned>(coeffs_.size()); }
  // 1-based: a(1) is the linear coefficient.
  const Rational& a(unsigned i) const { return coeffs_.at(i - 1); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const Reparam&, const Reparam&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Ordered tuples (s_1, ..., s_parts) of positive integers summing to total.
std::vector<std::vector<unsigned>> compositions(unsigned total, unsigned parts);

// Upper triangular k x k matrix with entry (i, j) equal to the coefficient of
// t^j in phi(t)^i (1-based), i.e. the sum over compositions s_1+...+s_i = j
// of a_{s_1} ... a_{s_i}. Jets are row vectors of Taylor coefficients and
// the reparametrized jet is T * group_matrix(phi).
ExactMatrix group_matrix(const Reparam& phi);

// t -> phi(psi(t)) mod t^{k+1}. With jets acted on the right,
// group_matrix(compose(phi, psi)) == group_matrix(phi) * group_matrix(psi).
Reparam compose(const Reparam& phi, const Reparam& psi);

// Two-sided inverse under compose.
Reparam invert(const Reparam& phi);

bool is_unipotent(const Reparam& phi);

}  // namespace jetinv
