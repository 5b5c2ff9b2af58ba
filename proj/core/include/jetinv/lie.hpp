#pragma once

// The Lie algebra g_k of the reparametrization group and its adjoint
// structure.
//
// Basis: e_i is the derivative at the identity of group_matrix along the
// coefficient a_i, so e_1 = diag(1, ..., k) and, for i >= 2, e_i has entry
// r at position (r, r + i - 1).
//
// Orientation: jets are row vectors acted on from the right, T -> T * M.
// The adjoint action and bracket follow that right action:
//
//   Ad(g) y = M(g)^{-1} y M(g),      [x, y] = y x - x y,
//
// so that d/dc Ad(g(c)) y at c = 0 equals [g'(0), y], [e_1, e_j] = (j-1) e_j,
// and Ad(compose(g, h)) = Ad(h) o Ad(g).

#include "jetinv/matrix.hpp"
#include "jetinv/reparam.hpp"

#include <stdexcept>
#include <vector>

namespace jetinv {

// Raised when a commutator fails to lie in span{e_1, ..., e_k}. This can only
// happen through an implementation error.
class ClosureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct LieElement {
  unsigned k = 0;
  Vector coords;        // in the e-basis
  ExactMatrix matrix;   // sum_i coords[i] e_i

  static LieElement from_coords(unsigned k, Vector coords);
  // Throws ClosureViolation if m is not in the span of the basis.
  static LieElement from_matrix(unsigned k, const ExactMatrix& m);
  static LieElement basis_element(unsigned k, unsigned i);  // e_i, 1-based
  static LieElement zero(unsigned k);

  bool is_zero() const;
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.k == b.k && a.coords == b.coords; }
};

// Subspace of g_k given by a reduced (row echelon) basis of coordinate vectors.
class Subalgebra {
 public:
  Subalgebra(unsigned k, const std::vector<Vector>& spanning);
  static Subalgebra whole(unsigned k);
  static Subalgebra zero(unsigned k) { return Subalgebra(k, {}); }

  unsigned k() const { return k_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<LieElement>& basis() const { return basis_; }

  bool contains(const LieElement& y) const;
  bool contains(const Subalgebra& other) const;
  bool is_closed() const;        // closed under the bracket
  bool is_commutative() const;
  bool is_nilpotent() const;     // lower central series reaches 0

  friend bool operator==(const Subalgebra& a, const Subalgebra& b);

 private:
  unsigned k_;
  std::vector<LieElement> basis_;
};

std::vector<LieElement> lie_basis(unsigned k);

LieElement bracket(const LieElement& x, const LieElement& y);

// Column j holds the coordinates of [x, e_j].
ExactMatrix ad_action_matrix(const LieElement& x);

Subalgebra centralizer(const LieElement& x);
Subalgebra fixed_space(const Subalgebra& s);
Subalgebra normalizer(const Subalgebra& s);
Subalgebra derived_subalgebra(unsigned k);
// span of [x, y] over all basis pairs of a and b.
Subalgebra bracket_span(const Subalgebra& a, const Subalgebra& b);
Subalgebra image_of_ad(const LieElement& x);
Subalgebra subspace_sum(const Subalgebra& a, const Subalgebra& b);

LieElement adjoint_conjugation(const Reparam& g, const LieElement& y);

struct AdjointElashvili {
  unsigned k = 0;
  Vector probe;
  std::size_t image_dim = 0;          // dim [g, x]
  std::size_t centralizer_dim = 0;    // dim z(x)
  std::size_t fixed_dim = 0;          // dim g^{z(x)}
  std::size_t sum_dim = 0;            // dim ([g, x] + g^{z(x)})
  bool holds = false;                 // sum_dim == k
  bool centralizer_commutative = false;
  bool direct_sum_with_centralizer = false;  // [g, x] (+) z(x) = g
};
AdjointElashvili elashvili_adjoint(const LieElement& x);

struct CartanCertificate {
  unsigned k = 0;
  Vector probe;
  std::size_t dim = 0;
  bool commutative = false;
  bool nilpotent = false;
  std::size_t normalizer_dim = 0;
  bool self_normalizing = false;
  bool is_cartan = false;  // nilpotent and self-normalizing
};
CartanCertificate cartan_certificate(const LieElement& x);

struct WeylCertificate {
  unsigned k = 0;
  Vector probe;
  bool cartan = false;
  std::size_t centralizer_dim = 0;
  std::size_t normalizer_dim = 0;
  bool normalizer_equals_centralizer = false;
};
WeylCertificate weyl_finiteness_certificate(const LieElement& x);

}  // namespace jetinv
