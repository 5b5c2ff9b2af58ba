#include "jetinv/lie.hpp"

#include "jetinv/linalg.hpp"
#include "jetinv/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace jetinv {

namespace {

struct AlgebraData {
  std::vector<ExactMatrix> basis;
  ExactMatrix flattened;  // k^2 x k, column i = vec(e_i)
};

AlgebraData build_algebra(unsigned k) {
  AlgebraData data;
  // Entry (r, c) of the group matrix as a polynomial in a_1..a_k.
  std::vector<std::vector<Polynomial>> entries(k, std::vector<Polynomial>(k, Polynomial(k)));
  for (unsigned r = 1; r <= k; ++r) {
    for (unsigned c = r; c <= k; ++c) {
      for (const auto& comp : compositions(c, r)) {
        Exponents e(k, 0);
        for (unsigned s : comp) ++e[s - 1];
        entries[r - 1][c - 1].add_term(e, 1);
      }
    }
  }
  std::vector<Rational> identity_point(k, 0);
  identity_point[0] = 1;
  for (unsigned i = 0; i < k; ++i) {
    ExactMatrix m(k, k);
    for (unsigned r = 0; r < k; ++r)
      for (unsigned c = 0; c < k; ++c) m(r, c) = entries[r][c].derivative(i).evaluate(identity_point);
    data.basis.push_back(std::move(m));
  }
  data.flattened = ExactMatrix(static_cast<std::size_t>(k) * k, k);
  for (unsigned i = 0; i < k; ++i) {
    const auto& v = data.basis[i].data();
    for (std::size_t p = 0; p < v.size(); ++p) data.flattened(p, i) = v[p];
  }
  return data;
}

const AlgebraData& algebra(unsigned k) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<AlgebraData>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<AlgebraData>(build_algebra(k));
  return *slot;
}

void check_same_k(unsigned a, unsigned b) {
  if (a != b) throw std::invalid_argument("Lie elements from different jet orders");
}

std::vector<Vector> coords_of(const std::vector<LieElement>& elems) {
  std::vector<Vector> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(e.coords);
  return out;
}

}  // namespace

LieElement LieElement::from_coords(unsigned k, Vector coords) {
  if (coords.size() != k) throw std::invalid_argument("Lie element needs k coordinates");
  const auto& alg = algebra(k);
  ExactMatrix m(k, k);
  for (unsigned i = 0; i < k; ++i)
    if (coords[i] != 0) m = m + coords[i] * alg.basis[i];
  return LieElement{k, std::move(coords), std::move(m)};
}

LieElement LieElement::from_matrix(unsigned k, const ExactMatrix& m) {
  if (m.rows() != k || m.cols() != k) throw std::invalid_argument("Lie element matrix must be k x k");
  auto x = solve(algebra(k).flattened, m.data());
  if (!x) throw ClosureViolation("matrix is not in the span of e_1..e_k");
  return LieElement{k, std::move(*x), m};
}

LieElement LieElement::basis_element(unsigned k, unsigned i) {
  if (i < 1 || i > k) throw std::out_of_range("basis index out of range");
  Vector c(k);
  c[i - 1] = 1;
  return from_coords(k, std::move(c));
}

LieElement LieElement::zero(unsigned k) { return from_coords(k, Vector(k)); }

bool LieElement::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

std::vector<LieElement> lie_basis(unsigned k) {
  if (k < 1) throw std::invalid_argument("jet order must be >= 1");
  std::vector<LieElement> out;
  for (unsigned i = 1; i <= k; ++i) out.push_back(LieElement::basis_element(k, i));
  return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  check_same_k(x.k, y.k);
  return LieElement::from_matrix(x.k, y.matrix * x.matrix - x.matrix * y.matrix);
}

ExactMatrix ad_action_matrix(const LieElement& x) {
  const unsigned k = x.k;
  ExactMatrix ad(k, k);
  for (unsigned j = 1; j <= k; ++j) {
    const auto b = bracket(x, LieElement::basis_element(k, j));
    for (unsigned i = 0; i < k; ++i) ad(i, j - 1) = b.coords[i];
  }
  return ad;
}

Subalgebra::Subalgebra(unsigned k, const std::vector<Vector>& spanning) : k_(k) {
  if (spanning.empty()) return;
  for (const auto& v : spanning)
    if (v.size() != k) throw std::invalid_argument("spanning vector has wrong length");
  for (auto& v : row_space_basis(ExactMatrix::from_rows(spanning, k)))
    basis_.push_back(LieElement::from_coords(k, std::move(v)));
}

Subalgebra Subalgebra::whole(unsigned k) { return Subalgebra(k, coords_of(lie_basis(k))); }

bool Subalgebra::contains(const LieElement& y) const {
  check_same_k(k_, y.k);
  auto rows = coords_of(basis_);
  const std::size_t before = rows.size();
  rows.push_back(y.coords);
  return rank(ExactMatrix::from_rows(rows, k_)) == before;
}

bool Subalgebra::contains(const Subalgebra& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

bool Subalgebra::is_closed() const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (!contains(bracket(basis_[i], basis_[j]))) return false;
  return true;
}

bool Subalgebra::is_commutative() const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (!bracket(basis_[i], basis_[j]).is_zero()) return false;
  return true;
}

bool Subalgebra::is_nilpotent() const {
  Subalgebra term = *this;
  for (std::size_t step = 0; step <= dim(); ++step) {
    if (term.dim() == 0) return true;
    Subalgebra next = bracket_span(*this, term);
    if (next.dim() == term.dim()) return false;
    term = std::move(next);
  }
  return term.dim() == 0;
}

bool operator==(const Subalgebra& a, const Subalgebra& b) {
  return a.k_ == b.k_ && a.dim() == b.dim() && a.contains(b);
}

Subalgebra bracket_span(const Subalgebra& a, const Subalgebra& b) {
  check_same_k(a.k(), b.k());
  std::vector<Vector> span;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) span.push_back(bracket(x, y).coords);
  return Subalgebra(a.k(), span);
}

Subalgebra subspace_sum(const Subalgebra& a, const Subalgebra& b) {
  check_same_k(a.k(), b.k());
  auto rows = coords_of(a.basis());
  for (const auto& y : b.basis()) rows.push_back(y.coords);
  return Subalgebra(a.k(), rows);
}

Subalgebra centralizer(const LieElement& x) { return Subalgebra(x.k, kernel_basis(ad_action_matrix(x))); }

Subalgebra fixed_space(const Subalgebra& s) {
  const unsigned k = s.k();
  ExactMatrix stacked(0, k);
  for (const auto& c : s.basis()) stacked = vstack(stacked, ad_action_matrix(c));
  if (stacked.rows() == 0) return Subalgebra::whole(k);
  return Subalgebra(k, kernel_basis(stacked));
}

Subalgebra normalizer(const Subalgebra& s) {
  const unsigned k = s.k();
  if (s.dim() == 0 || s.dim() == k) return Subalgebra::whole(k);
  // Functionals w vanishing on span(s); y normalizes s iff w([y, c]) = 0 for
  // all such w and all c in s. Since [y, c] = -ad(c) y, each pair gives the
  // row w^T ad(c).
  const auto annihilator = kernel_basis(ExactMatrix::from_rows(coords_of(s.basis()), k));
  std::vector<Vector> conditions;
  for (const auto& c : s.basis()) {
    const ExactMatrix ad = ad_action_matrix(c);
    for (const auto& w : annihilator) {
      Vector row(k);
      for (unsigned j = 0; j < k; ++j)
        for (unsigned i = 0; i < k; ++i) row[j] += w[i] * ad(i, j);
      conditions.push_back(std::move(row));
    }
  }
  return Subalgebra(k, kernel_basis(ExactMatrix::from_rows(conditions, k)));
}

Subalgebra derived_subalgebra(unsigned k) {
  const auto whole = Subalgebra::whole(k);
  return bracket_span(whole, whole);
}

Subalgebra image_of_ad(const LieElement& x) {
  const ExactMatrix ad = ad_action_matrix(x);
  std::vector<Vector> cols;
  for (unsigned j = 0; j < x.k; ++j) cols.push_back(ad.column(j));
  return Subalgebra(x.k, cols);
}

LieElement adjoint_conjugation(const Reparam& g, const LieElement& y) {
  check_same_k(g.k(), y.k);
  const ExactMatrix m = group_matrix(g);
  const ExactMatrix m_inv = group_matrix(invert(g));
  return LieElement::from_matrix(y.k, m_inv * y.matrix * m);
}

AdjointElashvili elashvili_adjoint(const LieElement& x) {
  AdjointElashvili cert;
  cert.k = x.k;
  cert.probe = x.coords;
  const Subalgebra image = image_of_ad(x);
  const Subalgebra z = centralizer(x);
  const Subalgebra fixed = fixed_space(z);
  cert.image_dim = image.dim();
  cert.centralizer_dim = z.dim();
  cert.fixed_dim = fixed.dim();
  cert.sum_dim = subspace_sum(image, fixed).dim();
  cert.holds = cert.sum_dim == x.k;
  cert.centralizer_commutative = z.is_commutative();
  cert.direct_sum_with_centralizer =
      image.dim() + z.dim() == x.k && subspace_sum(image, z).dim() == x.k;
  return cert;
}

CartanCertificate cartan_certificate(const LieElement& x) {
  CartanCertificate cert;
  cert.k = x.k;
  cert.probe = x.coords;
  const Subalgebra h = centralizer(x);
  cert.dim = h.dim();
  cert.commutative = h.is_commutative();
  cert.nilpotent = cert.commutative || h.is_nilpotent();
  const Subalgebra nh = normalizer(h);
  cert.normalizer_dim = nh.dim();
  cert.self_normalizing = nh == h;
  cert.is_cartan = cert.nilpotent && cert.self_normalizing;
  return cert;
}

WeylCertificate weyl_finiteness_certificate(const LieElement& x) {
  WeylCertificate cert;
  cert.k = x.k;
  cert.probe = x.coords;
  cert.cartan = cartan_certificate(x).is_cartan;
  const Subalgebra h = centralizer(x);
  const Subalgebra nh = normalizer(h);
  cert.centralizer_dim = h.dim();
  cert.normalizer_dim = nh.dim();
  cert.normalizer_equals_centralizer = nh == h;
  return cert;
}

}  // namespace jetinv
