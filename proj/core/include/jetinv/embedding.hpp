#pragma once

// Embedding of regular jets into Grass(k, Sym^{<=k} C^n) and its Plucker
// coordinates.
//
// Sym^{<=k} C^n is modeled as polynomials in n variables of degree 1..k
// without constant term; the basis element e_{i_1...i_s} is the monomial
// x_{i_1} ... x_{i_s}, so symmetric products are polynomial products.
//
// phi sends a jet to k vectors; vector d is
//
//   sum_{s >= 1} sum_{i_1 + ... + i_s = d} f^(i_1) ... f^(i_s) / (i_1! ... i_s!)
//
// over ordered compositions, i.e. the t^d coefficient of sum_s f(t)^s. Under
// a reparametrization these columns transform by the group matrix, so the
// spanned k-plane (and the flag of leading spans) is invariant.

#include "jetinv/jets.hpp"
#include "jetinv/matrix.hpp"
#include "jetinv/sampling.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace jetinv {

// Multiset i_1 <= ... <= i_s over {1..n}, 1 <= s <= k. Ordered by size, then
// lexicographically.
struct SymIndex {
  std::vector<unsigned> idx;

  std::size_t size() const { return idx.size(); }
  friend bool operator==(const SymIndex&, const SymIndex&) = default;
  friend std::strong_ordering operator<=>(const SymIndex& a, const SymIndex& b) {
    if (a.idx.size() != b.idx.size()) return a.idx.size() <=> b.idx.size();
    return a.idx <=> b.idx;
  }
};

SymIndex sym_merge(const SymIndex& a, const SymIndex& b);

struct SymVector {
  std::map<SymIndex, Rational> coords;  // no zero entries

  bool is_zero() const { return coords.empty(); }
  void add(const SymIndex& i, const Rational& c);
  static SymVector from_linear(const Vector& v);  // sum_i v_i e_i

  friend bool operator==(const SymVector&, const SymVector&) = default;
};

SymVector operator+(const SymVector& a, const SymVector& b);
SymVector operator*(const Rational& s, const SymVector& a);
// Symmetric product.
SymVector sym_product(const SymVector& a, const SymVector& b);

using PluckerKey = std::vector<SymIndex>;  // k strictly increasing indices

struct PluckerVector {
  unsigned k = 0;
  std::map<PluckerKey, Rational> coords;  // no zero entries

  bool is_zero() const { return coords.empty(); }
  Rational at(const PluckerKey& key) const;
  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;
};

std::vector<SymIndex> sym_basis(unsigned n, unsigned k);

std::vector<SymVector> phi(const Jet& jet);

// All k x k minors of the matrix whose columns are cols, rows indexed by the
// union of their supports in SymIndex order. No extra signs.
PluckerVector plucker(const std::vector<SymVector>& cols);

// Throws std::domain_error when k > n.
PluckerVector z_point(unsigned n, unsigned k);

// Throws std::invalid_argument if either vector is zero.
bool projective_equal(const PluckerVector& p, const PluckerVector& q);

// Throws std::domain_error on a non-regular jet.
bool invariance_check(const Jet& jet, const Reparam& g);

bool a_nk_membership(const PluckerVector& p);

// Throws std::domain_error when g is singular.
std::vector<SymVector> gl_action(const ExactMatrix& g, const std::vector<SymVector>& vecs);

// Sum over the quadratic Plucker relations indexed by a (k-1)-subset I and a
// (k+1)-subset J of the support universe:
//   sum_l (-1)^l p_{I + j_l} p_{J - j_l}.
std::size_t plucker_relation_count(const PluckerVector& p);
// Checks every relation when there are at most max_relations of them;
// otherwise checks max_relations seeded random ones. Returns the number of
// non-vanishing relations found.
std::size_t plucker_relation_violations(const PluckerVector& p, std::size_t max_relations, std::uint64_t seed);

// Decomposability test in the chart of the first nonzero coordinate p_I:
// p is a pure wedge iff wedge_t w_t == p_I^{k-1} p, with
// w_t[j] = p(I with its t-th entry replaced by j).
bool is_decomposable(const PluckerVector& p);

}  // namespace jetinv
