#pragma once

// Demailly-Semple spaces E_{k,m}: polynomials in the jet coordinates
// xi_{j,i} of weighted degree m that are invariant under the unipotent
// reparametrizations (a_1 = 1).
//
// The unipotent group has no invariant measure to average over, so
// invariance is imposed infinitesimally: U_k is connected with Lie algebra
// span{e_2, ..., e_k}, hence P is U_k-invariant iff D_i P = 0 for the
// derivations D_i(xi) = (Xi * e_i) induced by the right action on the
// generic jet matrix Xi. E_{k,m} is then the kernel of the stacked linear
// maps P -> D_i P on the weighted-degree-m monomial space, computed with the
// fraction-free sparse elimination from linalg.hpp.

#include "jetinv/polynomial.hpp"
#include "jetinv/reparam.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jetinv {

inline constexpr std::size_t kDefaultMonomialCap = 20000;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(unsigned k, unsigned n, unsigned m, const Integer& count, std::size_t cap);
  unsigned k, n, m;
  Integer count;
  std::size_t cap;
};

struct Derivation {
  unsigned k = 0;
  unsigned n = 0;
  unsigned index = 0;  // i in 2..k
  // images[v] = D_i(x_v) as (variable, coefficient) pairs.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> images;

  WeightedPoly apply(const WeightedPoly& p) const;
};

std::vector<Derivation> unipotent_derivations(unsigned k, unsigned n);

bool annihilated_by_derivations(const WeightedPoly& p);

struct InvariantSpace {
  unsigned k = 0;
  unsigned n = 0;
  unsigned m = 0;
  std::size_t monomial_count = 0;
  std::vector<WeightedPoly> basis;  // primitive integer coefficients

  std::size_t dim() const { return basis.size(); }
};

InvariantSpace invariant_basis(unsigned k, unsigned n, unsigned m, std::size_t cap = kDefaultMonomialCap);

// P(Xi * group_matrix(phi)).
WeightedPoly act_on_poly(const WeightedPoly& p, const Reparam& phi);
bool verify_invariance(const WeightedPoly& p, const Reparam& u);

struct DimensionRow {
  unsigned k = 0;
  unsigned n = 0;
  unsigned m = 0;
  std::size_t monomial_count = 0;
  std::size_t invariant_dim = 0;
  std::size_t product_span_dim = 0;  // span of E_a * E_{m-a}, 1 <= a < m
  bool new_generators_needed = false;
};

struct GenerationProfile {
  unsigned k = 0;
  unsigned n = 0;
  unsigned m_max = 0;
  std::vector<DimensionRow> rows;
  std::vector<InvariantSpace> spaces;  // spaces[m-1] = E_{k,m}
};

GenerationProfile generation_profile(unsigned k, unsigned n, unsigned m_max,
                                     std::size_t cap = kDefaultMonomialCap);
std::vector<DimensionRow> dimension_table(unsigned k, unsigned n, unsigned m_max,
                                          std::size_t cap = kDefaultMonomialCap);

// Splits p into weighted-homogeneous components and checks each one against
// the derivations and against `trials` seeded random unipotent elements.
bool graded_component_invariance_check(const WeightedPoly& p, std::size_t trials, std::uint64_t seed,
                                       std::int64_t box = 5);

}  // namespace jetinv
