#pragma once

// Independent reference computations used to freeze expected values. Nothing
// here calls into jetinv beyond plain GMP scalars: series are expanded
// naively, linear algebra is textbook dense elimination, and counts come
// from enumeration.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;
using Mat = std::vector<Row>;

// Truncated power series; index = power of t, length k + 1.
using Series = std::vector<Q>;

Series series_mul(const Series& a, const Series& b);
// Coefficients a_1..a_k as a series with zero constant term.
Series series_from_coeffs(const std::vector<Q>& coeffs);
// Row i (0-based) holds the coefficients of t^1..t^k in phi(t)^(i+1).
Mat group_matrix(const std::vector<Q>& coeffs);
// phi(psi(t)) mod t^(k+1), as coefficients a_1..a_k.
std::vector<Q> compose(const std::vector<Q>& phi, const std::vector<Q>& psi);

Mat mat_mul(const Mat& a, const Mat& b);
Mat identity(std::size_t n);
std::size_t rank(Mat rows);
Q determinant_laplace(const Mat& m);

// Number of exponent vectors on nk variables (weight of order-j variables is
// j) with weighted degree m, by enumeration.
std::size_t brute_monomial_count(unsigned k, unsigned n, unsigned m);

// g_k basis written down directly: e_1 = diag(1..k), e_i has r at (r, r+i-1).
std::vector<Mat> lie_basis(unsigned k);
// yx - xy.
Mat bracket(const Mat& x, const Mat& y);
std::size_t derived_dim(unsigned k);

// dim of {P of weighted degree m : P(Xi * M(u)) = P(Xi)} for `trials`
// random unipotent u, computed by expanding substitutions in the full
// polynomial ring.
std::size_t group_invariant_dim(unsigned k, unsigned n, unsigned m, unsigned trials, std::uint64_t seed);

// Multiset over {1..n} -> coefficient.
using SymCoords = std::map<std::vector<unsigned>, Q>;
// Column d (0-based d = 0..k-1) is the t^(d+1) coefficient of
// sum_{s>=1} f(t)^s, where f(t) = sum_j taylor[:, j] t^(j+1).
std::vector<SymCoords> phi_series(const Mat& taylor);

// f'(0) from values f(0), f(1), ..., f(D) of a polynomial of degree <= D,
// through Newton forward differences.
Q derivative_at_zero(const std::vector<Q>& values);

}  // namespace oracle
