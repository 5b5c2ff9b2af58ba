#pragma once

#include "jetinv/matrix.hpp"
#include "jetinv/reparam.hpp"

#include <cstdint>
#include <random>

namespace jetinv {

// Seeded source of random exact values. Draws use the raw 64-bit engine
// output reduced modulo the range, so sequences are identical across
// standard library implementations for a given seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  // numerator in [-box, box], denominator in [1, box].
  Rational rational(std::int64_t box);
  Rational nonzero_rational(std::int64_t box);
  // Integer entries in [-box, box].
  ExactMatrix integer_matrix(std::size_t rows, std::size_t cols, std::int64_t box);
  ExactMatrix rational_matrix(std::size_t rows, std::size_t cols, std::int64_t box);
  ExactMatrix invertible_matrix(std::size_t n, std::int64_t box);

  Reparam reparam(unsigned k, std::int64_t box);
  Reparam unipotent(unsigned k, std::int64_t box);

 private:
  std::mt19937_64 engine_;
};

}  // namespace jetinv
