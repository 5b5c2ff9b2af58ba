#include "jetinv/sampling.hpp"

#include "jetinv/linalg.hpp"

#include <stdexcept>

namespace jetinv {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Sampler::rational(std::int64_t box) {
  if (box < 1) throw std::invalid_argument("sampling box must be >= 1");
  const auto num = integer(-box, box);
  const auto den = integer(1, box);
  return make_rational(num, den);
}

Rational Sampler::nonzero_rational(std::int64_t box) {
  Rational q = 0;
  while (q == 0) q = rational(box);
  return q;
}

ExactMatrix Sampler::integer_matrix(std::size_t rows, std::size_t cols, std::int64_t box) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(static_cast<long>(integer(-box, box)));
  return m;
}

ExactMatrix Sampler::rational_matrix(std::size_t rows, std::size_t cols, std::int64_t box) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(box);
  return m;
}

ExactMatrix Sampler::invertible_matrix(std::size_t n, std::int64_t box) {
  while (true) {
    ExactMatrix m = integer_matrix(n, n, box);
    if (rank(m) == n) return m;
  }
}

Reparam Sampler::reparam(unsigned k, std::int64_t box) {
  std::vector<Rational> c(k);
  c[0] = nonzero_rational(box);
  for (unsigned i = 1; i < k; ++i) c[i] = rational(box);
  return Reparam(std::move(c));
}

Reparam Sampler::unipotent(unsigned k, std::int64_t box) {
  std::vector<Rational> c(k);
  c[0] = 1;
  for (unsigned i = 1; i < k; ++i) c[i] = rational(box);
  return Reparam(std::move(c));
}

}  // namespace jetinv
