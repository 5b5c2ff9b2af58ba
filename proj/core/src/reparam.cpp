#include "jetinv/reparam.hpp"

#include <stdexcept>

namespace jetinv {

Reparam::Reparam(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::domain_error("reparametrization needs at least one coefficient");
  if (coeffs_.front() == 0) throw std::domain_error("a_1 = 0 is not a group element");
}

Reparam Reparam::identity(unsigned k) { return scaling(k, 1); }

Reparam Reparam::scaling(unsigned k, const Rational& lambda) {
  std::vector<Rational> c(k);
  if (k > 0) c[0] = lambda;
  return Reparam(std::move(c));
}

std::vector<std::vector<unsigned>> compositions(unsigned total, unsigned parts) {
  std::vector<std::vector<unsigned>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  if (total < parts) return out;
  std::vector<unsigned> current;
  current.reserve(parts);
  auto rec = [&](auto&& self, unsigned remaining, unsigned slots) -> void {
    if (slots == 1) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
      return;
    }
    for (unsigned s = 1; s + (slots - 1) <= remaining; ++s) {
      current.push_back(s);
      self(self, remaining - s, slots - 1);
      current.pop_back();
    }
  };
  rec(rec, total, parts);
  return out;
}

ExactMatrix group_matrix(const Reparam& phi) {
  const unsigned k = phi.k();
  ExactMatrix m(k, k);
  for (unsigned i = 1; i <= k; ++i) {
    for (unsigned j = i; j <= k; ++j) {
      Rational entry = 0;
      for (const auto& comp : compositions(j, i)) {
        Rational prod = 1;
        for (unsigned s : comp) {
          prod *= phi.a(s);
          if (prod == 0) break;
        }
        entry += prod;
      }
      m(i - 1, j - 1) = entry;
    }
  }
  return m;
}

namespace {

// Truncated power series product, indices 1..k hold coefficients of t^1..t^k
// (index 0 is the constant term).
std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, unsigned k) {
  std::vector<Rational> c(k + 1);
  for (unsigned i = 0; i <= k; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= k; ++j) {
      if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

}  // namespace

Reparam compose(const Reparam& phi, const Reparam& psi) {
  if (phi.k() != psi.k()) throw std::invalid_argument("compose: jet orders differ");
  const unsigned k = phi.k();
  std::vector<Rational> inner(k + 1);
  for (unsigned i = 1; i <= k; ++i) inner[i] = psi.a(i);
  std::vector<Rational> result(k + 1);
  std::vector<Rational> power(k + 1);
  power[0] = 1;
  // sum_i a_i psi^i, truncated.
  for (unsigned i = 1; i <= k; ++i) {
    power = series_mul(power, inner, k);
    for (unsigned d = 0; d <= k; ++d) result[d] += phi.a(i) * power[d];
  }
  return Reparam(std::vector<Rational>(result.begin() + 1, result.end()));
}

Reparam invert(const Reparam& phi) {
  const unsigned k = phi.k();
  // Solve phi(psi(t)) = t coefficient by coefficient: the t^d coefficient is
  // a_1 b_d + (terms in b_1..b_{d-1}), so each b_d follows by a triangular step.
  std::vector<Rational> b(k);
  b[0] = 1 / phi.a(1);
  for (unsigned d = 2; d <= k; ++d) {
    std::vector<Rational> trial = b;
    trial[d - 1] = 0;
    std::vector<Rational> padded(k, 0);
    for (unsigned i = 0; i < d - 1; ++i) padded[i] = trial[i];
    const Reparam partial(padded);
    const Reparam image = compose(phi, partial);
    b[d - 1] = -image.a(d) / phi.a(1);
  }
  return Reparam(std::move(b));
}

bool is_unipotent(const Reparam& phi) { return phi.a(1) == 1; }

}  // namespace jetinv
