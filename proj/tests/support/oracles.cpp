#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_from_coeffs(const std::vector<Q>& coeffs) {
  Series s(coeffs.size() + 1, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s[i + 1] = coeffs[i];
  return s;
}

Mat group_matrix(const std::vector<Q>& coeffs) {
  const std::size_t k = coeffs.size();
  const Series phi = series_from_coeffs(coeffs);
  Mat m(k, Row(k, 0));
  Series power = phi;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = power[j + 1];
    power = series_mul(power, phi);
  }
  return m;
}

std::vector<Q> compose(const std::vector<Q>& phi, const std::vector<Q>& psi) {
  const std::size_t k = phi.size();
  const Series inner = series_from_coeffs(psi);
  Series acc(k + 1, 0);
  Series power = inner;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t d = 0; d <= k; ++d) acc[d] += phi[i] * power[d];
    power = series_mul(power, inner);
  }
  return std::vector<Q>(acc.begin() + 1, acc.end());
}

Mat mat_mul(const Mat& a, const Mat& b) {
  Mat c(a.size(), Row(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < b.size(); ++l)
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

Mat identity(std::size_t n) {
  Mat m(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::size_t rank(Mat rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Q f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

Q determinant_laplace(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Q det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      Row r;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) r.push_back(m[i][c]);
      minor.push_back(r);
    }
    const Q term = m[0][j] * determinant_laplace(minor);
    det += (j % 2 == 0) ? term : Q(-term);
  }
  return det;
}

namespace {

// Calls visit(e) for every exponent vector of weighted degree m, variables
// ordered (order, coordinate) with flat index (order-1)*n + coord-1.
void enumerate(unsigned k, unsigned n, unsigned m, const std::function<void(const std::vector<unsigned>&)>& visit) {
  const std::size_t nv = static_cast<std::size_t>(k) * n;
  std::vector<unsigned> e(nv, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v == nv) {
      if (left == 0) visit(e);
      return;
    }
    const unsigned w = static_cast<unsigned>(v / n) + 1;
    for (unsigned p = 0; p * w <= left; ++p) {
      e[v] = p;
      rec(v + 1, left - p * w);
    }
    e[v] = 0;
  };
  rec(0, m);
}

using Poly = std::map<std::vector<unsigned>, Q>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

std::size_t brute_monomial_count(unsigned k, unsigned n, unsigned m) {
  std::size_t count = 0;
  enumerate(k, n, m, [&](const std::vector<unsigned>&) { ++count; });
  return count;
}

std::vector<Mat> lie_basis(unsigned k) {
  std::vector<Mat> basis;
  Mat e1(k, Row(k, 0));
  for (unsigned r = 0; r < k; ++r) e1[r][r] = r + 1;
  basis.push_back(e1);
  for (unsigned i = 2; i <= k; ++i) {
    Mat e(k, Row(k, 0));
    for (unsigned r = 1; r + i - 1 <= k; ++r) e[r - 1][r + i - 2] = r;
    basis.push_back(e);
  }
  return basis;
}

Mat bracket(const Mat& x, const Mat& y) {
  Mat a = mat_mul(y, x);
  const Mat b = mat_mul(x, y);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= b[i][j];
  return a;
}

std::size_t derived_dim(unsigned k) {
  const auto basis = lie_basis(k);
  Mat rows;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      Row flat;
      for (const auto& r : bracket(x, y)) flat.insert(flat.end(), r.begin(), r.end());
      rows.push_back(flat);
    }
  return rank(rows);
}

std::size_t group_invariant_dim(unsigned k, unsigned n, unsigned m, unsigned trials, std::uint64_t seed) {
  const std::size_t nv = static_cast<std::size_t>(k) * n;
  std::vector<std::vector<unsigned>> mons;
  enumerate(k, n, m, [&](const std::vector<unsigned>& e) { mons.push_back(e); });

  std::mt19937_64 rng(seed);
  // Per input monomial: concatenation over trials of P(Xi M) - P(Xi).
  std::vector<std::map<std::pair<unsigned, std::vector<unsigned>>, Q>> rows(mons.size());
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<Q> coeffs(k);
    coeffs[0] = 1;
    for (unsigned i = 1; i < k; ++i) coeffs[i] = Q(static_cast<long>(rng() % 11) - 5) / Q(static_cast<long>(1 + rng() % 3));
    const Mat M = group_matrix(coeffs);
    // xi_{c,i} -> sum_r M[r][c] xi_{r,i}
    std::vector<Poly> images(nv);
    for (unsigned c = 0; c < k; ++c)
      for (unsigned i = 0; i < n; ++i) {
        Poly img;
        for (unsigned r = 0; r < k; ++r) {
          if (M[r][c] == 0) continue;
          std::vector<unsigned> e(nv, 0);
          e[static_cast<std::size_t>(r) * n + i] = 1;
          img[e] = M[r][c];
        }
        images[static_cast<std::size_t>(c) * n + i] = img;
      }
    for (std::size_t idx = 0; idx < mons.size(); ++idx) {
      Poly p{{std::vector<unsigned>(nv, 0), Q(1)}};
      for (std::size_t v = 0; v < nv; ++v)
        for (unsigned e = 0; e < mons[idx][v]; ++e) p = poly_mul(p, images[v]);
      p[mons[idx]] -= 1;
      for (const auto& [e, c] : p)
        if (c != 0) rows[idx][{t, e}] = c;
    }
  }
  std::map<std::pair<unsigned, std::vector<unsigned>>, std::size_t> col_index;
  for (const auto& r : rows)
    for (const auto& [key, c] : r) col_index.emplace(key, 0);
  std::size_t next = 0;
  for (auto& [key, idx] : col_index) idx = next++;
  Mat dense(rows.size(), Row(next, 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [key, c] : rows[i]) dense[i][col_index[key]] = c;
  return mons.size() - rank(dense);
}

std::vector<SymCoords> phi_series(const Mat& taylor) {
  const std::size_t n = taylor.size();
  const std::size_t k = n == 0 ? 0 : taylor[0].size();
  // f(t) as series with multiset coefficients.
  using SymSeries = std::vector<SymCoords>;
  SymSeries f(k + 1);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (taylor[i][j] != 0) f[j + 1][{static_cast<unsigned>(i + 1)}] = taylor[i][j];
  auto mul = [&](const SymSeries& a, const SymSeries& b) {
    SymSeries out(k + 1);
    for (std::size_t p = 0; p <= k; ++p)
      for (std::size_t q = 0; p + q <= k; ++q)
        for (const auto& [ia, ca] : a[p])
          for (const auto& [ib, cb] : b[q]) {
            auto idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            std::sort(idx.begin(), idx.end());
            out[p + q][idx] += ca * cb;
          }
    return out;
  };
  SymSeries total(k + 1);
  SymSeries power = f;
  for (std::size_t s = 1; s <= k; ++s) {
    for (std::size_t d = 0; d <= k; ++d)
      for (const auto& [idx, c] : power[d]) total[d][idx] += c;
    power = mul(power, f);
  }
  std::vector<SymCoords> cols;
  for (std::size_t d = 1; d <= k; ++d) {
    SymCoords c;
    for (const auto& [idx, v] : total[d])
      if (v != 0) c[idx] = v;
    cols.push_back(c);
  }
  return cols;
}

Q derivative_at_zero(const std::vector<Q>& values) {
  std::vector<Q> diff = values;
  Q result = 0;
  for (std::size_t r = 1; r < values.size(); ++r) {
    for (std::size_t i = 0; i + r < values.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    const Q term = diff[0] / Q(static_cast<long>(r));
    result += (r % 2 == 1) ? term : Q(-term);
  }
  return result;
}

}  // namespace oracle
