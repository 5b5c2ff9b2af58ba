#include "jetinv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetinv {

namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().value < 0) g = -g;
  if (g != 1) {
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  }
}

// a * x - b * y, merged by column.
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
      out.push_back({x[i].col, a * x[i].value});
      ++i;
    } else if (i == x.size() || y[j].col < x[i].col) {
      out.push_back({y[j].col, -b * y[j].value});
      ++j;
    } else {
      Integer v = a * x[i].value - b * y[j].value;
      if (v != 0) out.push_back({x[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

const Integer* entry_at(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseEntry& e, std::uint32_t c) { return e.col < c; });
  if (it == row.end() || it->col != col) return nullptr;
  return &it->value;
}

}  // namespace

SparseRow to_sparse_integer_row(const Vector& row) {
  Integer l = 1;
  for (const auto& q : row) {
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  SparseRow out;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] == 0) continue;
    Integer v = row[c].get_num() * (l / row[c].get_den());
    out.push_back({static_cast<std::uint32_t>(c), std::move(v)});
  }
  return out;
}

void RowEchelon::reduce(SparseRow& row) const {
  std::size_t pos = 0;
  while (pos < row.size()) {
    const auto p = pivot_of_col_[row[pos].col];
    if (p < 0) {
      ++pos;
      continue;
    }
    const SparseRow& prow = rows_[static_cast<std::size_t>(p)];
    const Integer lead = prow.front().value;
    const Integer coeff = row[pos].value;
    const Integer g = gcd(lead, coeff);
    row = combine(lead / g, row, coeff / g, prow);
    make_primitive(row);
    // Entries before pos are non-pivot columns and remain so; rescan from pos.
  }
}

bool RowEchelon::add_row(SparseRow row) {
  for (const auto& e : row) {
    if (e.col >= cols_) throw std::out_of_range("sparse row column out of range");
  }
  make_primitive(row);
  reduce(row);
  if (row.empty()) return false;
  const std::uint32_t pc = row.front().col;
  // Clear the new pivot column from existing rows to stay fully reduced.
  for (auto& other : rows_) {
    const Integer* v = entry_at(other, pc);
    if (v == nullptr) continue;
    const Integer coeff = *v;
    const Integer lead = row.front().value;
    const Integer g = gcd(lead, coeff);
    other = combine(lead / g, other, coeff / g, row);
    make_primitive(other);
  }
  pivot_of_col_[pc] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool RowEchelon::add_row(const Vector& row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  return add_row(to_sparse_integer_row(row));
}

std::vector<SparseRow> RowEchelon::reduced_rows() const {
  std::vector<SparseRow> out;
  out.reserve(rows_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_of_col_[c] >= 0) out.push_back(rows_[static_cast<std::size_t>(pivot_of_col_[c])]);
  }
  return out;
}

std::vector<std::uint32_t> RowEchelon::pivot_columns() const {
  std::vector<std::uint32_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_of_col_[c] >= 0) out.push_back(static_cast<std::uint32_t>(c));
  return out;
}

std::vector<Vector> RowEchelon::kernel() const {
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_of_col_[f] >= 0) continue;
    Vector v(cols_);
    v[f] = 1;
    for (const auto& row : rows_) {
      const Integer* a = entry_at(row, static_cast<std::uint32_t>(f));
      if (a == nullptr) continue;
      v[row.front().col] = -make_rational(*a, row.front().value);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const ExactMatrix& m) {
  RowEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.add_row(m.row(r));
  return ech.rank();
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  RowEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.add_row(m.row(r));
  return ech.kernel();
}

std::vector<Vector> row_space_basis(const ExactMatrix& m) {
  RowEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.add_row(m.row(r));
  std::vector<Vector> out;
  for (const auto& row : ech.reduced_rows()) {
    Vector v(m.cols());
    const Integer& lead = row.front().value;
    for (const auto& e : row) v[e.col] = make_rational(e.value, lead);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vector> solve(const ExactMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  const std::size_t n = m.cols();
  RowEchelon ech(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    row.push_back(b[r]);
    ech.add_row(row);
  }
  Vector x(n);
  for (const auto& row : ech.reduced_rows()) {
    const std::uint32_t pc = row.front().col;
    if (pc == n) return std::nullopt;
    const Integer* rhs = entry_at(row, static_cast<std::uint32_t>(n));
    if (rhs != nullptr) x[pc] = make_rational(*rhs, row.front().value);
  }
  return x;
}

Rational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss over Z after clearing row denominators.
  Rational scale = 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (m(r, c) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    scale /= Rational(l);
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1]);
  if (sign < 0) det = -det;
  det *= scale;
  return det;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RowEchelon ech(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row(2 * n);
    for (std::size_t c = 0; c < n; ++c) row[c] = m(r, c);
    row[n + r] = 1;
    ech.add_row(row);
  }
  const auto rows = ech.reduced_rows();
  if (rows.size() != n || rows.back().front().col != n - 1) {
    throw std::domain_error("matrix is singular");
  }
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Integer& lead = rows[r].front().value;
    for (const auto& e : rows[r]) {
      if (e.col >= n) inv(r, e.col - n) = make_rational(e.value, lead);
    }
  }
  return inv;
}

}  // namespace jetinv
