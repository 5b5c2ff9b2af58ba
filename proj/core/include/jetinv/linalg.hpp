#pragma once

// Exact linear algebra over Q.
//
// Every routine reduces to integer arithmetic: rational rows are scaled by
// the lcm of their denominators, then eliminated fraction-free. Row updates
// have the form r <- lead(p) * r - r[c] * p followed by division by the row
// content, so no denominators are created and coefficient growth is bounded
// by the primitive part of each row. The reduced row echelon form obtained
// this way is unique up to positive row scaling for a fixed column order,
// which makes kernel bases reproducible.

#include "jetinv/matrix.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace jetinv {

struct SparseEntry {
  std::uint32_t col;
  Integer value;
};
using SparseRow = std::vector<SparseEntry>;  // sorted by col, no zeros

// Incremental fraction-free Gauss-Jordan elimination over Z.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols), pivot_of_col_(cols, -1) {}

  // Returns true if the row enlarged the row space.
  bool add_row(SparseRow row);
  bool add_row(const Vector& row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  // Rows sorted by pivot column.
  std::vector<SparseRow> reduced_rows() const;
  std::vector<std::uint32_t> pivot_columns() const;

  // Basis of {v : R v = 0}, one vector per free column in increasing order,
  // with a 1 at that free column.
  std::vector<Vector> kernel() const;

 private:
  void reduce(SparseRow& row) const;

  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<std::int64_t> pivot_of_col_;
};

SparseRow to_sparse_integer_row(const Vector& row);

std::size_t rank(const ExactMatrix& m);
std::vector<Vector> kernel_basis(const ExactMatrix& m);

// Reduced basis of the row space (rows scaled to have leading entry 1).
std::vector<Vector> row_space_basis(const ExactMatrix& m);

// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<Vector> solve(const ExactMatrix& m, const Vector& b);

// Bareiss determinant; throws on non-square input.
Rational determinant(const ExactMatrix& m);

// Throws std::domain_error when m is singular.
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace jetinv
