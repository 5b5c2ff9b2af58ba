#pragma once

#include "jetinv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace jetinv {

using Vector = std::vector<Rational>;

// Dense row-major matrix over Q.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }
  // One matrix row per input vector; all vectors must share a length.
  static ExactMatrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  // Row-major flattening.
  const Vector& data() const { return data_; }

  ExactMatrix transpose() const;
  bool is_zero() const;
  bool is_upper_triangular() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Rational& s, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Vector operator*(const ExactMatrix& a, const Vector& v);

// Rows stacked on top of each other; column counts must agree.
ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom);

}  // namespace jetinv
