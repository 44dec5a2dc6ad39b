#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gimel/rational.hpp"

namespace gimel {

using Vector = std::vector<Rational>;

// Dense row-major rational matrix. The complexes that reach the filtration
// engine are small after simplification, so dense storage keeps things simple.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t size);
  // Columns given as vectors of equal length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  bool is_zero() const;

  Matrix transposed() const;
  // Submatrix keeping the given rows (in order) and all columns.
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  Matrix select_cols(const std::vector<std::size_t>& cols) const;
  // [this | v]
  Matrix append_column(const Vector& v) const;
  Matrix append_columns(const Matrix& other) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(const Matrix& m);
// Basis of the right kernel, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);
// Some x with m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
bool in_column_span(const Matrix& m, const Vector& v);

bool is_zero(const Vector& v);

}  // namespace gimel
