#include "gimel/linalg.hpp"

#include "gimel/errors.hpp"

namespace gimel {

Matrix Matrix::identity(std::size_t size) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::Internal, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < cols_; ++c) m.at(i, c) = at(rows[i], c);
  }
  return m;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t i = 0; i < cols.size(); ++i) m.at(r, i) = at(r, cols[i]);
  }
  return m;
}

Matrix Matrix::append_column(const Vector& v) const {
  if (v.size() != rows_) throw Error(ErrorKind::Internal, "append_column: length mismatch");
  Matrix m(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    m.at(r, cols_) = v[r];
  }
  return m;
}

Matrix Matrix::append_columns(const Matrix& other) const {
  if (other.rows_ != rows_) throw Error(ErrorKind::Internal, "append_columns: row mismatch");
  Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m.at(r, cols_ + c) = other.at(r, c);
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::Internal, "matrix product: shape mismatch");
  Matrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a.at(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b.at(k, c) != 0) m.at(r, c) += x * b.at(k, c);
      }
    }
  }
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::Internal, "matrix-vector product: shape mismatch");
  Vector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (v[c] != 0 && a.at(r, c) != 0) out[r] += a.at(r, c) * v[c];
    }
  }
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != prow) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(sel, k), m.at(prow, k));
    }
    Rational inv = 1 / m.at(prow, c);
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (m.at(prow, k) != 0) m.at(prow, k) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || m.at(r, c) == 0) continue;
      Rational f = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m.at(prow, k) != 0) m.at(r, k) -= f * m.at(prow, k);
      }
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  // Eliminate on the smaller orientation.
  Matrix work = m.rows() > m.cols() ? m.transposed() : m;
  return rref(work).size();
}

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix work = m;
  auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  Matrix aug = m.append_column(b);
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

bool in_column_span(const Matrix& m, const Vector& v) {
  if (is_zero(v)) return true;
  if (m.cols() == 0) return false;
  return rank(m.append_column(v)) == rank(m);
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace gimel
