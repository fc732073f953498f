#include "cisforge/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cisforge {

Matrix Matrix::identity(const FiniteField* field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (field_ != rhs.field_) throw std::invalid_argument("matrices over different fields");
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) = field_->add_idx(out.at(i, j), field_->mul_idx(v, rhs.at(k, j)));
      }
    }
  }
  return out;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Matrix::add_scaled_row(std::size_t i, std::size_t j, std::uint32_t c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) {
    at(i, k) = field_->add_idx(at(i, k), field_->mul_idx(c, at(j, k)));
  }
}

void Matrix::scale_row(std::size_t i, std::uint32_t c) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = field_->mul_idx(c, at(i, k));
}

std::size_t Matrix::rank() const {
  Matrix w(*this);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t pivot = r;
    while (pivot < rows_ && w.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    w.swap_rows(r, pivot);
    const std::uint32_t inv = field_->inv_idx(w.at(r, col));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      const std::uint32_t v = w.at(i, col);
      if (v != 0) w.add_scaled_row(i, r, field_->neg_idx(field_->mul_idx(v, inv)));
    }
    ++r;
  }
  return r;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
  Matrix w(*this);
  Matrix inv = identity(field_, rows_);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && w.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) throw std::domain_error("matrix is singular");
    w.swap_rows(col, pivot);
    inv.swap_rows(col, pivot);
    const std::uint32_t scale = field_->inv_idx(w.at(col, col));
    w.scale_row(col, scale);
    inv.scale_row(col, scale);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == col) continue;
      const std::uint32_t v = w.at(i, col);
      if (v == 0) continue;
      const std::uint32_t c = field_->neg_idx(v);
      w.add_scaled_row(i, col, c);
      inv.add_scaled_row(i, col, c);
    }
  }
  return inv;
}

Matrix Matrix::submatrix_cols(const std::vector<std::size_t>& cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= cols_) throw std::invalid_argument("column index out of range");
      out.at(i, j) = at(i, cols[j]);
    }
  }
  return out;
}

}  // namespace cisforge
