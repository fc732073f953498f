#ifndef CISFORGE_MATRIX_HPP
#define CISFORGE_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "cisforge/field.hpp"

namespace cisforge {

/// Dense row-major matrix over a finite field; entries are element indices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FiniteField* field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(const FiniteField* field, std::size_t n);

  const FiniteField* field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  FieldElement elem(std::size_t i, std::size_t j) const { return {field_, at(i, j)}; }

  bool operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
  }

  Matrix operator*(const Matrix& rhs) const;

  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  /// Gauss-Jordan inverse; throws std::domain_error when singular.
  Matrix inverse() const;

  Matrix submatrix_cols(const std::vector<std::size_t>& cols) const;

  void swap_rows(std::size_t i, std::size_t j);
  /// row_i += c * row_j
  void add_scaled_row(std::size_t i, std::size_t j, std::uint32_t c);
  void scale_row(std::size_t i, std::uint32_t c);

 private:
  const FiniteField* field_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;
};

}  // namespace cisforge

#endif
