#include "cisforge/descent.hpp"

#include <stdexcept>

namespace cisforge {

namespace {

// m x m matrix over F_2 whose columns are the basis reprs; invertible iff
// the basis spans. Its inverse converts polynomial-basis digits into
// coordinates with respect to the given basis.
Matrix basis_matrix(const FieldPtr& field, const std::vector<FieldElement>& basis) {
  const std::uint32_t m = field->m();
  FieldPtr f2 = FiniteField::get(2, 1);
  Matrix mat(f2.get(), m, m);
  for (std::uint32_t col = 0; col < m; ++col) {
    const auto digits = field->repr(basis[col].index());
    for (std::uint32_t row = 0; row < m; ++row) mat.at(row, col) = digits[row];
  }
  return mat;
}

}  // namespace

DescentBasis::DescentBasis(FieldPtr field_in, std::vector<FieldElement> basis_in)
    : field(std::move(field_in)), basis(std::move(basis_in)) {
  if (field->p() != 2) throw std::invalid_argument("descent basis requires characteristic 2");
  if (basis.size() != field->m()) throw std::invalid_argument("basis must have m elements");
  for (const auto& e : basis) {
    if (e.field() != field.get()) throw std::invalid_argument("basis element from a different field");
  }
  if (basis_matrix(field, basis).rank() != field->m()) {
    throw std::invalid_argument("basis elements are F_2-linearly dependent");
  }
}

DescentBasis polynomial_basis(const FieldPtr& field) {
  std::vector<FieldElement> basis;
  basis.reserve(field->m());
  FieldElement w = field->m() >= 2 ? field->poly_gen() : field->one();
  FieldElement acc = field->one();
  for (std::uint32_t i = 0; i < field->m(); ++i) {
    basis.push_back(acc);
    acc = acc * w;
  }
  return {field, std::move(basis)};
}

std::vector<std::uint32_t> expand_vector(const std::vector<FieldElement>& v,
                                         const DescentBasis& basis) {
  const FieldPtr& field = basis.field;
  const std::uint32_t m = field->m();
  FieldPtr f2 = FiniteField::get(2, 1);
  Matrix change = basis_matrix(field, basis.basis).inverse();

  std::vector<std::uint32_t> out(v.size() * m, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].field() != field.get()) throw std::invalid_argument("vector entry from a different field");
    const auto digits = field->repr(v[i].index());
    // coordinates of v_i with respect to the basis
    for (std::uint32_t s = 0; s < m; ++s) {
      std::uint32_t bit = 0;
      for (std::uint32_t r = 0; r < m; ++r) bit ^= change.at(s, r) & digits[r];
      out[static_cast<std::size_t>(s) * v.size() + i] = bit;
    }
  }
  return out;
}

std::vector<std::size_t> descent_information_set(std::size_t t, std::size_t k, std::size_t m,
                                                 std::size_t j) {
  const std::size_t n = t * k;
  std::vector<std::size_t> cols;
  cols.reserve(m * k);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t i = 0; i < k; ++i) cols.push_back(s * n + j * k + i);
  }
  return cols;
}

LinearCode descend(const LinearCode& code, const DescentBasis& basis) {
  if (code.field->p() != 2) throw std::invalid_argument("descent requires characteristic 2");
  if (code.field != basis.field) throw std::invalid_argument("basis field differs from code field");
  if (code.t < 2 || code.length != code.t * code.dimension) {
    throw std::invalid_argument("descent needs a t-CIS code with t natural blocks");
  }
  for (std::size_t j = 0; j < code.t; ++j) {
    if (!is_information_set(code, natural_block(code, j))) {
      throw std::invalid_argument("input code is not CIS on its natural blocks");
    }
  }

  const std::size_t k = code.dimension;
  const std::size_t m = code.field->m();
  FieldPtr f2 = FiniteField::get(2, 1);

  // F_2-basis of the code: e_s * row_i for all s, i; rows grouped by slice
  Matrix g(f2.get(), m * k, m * code.length);
  std::size_t out_row = 0;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<FieldElement> scaled(code.length);
      for (std::size_t j = 0; j < code.length; ++j) {
        scaled[j] = basis.basis[s] * code.gen_matrix.elem(i, j);
      }
      const auto bits = expand_vector(scaled, basis);
      for (std::size_t j = 0; j < bits.size(); ++j) g.at(out_row, j) = bits[j];
      ++out_row;
    }
  }

  LinearCode binary = make_code(f2, std::move(g), Family::Generic, code.t);
  for (std::size_t j = 0; j < code.t; ++j) {
    if (!is_information_set(binary, descent_information_set(code.t, k, m, j))) {
      throw std::logic_error("descended image lost an information set");
    }
  }
  return binary;
}

}  // namespace cisforge
