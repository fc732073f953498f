#ifndef CISFORGE_DESCENT_HPP
#define CISFORGE_DESCENT_HPP

#include <vector>

#include "cisforge/codes.hpp"

namespace cisforge {

/// Basis of F_{2^m} over F_2 used to expand symbols into bit slices.
struct DescentBasis {
  FieldPtr field;
  std::vector<FieldElement> basis;  // m elements, F_2-linearly independent

  DescentBasis(FieldPtr field, std::vector<FieldElement> basis);
};

/// The polynomial basis {1, w, ..., w^{m-1}} of the field's own modulus.
DescentBasis polynomial_basis(const FieldPtr& field);

/// Coordinates of v in slice-major order: slice s (s = 0..m-1) holds the
/// basis-s coefficient of every input coordinate, slices concatenated.
/// Output entries are F_2 element indices (bits).
std::vector<std::uint32_t> expand_vector(const std::vector<FieldElement>& v,
                                         const DescentBasis& basis);

/// Column indices of the image information set I_j x {1..m} in the
/// slice-major layout, for the j-th natural block of a t-CIS code of
/// dimension k over F_{2^m}.
std::vector<std::size_t> descent_information_set(std::size_t t, std::size_t k, std::size_t m,
                                                 std::size_t j);

/// Binary expansion of a t-CIS code over F_{2^m}: length m*t*k, dimension
/// m*k. The t image information sets are the index products
/// descent_information_set(t, k, m, j); each is verified invertible.
/// Throws when the input field has odd characteristic or the natural blocks
/// of the input are not all information sets.
LinearCode descend(const LinearCode& code, const DescentBasis& basis);

}  // namespace cisforge

#endif
