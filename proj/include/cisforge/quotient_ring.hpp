#ifndef CISFORGE_QUOTIENT_RING_HPP
#define CISFORGE_QUOTIENT_RING_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "cisforge/matrix.hpp"
#include "cisforge/poly.hpp"

namespace cisforge {

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

/// Element of R = F_q[x]/<h(x)>, held as its reduced representative.
struct Residue {
  RingPtr ring;
  Poly value;  // deg < n, already reduced

  bool operator==(const Residue& rhs) const;
};

/// R = F_q[x]/<h(x)> for a monic h of degree n >= 2. h need not be separable;
/// only the CRT decomposition demands separability.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  static RingPtr make(const FieldPtr& field, Poly h);

  const FieldPtr& field() const { return field_; }
  const Poly& h() const { return h_; }
  std::size_t n() const { return n_; }
  std::uint32_t q() const { return field_->q(); }

  /// q^n as a 64-bit value; throws std::overflow_error when it does not fit.
  std::uint64_t size() const;

  Residue reduce(const Poly& p) const;
  Residue zero() const;
  Residue one() const;
  /// Residue whose coefficient digits are the base-q digits of index (so the
  /// deterministic residue order is index order, zero first).
  Residue from_index(std::uint64_t index) const;
  std::uint64_t to_index(const Residue& a) const;

 private:
  QuotientRing(FieldPtr field, Poly h);

  FieldPtr field_;
  Poly h_;
  std::size_t n_;
};

Residue ring_add(const Residue& a, const Residue& b);
Residue ring_sub(const Residue& a, const Residue& b);
Residue ring_mul(const Residue& a, const Residue& b);

/// gcd(a, h) = 1, i.e. a is invertible in R.
bool is_unit(const Residue& a);

/// n x n matrix whose row k is the coefficient vector of x^k * a(x) mod h.
/// Circulant for h = x^n - 1, twistulant for x^n - alpha.
Matrix expansion_matrix(const Residue& a);

/// CRT data for separable h: constituent fields F_{q^{d_i}}, one chosen root
/// of each irreducible factor, and the Bezout idempotents for reconstruction.
class CrtDecomposition {
 public:
  explicit CrtDecomposition(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const Factorization& factors() const { return factors_; }
  std::size_t r() const { return factors_.factors.size(); }
  const std::vector<FieldPtr>& constituent_fields() const { return constituent_fields_; }
  const std::vector<FieldElement>& roots() const { return roots_; }

  /// Image of a base-field element in constituent i.
  FieldElement embed(std::size_t i, FieldElement c) const;
  /// a(xi_i) evaluated in constituent field i.
  FieldElement eval_at_root(std::size_t i, const Poly& a) const;
  std::vector<FieldElement> project(const Residue& a) const;
  std::vector<FieldElement> project(const Poly& a) const;

  /// Inverse of eval_at_root on polynomials of degree < d_i.
  Poly lift(std::size_t i, FieldElement value) const;
  /// Residue with the given constituent values (inverse CRT).
  Residue reconstruct(const std::vector<FieldElement>& values) const;

 private:
  RingPtr ring_;
  Factorization factors_;
  std::vector<FieldPtr> constituent_fields_;
  std::vector<std::uint32_t> embed_gen_;  // image of the base poly generator, per constituent
  std::vector<FieldElement> roots_;
  std::vector<Matrix> lift_inverse_;  // inverse of the F_p-linear eval map, per constituent
  std::vector<Poly> idempotents_;
};

CrtDecomposition crt_decompose(const RingPtr& ring);

}  // namespace cisforge

#endif
