#ifndef CISFORGE_FIELD_HPP
#define CISFORGE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cisforge {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// Element of a finite field F_{p^m}, stored as its index in the field's
/// deterministic enumeration order. Index 0 is the zero element; the index
/// of an element with polynomial-basis digits (c_0,...,c_{m-1}) over F_p is
/// sum c_i p^i, so indices 0..p-1 coincide with the prime subfield.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FiniteField* field, std::uint32_t index) : field_(field), index_(index) {}

  std::uint32_t index() const { return index_; }
  const FiniteField* field() const { return field_; }
  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  FieldElement operator+(FieldElement rhs) const;
  FieldElement operator-(FieldElement rhs) const;
  FieldElement operator*(FieldElement rhs) const;
  FieldElement operator/(FieldElement rhs) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t k) const;

  bool operator==(FieldElement rhs) const { return field_ == rhs.field_ && index_ == rhs.index_; }
  bool operator!=(FieldElement rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  const FiniteField* field_ = nullptr;
  std::uint32_t index_ = 0;
};

/// Arithmetic context for F_{p^m}, q = p^m <= 2^16. Construction picks the
/// lexicographically smallest monic irreducible modulus of degree m over F_p
/// (for m = 1 the modulus is x and elements are residues mod p), so a field
/// is fully determined by (p, m) and identical across runs. Contexts are
/// immutable after construction and shared through a process-wide registry;
/// elements of the same field always point at the same context, which makes
/// pointer equality a valid same-field test.
///
/// Multiplication runs on log/antilog tables over a fixed generator; this is
/// an internal acceleration only, enumeration order and all observable
/// semantics are defined by the polynomial-basis representation.
class FiniteField {
 public:
  /// make_field: registry lookup / construction for F_{p^m}.
  static FieldPtr get(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }

  /// Modulus digits over F_p, ascending degree, length m+1, leading digit 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement element(std::uint32_t index) const;
  /// Canonical image of an integer (reduction mod p into the prime subfield).
  FieldElement scalar(std::int64_t c) const;
  /// The polynomial-basis generator x (requires m >= 2); written "w" in CLI syntax.
  FieldElement poly_gen() const;
  /// A fixed multiplicative generator of F_q^*.
  FieldElement mult_gen() const { return {this, gen_}; }

  /// All q elements in deterministic enumeration order, zero first.
  std::vector<FieldElement> elements() const;

  // Index-level arithmetic. Elements delegate here.
  std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_idx(std::uint32_t a) const;
  std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_idx(std::uint32_t a) const;
  std::uint32_t pow_idx(std::uint32_t a, std::int64_t k) const;

  /// Multiplicative order of a nonzero element.
  std::uint32_t order_idx(std::uint32_t a) const;

  /// Polynomial-basis digits of an element, base p, length m.
  std::vector<std::uint32_t> repr(std::uint32_t index) const;
  std::uint32_t from_repr(const std::vector<std::uint32_t>& digits) const;

  std::string element_str(std::uint32_t index) const;

  bool has_char2() const { return p_ == 2; }

 private:
  FiniteField(std::uint32_t p, std::uint32_t m);
  void build_tables();

  std::uint32_t p_, m_, q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t gen_ = 1;
  std::vector<std::uint32_t> exp_;  // exp_[i] = gen^i, i in [0, 2(q-1))
  std::vector<std::uint32_t> log_;  // log_[v] for v in [1, q)
  std::vector<std::uint32_t> pow_p_;
};

bool is_prime_u64(std::uint64_t n);

namespace detail {
inline void check_same_field(const FiniteField* a, const FiniteField* b) {
  if (a != b) throw std::invalid_argument("operands belong to different fields");
}
}  // namespace detail

inline FieldElement FieldElement::operator+(FieldElement rhs) const {
  detail::check_same_field(field_, rhs.field_);
  return {field_, field_->add_idx(index_, rhs.index_)};
}
inline FieldElement FieldElement::operator-(FieldElement rhs) const {
  detail::check_same_field(field_, rhs.field_);
  return {field_, field_->sub_idx(index_, rhs.index_)};
}
inline FieldElement FieldElement::operator*(FieldElement rhs) const {
  detail::check_same_field(field_, rhs.field_);
  return {field_, field_->mul_idx(index_, rhs.index_)};
}
inline FieldElement FieldElement::operator/(FieldElement rhs) const {
  detail::check_same_field(field_, rhs.field_);
  return {field_, field_->mul_idx(index_, field_->inv_idx(rhs.index_))};
}
inline FieldElement FieldElement::operator-() const { return {field_, field_->neg_idx(index_)}; }
inline FieldElement FieldElement::inv() const { return {field_, field_->inv_idx(index_)}; }
inline FieldElement FieldElement::pow(std::int64_t k) const {
  return {field_, field_->pow_idx(index_, k)};
}
inline std::string FieldElement::str() const { return field_->element_str(index_); }

}  // namespace cisforge

#endif
