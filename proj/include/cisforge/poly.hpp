#ifndef CISFORGE_POLY_HPP
#define CISFORGE_POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cisforge/bigint.hpp"
#include "cisforge/field.hpp"

namespace cisforge {

/// Dense univariate polynomial over a finite field. Coefficients are stored
/// as element indices, ascending in degree, with no trailing zeros; the zero
/// polynomial is the empty vector and has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const FiniteField* field) : field_(field) {}
  Poly(const FieldPtr& field) : field_(field.get()) {}
  Poly(const FiniteField* field, std::vector<std::uint32_t> coeff_indices)
      : field_(field), c_(std::move(coeff_indices)) {
    trim();
  }
  Poly(const FieldPtr& field, std::vector<std::uint32_t> coeff_indices)
      : Poly(field.get(), std::move(coeff_indices)) {}

  static Poly x(const FiniteField* field) { return Poly(field, {0, 1}); }
  static Poly constant(FieldElement c) { return Poly(c.field(), {c.index()}); }
  static Poly monomial(const FiniteField* field, std::size_t deg, std::uint32_t coeff_index) {
    std::vector<std::uint32_t> c(deg + 1, 0);
    c[deg] = coeff_index;
    return Poly(field, std::move(c));
  }
  /// x^n - alpha and friends, built from integer scalars mod p.
  static Poly from_ints(const FieldPtr& field, const std::vector<std::int64_t>& scalars);

  const FiniteField* field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  std::uint32_t coeff_index(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  FieldElement coeff(std::size_t i) const { return {field_, coeff_index(i)}; }
  FieldElement leading() const { return {field_, c_.empty() ? 0u : c_.back()}; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  bool operator==(const Poly& rhs) const { return field_ == rhs.field_ && c_ == rhs.c_; }
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const FiniteField* field_ = nullptr;
  std::vector<std::uint32_t> c_;
};

/// Deterministic total order: by degree, then coefficient indices from the
/// leading term down. Used wherever factorization output must be reproducible.
bool poly_less(const Poly& a, const Poly& b);

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(FieldElement c, const Poly& a);
/// Multiply by x^k.
Poly shift(const Poly& a, std::size_t k);

/// Quotient and remainder; deg(remainder) < deg(divisor). Throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

FieldElement eval(const Poly& a, FieldElement point);
Poly derivative(const Poly& a);
Poly monic(const Poly& a);

/// Monic gcd; gcd(a, 0) = monic(a). Throws if both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);
/// (g, s, t) with s*a + t*b = g, g the monic gcd.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

Poly powmod(const Poly& base, const BigInt& e, const Poly& mod);

/// Complete factorization into monic irreducibles.
struct Factorization {
  FieldElement constant;
  std::vector<std::pair<Poly, std::uint32_t>> factors;  // deterministic order

  Poly product() const;
  bool squarefree() const;
};

/// gcd(h, h') = 1, i.e. no repeated roots. Requires deg >= 1.
bool is_separable(const Poly& h);

/// Deterministic squarefree / distinct-degree / equal-degree pipeline; the
/// internal splitting randomness is drawn from a fixed seed so the result is
/// a pure function of the input. Requires deg >= 1.
Factorization factorize(const Poly& h);

/// Rabin's test. Requires deg >= 1.
bool is_irreducible(const Poly& h);

/// Number of monic irreducible polynomials of degree d over F_q,
/// (1/d) * sum_{e | d} mu(d/e) q^e.
BigInt count_irreducibles(std::uint64_t q, std::uint32_t d);

int mobius(std::uint64_t n);

std::string to_string(const Poly& a);
/// Accepts algebraic strings ("x^3+x+1", "x^5-w", "(w+1)*x^2+w") and
/// comma-separated coefficient index lists ascending in x ("1,1,0,1").
Poly parse_poly(const FieldPtr& field, std::string_view text);

}  // namespace cisforge

#endif
