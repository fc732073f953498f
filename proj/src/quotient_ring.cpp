#include "cisforge/quotient_ring.hpp"

#include <stdexcept>

namespace cisforge {

namespace {

const QuotientRing* common_ring(const Residue& a, const Residue& b) {
  if (!a.ring || !b.ring) throw std::invalid_argument("residue without a ring");
  if (a.ring != b.ring && !(a.ring->field() == b.ring->field() && a.ring->h() == b.ring->h())) {
    throw std::invalid_argument("residues from different rings");
  }
  return a.ring.get();
}

}  // namespace

bool Residue::operator==(const Residue& rhs) const {
  common_ring(*this, rhs);
  return value == rhs.value;
}

QuotientRing::QuotientRing(FieldPtr field, Poly h) : field_(std::move(field)), h_(std::move(h)) {
  if (h_.field() != field_.get()) throw std::invalid_argument("modulus over a different field");
  if (h_.degree() < 2) throw std::invalid_argument("quotient ring modulus must have degree >= 2");
  if (!h_.is_monic()) throw std::invalid_argument("quotient ring modulus must be monic");
  n_ = static_cast<std::size_t>(h_.degree());
}

RingPtr QuotientRing::make(const FieldPtr& field, Poly h) {
  return RingPtr(new QuotientRing(field, std::move(h)));
}

std::uint64_t QuotientRing::size() const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    if (s > UINT64_MAX / q()) throw std::overflow_error("ring size exceeds 64 bits");
    s *= q();
  }
  return s;
}

Residue QuotientRing::reduce(const Poly& p) const {
  if (p.field() != field_.get()) throw std::invalid_argument("polynomial over a different field");
  return {shared_from_this(), p % h_};
}

Residue QuotientRing::zero() const { return {shared_from_this(), Poly(field_.get())}; }
Residue QuotientRing::one() const { return {shared_from_this(), Poly::constant(field_->one())}; }

Residue QuotientRing::from_index(std::uint64_t index) const {
  std::vector<std::uint32_t> c(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    c[i] = static_cast<std::uint32_t>(index % q());
    index /= q();
  }
  if (index != 0) throw std::invalid_argument("residue index out of range");
  return {shared_from_this(), Poly(field_.get(), std::move(c))};
}

std::uint64_t QuotientRing::to_index(const Residue& a) const {
  std::uint64_t v = 0;
  for (std::size_t i = n_; i-- > 0;) v = v * q() + a.value.coeff_index(i);
  return v;
}

Residue ring_add(const Residue& a, const Residue& b) {
  common_ring(a, b);
  return {a.ring, a.value + b.value};
}

Residue ring_sub(const Residue& a, const Residue& b) {
  common_ring(a, b);
  return {a.ring, a.value - b.value};
}

Residue ring_mul(const Residue& a, const Residue& b) {
  common_ring(a, b);
  return {a.ring, (a.value * b.value) % a.ring->h()};
}

bool is_unit(const Residue& a) {
  if (a.value.is_zero()) return false;
  return gcd(a.value, a.ring->h()).degree() == 0;
}

Matrix expansion_matrix(const Residue& a) {
  const QuotientRing& ring = *a.ring;
  const std::size_t n = ring.n();
  Matrix m(ring.field().get(), n, n);
  Poly cur = a.value;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) m.at(k, j) = cur.coeff_index(j);
    if (k + 1 < n) cur = shift(cur, 1) % ring.h();
  }
  return m;
}

CrtDecomposition::CrtDecomposition(RingPtr ring) : ring_(std::move(ring)) {
  const Poly& h = ring_->h();
  if (!is_separable(h)) {
    throw std::domain_error("CRT into fields requires a separable modulus");
  }
  factors_ = factorize(h);

  const FieldPtr& base = ring_->field();
  const std::uint32_t p = base->p();
  const std::uint32_t m = base->m();

  Poly hh = monic(h);
  for (const auto& [factor, mult] : factors_.factors) {
    (void)mult;  // all 1 for separable h
    const auto d = static_cast<std::uint32_t>(factor.degree());
    FieldPtr big = FiniteField::get(p, m * d);

    // Embedding of F_q: first root of the base modulus in the big field
    // (identity map when the base field is prime).
    std::uint32_t gen_image = 0;
    if (m == 1) {
      gen_image = 1;  // unused
    } else {
      Poly base_mod(big.get());
      {
        std::vector<std::uint32_t> c(base->modulus().size());
        for (std::size_t i = 0; i < c.size(); ++i) {
          c[i] = big->scalar(static_cast<std::int64_t>(base->modulus()[i])).index();
        }
        base_mod = Poly(big.get(), std::move(c));
      }
      bool found = false;
      for (std::uint32_t v = 0; v < big->q(); ++v) {
        if (eval(base_mod, big->element(v)).is_zero()) {
          gen_image = v;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("base modulus has no root in the constituent field");
    }
    embed_gen_.push_back(gen_image);
    constituent_fields_.push_back(big);

    // xi_i: first root of the embedded factor, in enumeration order.
    const std::size_t idx = constituent_fields_.size() - 1;
    Poly embedded(big.get());
    {
      std::vector<std::uint32_t> c(factor.coeffs().size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = embed(idx, base->element(factor.coeff_index(i))).index();
      }
      embedded = Poly(big.get(), std::move(c));
    }
    bool found_root = false;
    for (std::uint32_t v = 0; v < big->q(); ++v) {
      if (eval(embedded, big->element(v)).is_zero()) {
        roots_.emplace_back(big.get(), v);
        found_root = true;
        break;
      }
    }
    if (!found_root) throw std::logic_error("irreducible factor has no root in its splitting field");

    // F_p-linear map (coeff digits of a deg<d poly over F_q) -> repr digits of
    // its value at xi_i; inverted once for lift().
    const FieldElement xi = roots_.back();
    const std::size_t dim = static_cast<std::size_t>(m) * d;
    FieldPtr prime = FiniteField::get(p, 1);
    Matrix eval_map(prime.get(), dim, dim);
    for (std::uint32_t a = 0; a < d; ++a) {
      for (std::uint32_t b = 0; b < m; ++b) {
        // basis vector w^b * x^a evaluated at xi
        FieldElement wb = (m == 1) ? big->one() : big->element(gen_image).pow(b);
        FieldElement value = wb * xi.pow(a);
        const auto digits = big->repr(value.index());
        const std::size_t col = static_cast<std::size_t>(a) * m + b;
        for (std::size_t rrow = 0; rrow < dim; ++rrow) eval_map.at(rrow, col) = digits[rrow];
      }
    }
    lift_inverse_.push_back(eval_map.inverse());

    // Bezout idempotent e_i = s * (h / h_i) mod h with s = (h/h_i)^{-1} mod h_i.
    Poly cofactor = hh / factor;
    ExtGcd eg = ext_gcd(cofactor, factor);
    if (eg.g.degree() != 0) throw std::logic_error("factor not coprime to cofactor");
    idempotents_.push_back((eg.s * cofactor) % hh);
  }
}

FieldElement CrtDecomposition::embed(std::size_t i, FieldElement c) const {
  const FieldPtr& base = ring_->field();
  if (c.field() != base.get()) throw std::invalid_argument("embedding expects a base-field element");
  const FieldPtr& big = constituent_fields_[i];
  if (base->m() == 1) return big->element(c.index());
  const auto digits = base->repr(c.index());
  const FieldElement g = big->element(embed_gen_[i]);
  FieldElement acc = big->zero();
  for (std::size_t b = digits.size(); b-- > 0;) {
    acc = acc * g + big->scalar(static_cast<std::int64_t>(digits[b]));
  }
  return acc;
}

FieldElement CrtDecomposition::eval_at_root(std::size_t i, const Poly& a) const {
  const FieldElement xi = roots_[i];
  FieldElement acc = constituent_fields_[i]->zero();
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    acc = acc * xi + embed(i, ring_->field()->element(a.coeff_index(k)));
  }
  return acc;
}

std::vector<FieldElement> CrtDecomposition::project(const Poly& a) const {
  std::vector<FieldElement> out;
  out.reserve(r());
  for (std::size_t i = 0; i < r(); ++i) out.push_back(eval_at_root(i, a));
  return out;
}

std::vector<FieldElement> CrtDecomposition::project(const Residue& a) const {
  if (a.ring != ring_ && !(a.ring->field() == ring_->field() && a.ring->h() == ring_->h())) {
    throw std::invalid_argument("residue from a different ring");
  }
  return project(a.value);
}

Poly CrtDecomposition::lift(std::size_t i, FieldElement value) const {
  const FieldPtr& big = constituent_fields_[i];
  if (value.field() != big.get()) throw std::invalid_argument("value not in constituent field");
  const FieldPtr& base = ring_->field();
  const std::uint32_t m = base->m();
  const auto d = static_cast<std::uint32_t>(factors_.factors[i].first.degree());
  const std::size_t dim = static_cast<std::size_t>(m) * d;

  FieldPtr prime = FiniteField::get(base->p(), 1);
  Matrix rhs(prime.get(), dim, 1);
  const auto digits = big->repr(value.index());
  for (std::size_t rrow = 0; rrow < dim; ++rrow) rhs.at(rrow, 0) = digits[rrow];
  Matrix sol = lift_inverse_[i] * rhs;

  std::vector<std::uint32_t> coeffs(d, 0);
  for (std::uint32_t a = 0; a < d; ++a) {
    std::vector<std::uint32_t> digit_vec(m, 0);
    for (std::uint32_t b = 0; b < m; ++b) digit_vec[b] = sol.at(static_cast<std::size_t>(a) * m + b, 0);
    coeffs[a] = base->from_repr(digit_vec);
  }
  return Poly(base.get(), std::move(coeffs));
}

Residue CrtDecomposition::reconstruct(const std::vector<FieldElement>& values) const {
  if (values.size() != r()) throw std::invalid_argument("wrong number of constituent values");
  Poly acc(ring_->field().get());
  for (std::size_t i = 0; i < r(); ++i) {
    acc = acc + (lift(i, values[i]) * idempotents_[i]) % ring_->h();
  }
  return {ring_, acc % ring_->h()};
}

CrtDecomposition crt_decompose(const RingPtr& ring) { return CrtDecomposition(ring); }

}  // namespace cisforge
