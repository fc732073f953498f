#include "cisforge/enumeration.hpp"

#include <algorithm>

namespace cisforge {

BigInt count_cis(int t, const Poly& h) {
  if (t < 2) throw std::invalid_argument("index t must be >= 2");
  if (h.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
  if (!is_separable(h)) throw std::domain_error("count_cis requires a separable modulus");
  const std::uint64_t q = h.field()->q();
  Factorization factorization = factorize(h);
  BigInt total = 1;
  for (const auto& [factor, mult] : factorization.factors) {
    (void)mult;
    const BigInt choices = big_pow(q, static_cast<unsigned long>(factor.degree())) - 1;
    total *= big_pow(choices, static_cast<unsigned long>(t - 1));
  }
  return total;
}

BigInt count_cis_exhaustive(int t, const Poly& h, std::uint64_t budget) {
  if (t < 2) throw std::invalid_argument("index t must be >= 2");
  RingPtr ring = QuotientRing::make(FiniteField::get(h.field()->p(), h.field()->m()), h);
  const std::uint64_t size = ring->size();
  std::uint64_t space = 1;
  for (int i = 0; i + 1 < t; ++i) {
    if (space > budget / size) throw BudgetExceeded("tuple scan exceeds the oracle budget");
    space *= size;
  }

  // unit table once, then a literal odometer over R^{t-1}
  std::vector<char> unit(size, 0);
  for (std::uint64_t i = 0; i < size; ++i) unit[i] = is_unit(ring->from_index(i)) ? 1 : 0;

  const auto slots = static_cast<std::size_t>(t - 1);
  std::vector<std::uint64_t> digit(slots, 0);
  BigInt count = 0;
  for (std::uint64_t idx = 0;; ++idx) {
    bool all = true;
    for (std::size_t i = 0; i < slots; ++i) {
      if (!unit[digit[i]]) {
        all = false;
        break;
      }
    }
    if (all) ++count;
    std::size_t pos = 0;
    while (pos < slots && digit[pos] == size - 1) digit[pos++] = 0;
    if (pos == slots) break;
    ++digit[pos];
  }
  return count;
}

CountReport count_report(int t, const Poly& h, bool with_oracle, std::uint64_t budget) {
  CountReport report;
  report.q = h.field()->q();
  report.t = t;
  report.h = h;
  report.family = classify_family(h);
  report.formula_count = count_cis(t, h);
  if (with_oracle) report.oracle_count = count_cis_exhaustive(t, h, budget);
  return report;
}

BigInt count_codes_containing(const std::vector<Poly>& b, const CrtDecomposition& crt) {
  if (b.size() < 2) throw std::invalid_argument("b must have t >= 2 coordinates");
  const int t = static_cast<int>(b.size());
  const std::uint64_t q = crt.ring()->field()->q();
  BigInt total = 1;
  for (std::size_t i = 0; i < crt.r(); ++i) {
    const FieldElement b0 = crt.eval_at_root(i, b[0]);
    if (b0.is_zero()) {
      bool all_zero = true;
      for (int j = 1; j < t; ++j) {
        if (!crt.eval_at_root(i, b[static_cast<std::size_t>(j)]).is_zero()) {
          all_zero = false;
          break;
        }
      }
      if (!all_zero) return 0;  // b_j^i = b_0^i a_j^i unsatisfiable
      const auto d = static_cast<unsigned long>(crt.factors().factors[i].first.degree());
      total *= big_pow(big_pow(q, d) - 1, static_cast<unsigned long>(t - 1));
    } else {
      for (int j = 1; j < t; ++j) {
        const FieldElement forced = crt.eval_at_root(i, b[static_cast<std::size_t>(j)]) / b0;
        if (forced.is_zero()) return 0;  // a_j^i would not be a unit constituent
      }
      // exactly one choice in this constituent
    }
  }
  return total;
}

BigInt count_containing(const std::vector<Poly>& b, const CrtDecomposition& crt) {
  const auto& factors = crt.factors().factors;
  const int deg0 = factors.front().first.degree();
  const bool equal = std::all_of(factors.begin(), factors.end(),
                                 [&](const auto& fm) { return fm.first.degree() == deg0; });
  if (!equal) throw std::invalid_argument("count_containing requires equal factor degrees");
  bool nonzero = std::any_of(b.begin(), b.end(), [](const Poly& p) { return !p.is_zero(); });
  if (!nonzero) throw std::invalid_argument("b must be nonzero");
  return count_codes_containing(b, crt);
}

BigInt containment_bound(int t, const CrtDecomposition& crt) {
  const std::uint64_t q = crt.ring()->field()->q();
  const auto r = static_cast<unsigned long>(crt.r());
  const auto d = static_cast<unsigned long>(crt.factors().factors.front().first.degree());
  return big_pow(big_pow(q, d) - 1, static_cast<unsigned long>(t - 1) * (r - 1));
}

UniqueContainment verify_unique_containment(const FieldPtr& field, std::size_t n,
                                            const std::vector<Poly>& b) {
  if (!is_prime_u64(n)) throw std::invalid_argument("co-index n must be prime");
  if (n % field->p() == 0) throw std::invalid_argument("n must be coprime to q");
  std::vector<std::int64_t> coeffs(n + 1, 0);
  coeffs[0] = -1;
  coeffs[n] = 1;
  Poly h = Poly::from_ints(field, coeffs);
  RingPtr ring = QuotientRing::make(field, h);
  CrtDecomposition crt(ring);
  if (crt.r() != 2) {
    throw std::invalid_argument("x^n-1 must factor into exactly two irreducibles over F_q");
  }
  const bool has_linear = crt.factors().factors.front().first.degree() == 1;
  if (!has_linear) throw std::invalid_argument("x^n-1 factorization must contain x-1");

  if (b.size() < 2) throw std::invalid_argument("b must have t >= 2 coordinates");
  bool nonzero = false;
  for (const auto& bi : b) {
    Poly reduced = bi % h;
    if (!reduced.is_zero()) nonzero = true;
    std::size_t weight = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(reduced.degree()) + 1; ++i) {
      if (reduced.coeff_index(i) != 0) ++weight;
    }
    if (weight >= n) {
      throw std::invalid_argument("every nonzero coordinate of b must have weight < n");
    }
  }
  if (!nonzero) throw std::invalid_argument("b must be nonzero");

  UniqueContainment out;
  out.count = count_codes_containing(b, crt);
  return out;
}

}  // namespace cisforge
