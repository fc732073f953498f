#ifndef CISFORGE_ENUMERATION_HPP
#define CISFORGE_ENUMERATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cisforge/bigint.hpp"
#include "cisforge/codes.hpp"

namespace cisforge {

struct CountReport {
  BigInt formula_count;
  std::optional<BigInt> oracle_count;
  std::uint32_t q = 0;
  int t = 0;
  Poly h;
  Family family = Family::Generic;

  bool mismatch() const { return oracle_count && *oracle_count != formula_count; }
};

/// Number of one-generator t-CIS codes for separable h:
/// product over factor degrees d_i of (q^{d_i} - 1)^{t-1}.
BigInt count_cis(int t, const Poly& h);

/// Independent oracle: scans all residue tuples in R^{t-1} and counts the
/// all-unit ones. Requires q^{n(t-1)} <= budget.
BigInt count_cis_exhaustive(int t, const Poly& h, std::uint64_t budget = 1ULL << 24);

CountReport count_report(int t, const Poly& h, bool with_oracle,
                         std::uint64_t budget = 1ULL << 24);

/// Exact number of t-CIS codes C_a with b in C_a, computed constituent-wise.
/// b has t coordinates in R. Free constituents (b^i entirely zero) contribute
/// (q^{d_i}-1)^{t-1} choices each. This is the general engine; no equal-degree
/// assumption.
BigInt count_codes_containing(const std::vector<Poly>& b, const CrtDecomposition& crt);

/// Containment count under the equal-degree hypothesis, bounded by
/// (q^{n/r}-1)^{(t-1)(r-1)} for nonzero b. Throws unless all factor degrees
/// of h agree and b is nonzero.
BigInt count_containing(const std::vector<Poly>& b, const CrtDecomposition& crt);

/// The bound value (q^{n/r}-1)^{(t-1)(r-1)} itself.
BigInt containment_bound(int t, const CrtDecomposition& crt);

struct UniqueContainment {
  BigInt count;  // 0 or 1 over F_2; exact in general
};

/// Number of t-CIS QC codes containing b, for prime n with the two-factor
/// factorization x^n-1 = (x-1)*m(x) and every nonzero coordinate of b of
/// weight < n. Hypothesis violations throw std::invalid_argument with a
/// distinct message per condition.
UniqueContainment verify_unique_containment(const FieldPtr& field, std::size_t n,
                                            const std::vector<Poly>& b);

}  // namespace cisforge

#endif
