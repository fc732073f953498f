#ifndef CISFORGE_ASYMPTOTICS_HPP
#define CISFORGE_ASYMPTOTICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cisforge/bigint.hpp"
#include "cisforge/field.hpp"
#include "cisforge/poly.hpp"

namespace cisforge {

/// q-ary entropy H_q(y) = y log_q(q-1) - y log_q(y) - (1-y) log_q(1-y),
/// defined on the open interval 0 < y < (q-1)/q.
double entropy_q(std::uint32_t q, double y);

/// The unique delta in (0, (q-1)/q) with H_q(delta) = (t-1)/(rt), by
/// bisection to absolute tolerance 1e-9. Throws when the target is >= 1.
double gv_delta(std::uint32_t q, int t, int r);

struct BinomialIrreducibility {
  bool irreducible = false;
  bool cond_prime_factors = false;  // every prime of n divides ord(alpha) but not (q-1)/ord
  bool cond_mod4 = false;           // q = 1 (mod 4) whenever n = 0 (mod 4)
  std::uint32_t alpha_order = 0;
};

/// Irreducibility of the binomial x^n - alpha via the classical order
/// conditions; cross-checked against direct factorization (the two routes
/// must agree, a disagreement throws std::logic_error).
BinomialIrreducibility binomial_irreducible(const FieldPtr& field, std::size_t n,
                                            FieldElement alpha);

/// True iff x^n - 1 = (x-1) * (irreducible of degree n-1) over F_q,
/// equivalently q is a primitive root mod n. Both checks run and must agree.
/// Requires n prime and coprime to q.
bool qc_two_factor_shape(const FieldPtr& field, std::size_t n);

struct QtFamilyReport {
  bool found = false;          // a qualifying e | q-1 exists
  std::uint64_t e = 0;         // order of the chosen alpha
  std::uint64_t prime = 0;     // prime divisor of e generating the exponent family
  std::uint32_t alpha_index = 0;
  std::vector<std::size_t> lengths;  // n = prime^i <= bound, all verified irreducible
};

/// Enumerates n = p^i <= bound with x^n - alpha irreducible, for a fixed
/// alpha whose order e | q-1 satisfies gcd(e, (q-1)/e) = 1, e > 1.
QtFamilyReport qt_irreducible_family(const FieldPtr& field, std::size_t bound);

/// One row of the finite-n expurgation comparison: an upper estimate for the
/// number of t-CIS codes containing a word of weight <= d versus the total
/// count. Both sides are reported; no crossover is asserted.
struct ExpurgationRow {
  std::size_t n = 0;
  bool ok = false;
  std::string note;  // reason when skipped
  double delta = 0.0;
  std::size_t d = 0;
  BigInt ball_estimate;   // V_q(tn, d) * (q^{n/r}-1)^{(t-1)(r-1)}
  std::optional<BigInt> exact_containing;  // sum over the ball of exact counts, when feasible
  BigInt total;           // (q^{n/r}-1)^{r(t-1)}
  bool estimate_below_total = false;
};

std::vector<ExpurgationRow> expurgation_report(const FieldPtr& field, int t, int r,
                                               std::size_t n_max,
                                               std::optional<double> delta = std::nullopt);

/// Hamming ball volume V_q(n, radius) = sum_{i<=radius} C(n,i) (q-1)^i.
BigInt ball_volume(std::uint32_t q, std::size_t n, std::size_t radius);

}  // namespace cisforge

#endif
