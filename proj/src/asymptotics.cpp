#include "cisforge/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "cisforge/enumeration.hpp"
#include "cisforge/quotient_ring.hpp"

namespace cisforge {

double entropy_q(std::uint32_t q, double y) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  const double upper = static_cast<double>(q - 1) / q;
  // the right endpoint is included: H_q((q-1)/q) = 1 exactly
  if (!(y > 0.0 && y <= upper)) {
    throw std::domain_error("entropy argument must lie in (0, (q-1)/q]");
  }
  const double lq = std::log(static_cast<double>(q));
  return y * std::log(static_cast<double>(q - 1)) / lq - y * std::log(y) / lq -
         (1.0 - y) * std::log(1.0 - y) / lq;
}

double gv_delta(std::uint32_t q, int t, int r) {
  if (t < 2 || r < 1) throw std::invalid_argument("need t >= 2 and r >= 1");
  const double target = static_cast<double>(t - 1) / (static_cast<double>(r) * t);
  if (target >= 1.0) throw std::domain_error("entropy target must be below 1");
  double lo = 0.0;
  double hi = static_cast<double>(q - 1) / q;
  // H_q is strictly increasing on (0, (q-1)/q) from 0 to 1
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (entropy_q(q, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-12) break;
  }
  return 0.5 * (lo + hi);
}

BinomialIrreducibility binomial_irreducible(const FieldPtr& field, std::size_t n,
                                            FieldElement alpha) {
  if (alpha.field() != field.get()) throw std::invalid_argument("alpha from a different field");
  if (alpha.is_zero()) throw std::invalid_argument("alpha must be nonzero");
  if (n < 1) throw std::invalid_argument("n must be >= 1");

  BinomialIrreducibility out;
  out.alpha_order = field->order_idx(alpha.index());
  const std::uint64_t cofactor = (field->q() - 1) / out.alpha_order;

  out.cond_prime_factors = true;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d) continue;
    if (out.alpha_order % d != 0 || cofactor % d == 0) out.cond_prime_factors = false;
    while (rest % d == 0) rest /= d;
  }
  if (rest > 1 && (out.alpha_order % rest != 0 || cofactor % rest == 0)) {
    out.cond_prime_factors = false;
  }
  out.cond_mod4 = (n % 4 != 0) || (field->q() % 4 == 1);
  out.irreducible = out.cond_prime_factors && out.cond_mod4;

  // cross-check against the factorization route
  std::vector<std::uint32_t> c(n + 1, 0);
  c[0] = field->neg_idx(alpha.index());
  c[n] = 1;
  Poly binomial(field.get(), std::move(c));
  const bool direct = is_irreducible(binomial);
  if (direct != out.irreducible) {
    throw std::logic_error("binomial irreducibility conditions disagree with factorization");
  }
  return out;
}

bool qc_two_factor_shape(const FieldPtr& field, std::size_t n) {
  if (!is_prime_u64(n)) throw std::invalid_argument("n must be prime");
  if (n % field->p() == 0) throw std::invalid_argument("n must not divide q");

  // route 1: factorization shape
  std::vector<std::int64_t> coeffs(n + 1, 0);
  coeffs[0] = -1;
  coeffs[n] = 1;
  Poly h = Poly::from_ints(field, coeffs);
  Factorization factorization = factorize(h);
  bool shape = factorization.factors.size() == 2;
  if (shape) {
    const auto& first = factorization.factors.front().first;
    const auto& second = factorization.factors.back().first;
    shape = first.degree() == 1 && second.degree() == static_cast<int>(n) - 1;
  }

  // route 2: q primitive mod n
  std::uint64_t ord = 1;
  std::uint64_t acc = field->q() % n;
  while (acc != 1) {
    acc = (acc * field->q()) % n;
    ++ord;
    if (ord > n) throw std::logic_error("order computation overran the group");
  }
  const bool primitive = (ord == n - 1);

  if (shape != primitive) {
    throw std::logic_error("factorization shape disagrees with the primitive-root test");
  }
  return shape;
}

QtFamilyReport qt_irreducible_family(const FieldPtr& field, std::size_t bound) {
  QtFamilyReport report;
  const std::uint64_t group = field->q() - 1;

  std::uint64_t chosen_e = 0;
  for (std::uint64_t e = 2; e <= group; ++e) {
    if (group % e != 0) continue;
    std::uint64_t a = e, b = group / e;
    while (b != 0) {
      const std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) {
      chosen_e = e;
      break;
    }
  }
  if (chosen_e == 0) return report;  // no qualifying e (reported, not fatal)

  report.found = true;
  report.e = chosen_e;
  for (std::uint64_t d = 2; d <= chosen_e; ++d) {
    if (chosen_e % d == 0 && is_prime_u64(d)) {
      report.prime = d;
      break;
    }
  }
  // first alpha of order e in enumeration order
  for (std::uint32_t v = 1; v < field->q(); ++v) {
    if (field->order_idx(v) == chosen_e) {
      report.alpha_index = v;
      break;
    }
  }

  for (std::size_t n = report.prime; n <= bound; n *= report.prime) {
    const auto check = binomial_irreducible(field, n, field->element(report.alpha_index));
    if (!check.irreducible) {
      throw std::logic_error("family member unexpectedly reducible");
    }
    report.lengths.push_back(n);
    if (n > bound / report.prime) break;
  }
  return report;
}

BigInt ball_volume(std::uint32_t q, std::size_t n, std::size_t radius) {
  BigInt total = 0;
  BigInt binom = 1;  // C(n, i)
  for (std::size_t i = 0; i <= radius && i <= n; ++i) {
    total += binom * big_pow(static_cast<std::uint64_t>(q - 1), static_cast<unsigned long>(i));
    binom = binom * static_cast<unsigned long>(n - i) / static_cast<unsigned long>(i + 1);
  }
  return total;
}

std::vector<ExpurgationRow> expurgation_report(const FieldPtr& field, int t, int r,
                                               std::size_t n_max, std::optional<double> delta_opt) {
  if (t < 2 || r < 1) throw std::invalid_argument("need t >= 2 and r >= 1");
  const std::uint32_t q = field->q();
  const double delta = delta_opt ? *delta_opt : gv_delta(q, t, r);

  std::vector<ExpurgationRow> rows;
  for (std::size_t n = 2; n <= n_max; ++n) {
    ExpurgationRow row;
    row.n = n;
    row.delta = delta;
    if (n % static_cast<std::size_t>(r) != 0) {
      row.note = "r does not divide n";
      rows.push_back(std::move(row));
      continue;
    }
    const std::size_t deg = n / static_cast<std::size_t>(r);
    if (count_irreducibles(q, static_cast<std::uint32_t>(deg)) < r) {
      row.note = "fewer than r irreducibles of degree n/r";
      rows.push_back(std::move(row));
      continue;
    }

    // h = product of the first r monic irreducibles of degree n/r
    std::uint64_t count = 0;
    Poly h = Poly::constant(field->one());
    std::uint64_t limit = 1;
    for (std::size_t i = 0; i < deg; ++i) limit *= q;
    for (std::uint64_t v = 0; v < limit && count < static_cast<std::uint64_t>(r); ++v) {
      std::vector<std::uint32_t> c(deg + 1, 0);
      std::uint64_t rest = v;
      for (std::size_t i = 0; i < deg; ++i) {
        c[i] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
      }
      c[deg] = 1;
      Poly candidate(field.get(), std::move(c));
      if (deg == 1 || is_irreducible(candidate)) {
        h = h * candidate;
        ++count;
      }
    }

    row.d = static_cast<std::size_t>(std::floor(delta * static_cast<double>(t) * n));
    const BigInt per_slot = big_pow(static_cast<std::uint64_t>(q), static_cast<unsigned long>(deg)) - 1;
    row.total = big_pow(per_slot, static_cast<unsigned long>(r * (t - 1)));
    const BigInt max_containing =
        big_pow(per_slot, static_cast<unsigned long>((t - 1) * (r - 1)));
    row.ball_estimate = ball_volume(q, static_cast<std::size_t>(t) * n, row.d) * max_containing;
    row.estimate_below_total = row.ball_estimate < row.total;

    // exact count of (word, code) incidences over the ball, when the ball is small
    const BigInt ball = ball_volume(q, static_cast<std::size_t>(t) * n, row.d);
    if (row.d >= 1 && ball < 200000) {
      RingPtr ring = QuotientRing::make(field, h);
      CrtDecomposition crt(ring);
      BigInt exact = 0;
      // enumerate words of weight 1..d in F_q^{tn}
      const std::size_t len = static_cast<std::size_t>(t) * n;
      std::vector<std::size_t> support;
      std::vector<std::uint32_t> word(len, 0);
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                              std::size_t remaining) {
        if (remaining == 0) {
          std::vector<Poly> b(static_cast<std::size_t>(t));
          for (int j = 0; j < t; ++j) {
            std::vector<std::uint32_t> c(n, 0);
            for (std::size_t i = 0; i < n; ++i) c[i] = word[static_cast<std::size_t>(j) * n + i];
            b[static_cast<std::size_t>(j)] = Poly(field.get(), std::move(c));
          }
          exact += count_codes_containing(b, crt);
          return;
        }
        for (std::size_t pos = start; pos + remaining <= len; ++pos) {
          for (std::uint32_t v = 1; v < q; ++v) {
            word[pos] = v;
            rec(pos + 1, remaining - 1);
          }
          word[pos] = 0;
        }
      };
      for (std::size_t w = 1; w <= row.d; ++w) rec(0, w);
      row.exact_containing = exact;
    }

    row.ok = true;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cisforge
