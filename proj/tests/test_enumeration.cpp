#include <doctest.h>

#include <map>

#include "cisforge/enumeration.hpp"
#include "cisforge/rng.hpp"

using namespace cisforge;

namespace {

RingPtr cyclic_ring(const FieldPtr& f, std::size_t n) {
  std::vector<std::uint32_t> c(n + 1, 0);
  c[0] = f->neg_idx(1);
  c[n] = 1;
  return QuotientRing::make(f, Poly(f, std::move(c)));
}

// brute-force membership: b in C_a iff b_j = b_0 * a_j for all j >= 1
bool contains(const RingPtr& ring, const std::vector<Poly>& gens, const std::vector<Poly>& b) {
  Residue b0{ring, b[0] % ring->h()};
  for (std::size_t j = 1; j < b.size(); ++j) {
    Residue expect = ring_mul(b0, {ring, gens[j - 1]});
    if (!(expect.value == b[j] % ring->h())) return false;
  }
  return true;
}

std::vector<Poly> residue_tuple(const RingPtr& ring, std::uint64_t index, int t) {
  std::vector<Poly> out;
  for (int j = 0; j < t; ++j) {
    out.push_back(ring->from_index(index % ring->size()).value);
    index /= ring->size();
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("enumeration");

TEST_CASE("count_cis closed forms") {
  FieldPtr f2 = FiniteField::get(2, 1);
  FieldPtr f3 = FiniteField::get(3, 1);
  FieldPtr f4 = FiniteField::get(2, 2);

  CHECK(count_cis(2, cyclic_ring(f2, 3)->h()) == 3);
  CHECK(count_cis(3, cyclic_ring(f2, 3)->h()) == 9);
  CHECK(count_cis(2, cyclic_ring(f2, 5)->h()) == 15);   // ((q-1)(q^{n-1}-1))^{t-1}
  CHECK(count_cis(2, cyclic_ring(f2, 7)->h()) == 49);
  CHECK(count_cis(2, cyclic_ring(f3, 2)->h()) == 4);
  CHECK(count_cis(2, Poly(f4, {2, 1, 1})) == 15);       // irreducible quadratic: (q^n-1)^{t-1}
  CHECK(count_cis(3, Poly(f4, {2, 1, 1})) == 225);

  CHECK_THROWS_AS(count_cis(2, Poly(f2, {1, 0, 1})), std::domain_error);  // non-separable
  CHECK_THROWS_AS(count_cis(1, cyclic_ring(f2, 3)->h()), std::invalid_argument);
}

TEST_CASE("exhaustive oracle equals the formula on every small separable h") {
  FieldPtr f2 = FiniteField::get(2, 1);
  for (std::size_t deg = 2; deg <= 5; ++deg) {
    const std::uint64_t total = 1ULL << deg;
    for (std::uint64_t v = 0; v < total; ++v) {
      std::vector<std::uint32_t> c(deg + 1, 0);
      for (std::size_t i = 0; i < deg; ++i) c[i] = static_cast<std::uint32_t>((v >> i) & 1);
      c[deg] = 1;
      Poly h(f2, std::move(c));
      if (!is_separable(h)) continue;
      for (int t : {2, 3}) {
        if (deg * static_cast<std::size_t>(t - 1) > 20) continue;
        CHECK(count_cis(t, h) == count_cis_exhaustive(t, h));
      }
    }
  }
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{3, 1}, {2, 2}}) {
    FieldPtr f = FiniteField::get(p, m);
    const std::uint64_t q = f->q();
    for (std::size_t deg = 2; deg <= 3; ++deg) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < deg; ++i) total *= q;
      for (std::uint64_t v = 0; v < total; ++v) {
        std::vector<std::uint32_t> c(deg + 1, 0);
        std::uint64_t rest = v;
        for (std::size_t i = 0; i < deg; ++i) {
          c[i] = static_cast<std::uint32_t>(rest % q);
          rest /= q;
        }
        c[deg] = 1;
        Poly h(f, std::move(c));
        if (!is_separable(h)) continue;
        for (int t : {2, 3}) CHECK(count_cis(t, h) == count_cis_exhaustive(t, h));
      }
    }
  }
}

TEST_CASE("count_cis_exhaustive examples and budget") {
  FieldPtr f2 = FiniteField::get(2, 1);
  FieldPtr f3 = FiniteField::get(3, 1);
  CHECK(count_cis_exhaustive(2, cyclic_ring(f2, 3)->h()) == 3);
  CHECK(count_cis_exhaustive(3, cyclic_ring(f2, 3)->h()) == 9);
  CHECK(count_cis_exhaustive(2, cyclic_ring(f3, 2)->h()) == 4);
  CHECK_THROWS_AS(count_cis_exhaustive(3, cyclic_ring(f2, 15)->h()), BudgetExceeded);
}

TEST_CASE("count_report mismatch flag") {
  FieldPtr f2 = FiniteField::get(2, 1);
  CountReport rep = count_report(2, cyclic_ring(f2, 5)->h(), true);
  CHECK(!rep.mismatch());
  CHECK(rep.formula_count == 15);
  REQUIRE(rep.oracle_count.has_value());
  CHECK(*rep.oracle_count == 15);
}

TEST_CASE("containment counts agree with brute force on the two-cubic ring") {
  FieldPtr f2 = FiniteField::get(2, 1);
  Poly h = Poly(f2, {1, 1, 0, 1}) * Poly(f2, {1, 0, 1, 1});  // (x^3+x+1)(x^3+x^2+1)
  RingPtr ring = QuotientRing::make(f2, h);
  CrtDecomposition crt(ring);
  REQUIRE(crt.r() == 2);

  // all 49 CIS codes
  std::vector<std::vector<Poly>> codes;
  for (std::uint64_t v = 0; v < ring->size(); ++v) {
    Residue a = ring->from_index(v);
    if (is_unit(a)) codes.push_back({a.value});
  }
  REQUIRE(codes.size() == 49);

  const BigInt bound = containment_bound(2, crt);
  CHECK(bound == 7);

  BigInt sum = 0;
  bool attained = false;
  const int t = 2;
  for (std::uint64_t bi = 1; bi < ring->size() * ring->size(); ++bi) {
    std::vector<Poly> b = residue_tuple(ring, bi, t);
    BigInt direct = 0;
    for (const auto& gens : codes) {
      if (contains(ring, gens, b)) ++direct;
    }
    const BigInt counted = count_containing(b, crt);
    CHECK(counted == direct);
    CHECK(counted <= bound);
    if (counted == bound) attained = true;
    sum += counted;
  }
  CHECK(attained);
  CHECK(sum == BigInt(49) * 63);  // double counting: #codes * (q^n - 1)
}

TEST_CASE("count_containing rejects bad inputs") {
  FieldPtr f2 = FiniteField::get(2, 1);
  RingPtr r3 = cyclic_ring(f2, 3);  // degrees 1 and 2: unequal
  CrtDecomposition crt(r3);
  std::vector<Poly> zero{Poly(f2), Poly(f2)};
  CHECK_THROWS_AS(count_containing(zero, crt), std::invalid_argument);
  std::vector<Poly> b{Poly(f2, {1}), Poly(f2, {1})};
  CHECK_THROWS_AS(count_containing(b, crt), std::invalid_argument);  // unequal degrees
  CHECK(count_codes_containing(b, crt) == 1);  // general engine is fine with it
}

TEST_CASE("unique containment for prime n over F2") {
  FieldPtr f2 = FiniteField::get(2, 1);
  for (std::size_t n : {3, 5}) {
    RingPtr ring = cyclic_ring(f2, n);
    auto weight_ok = [&](const Poly& p) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < p.coeffs().size(); ++i) w += p.coeff_index(i) != 0;
      return w < n;
    };
    const std::uint64_t space = ring->size() * ring->size();
    for (std::uint64_t bi = 1; bi < space; ++bi) {
      std::vector<Poly> b = residue_tuple(ring, bi, 2);
      if (!weight_ok(b[0]) || !weight_ok(b[1])) continue;
      auto result = verify_unique_containment(f2, n, b);
      CHECK(result.count <= 1);
    }
  }
}

TEST_CASE("unique containment finds the own code") {
  FieldPtr f2 = FiniteField::get(2, 1);
  RingPtr r5 = cyclic_ring(f2, 5);
  // a CIS code generator row: b = (1, a) with a a unit of weight < n
  Poly a(f2, {1, 1, 1});  // weight 3 < 5, unit mod x^5-1
  CHECK(is_unit({r5, a}));
  auto result = verify_unique_containment(f2, 5, {Poly(f2, {1}), a});
  CHECK(result.count == 1);
}

TEST_CASE("unique containment hypothesis violations") {
  FieldPtr f2 = FiniteField::get(2, 1);
  std::vector<Poly> b{Poly(f2, {1}), Poly(f2, {1})};
  CHECK_THROWS_WITH_AS(verify_unique_containment(f2, 4, b), "co-index n must be prime",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(verify_unique_containment(f2, 2, b), "n must be coprime to q",
                       std::invalid_argument);
  // n = 7: x^7-1 has three irreducible factors over F2
  CHECK_THROWS_WITH_AS(verify_unique_containment(f2, 7, b),
                       "x^n-1 must factor into exactly two irreducibles over F_q",
                       std::invalid_argument);
  // all-ones coordinate has weight n
  std::vector<Poly> heavy{Poly(f2, {1, 1, 1}), Poly(f2)};
  CHECK_THROWS_WITH_AS(verify_unique_containment(f2, 3, heavy),
                       "every nonzero coordinate of b must have weight < n", std::invalid_argument);
  std::vector<Poly> zero{Poly(f2), Poly(f2)};
  CHECK_THROWS_WITH_AS(verify_unique_containment(f2, 3, zero), "b must be nonzero",
                       std::invalid_argument);
}

TEST_SUITE_END();
