#include <doctest.h>

#include <map>
#include <set>

#include "cisforge/poly.hpp"
#include "cisforge/rng.hpp"

using namespace cisforge;

namespace {

Poly random_poly(const FieldPtr& f, int max_deg, SplitMix64& rng) {
  const auto deg = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
  std::vector<std::uint32_t> c(deg + 1);
  for (auto& v : c) v = static_cast<std::uint32_t>(rng.below(f->q()));
  return Poly(f, std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("ring arithmetic examples") {
  FieldPtr f2 = FiniteField::get(2, 1);
  Poly x_plus_1(f2, {1, 1});
  CHECK(x_plus_1 * x_plus_1 == Poly(f2, {1, 0, 1}));  // x^2+1

  auto [q, r] = divmod(Poly(f2, {1, 0, 0, 1}), x_plus_1);  // x^3+1 / (x+1)
  CHECK(q == Poly(f2, {1, 1, 1}));
  CHECK(r.is_zero());

  CHECK(eval(Poly(f2, {1, 1, 1}), f2->one()) == f2->one());
  CHECK_THROWS_AS(divmod(x_plus_1, Poly(f2)), std::invalid_argument);
}

TEST_CASE("divmod reconstruction on random instances") {
  SplitMix64 rng(11);
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
    FieldPtr f = FiniteField::get(p, m);
    for (int i = 0; i < 200; ++i) {
      Poly a = random_poly(f, 10, rng);
      Poly b = random_poly(f, 6, rng);
      if (b.is_zero()) continue;
      auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("gcd examples and properties") {
  FieldPtr f2 = FiniteField::get(2, 1);
  Poly x3_1(f2, {1, 0, 0, 1});
  CHECK(gcd(x3_1, Poly(f2, {1, 1})) == Poly(f2, {1, 1}));
  CHECK(gcd(Poly(f2, {1, 1, 1}), Poly(f2, {1, 1})) == Poly(f2, {1}));

  FieldPtr f3 = FiniteField::get(3, 1);
  Poly a(f3, {2, 0, 2});  // 2x^2+2, monic form x^2+1
  CHECK(gcd(a, Poly(f3)) == Poly(f3, {1, 0, 1}));
  CHECK_THROWS_AS(gcd(Poly(f3), Poly(f3)), std::invalid_argument);

  SplitMix64 rng(12);
  for (int i = 0; i < 100; ++i) {
    Poly c = random_poly(f2, 4, rng);
    Poly u = random_poly(f2, 5, rng);
    Poly v = random_poly(f2, 5, rng);
    if (c.is_zero() || (u.is_zero() && v.is_zero())) continue;
    Poly g = gcd(c * u, c * v);
    CHECK((c * u % g).is_zero());
    CHECK((c * v % g).is_zero());
    CHECK((g % monic(c)).is_zero());  // common divisor divides the gcd
  }
}

TEST_CASE("ext_gcd produces Bezout coefficients") {
  SplitMix64 rng(13);
  FieldPtr f4 = FiniteField::get(2, 2);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(f4, 6, rng);
    Poly b = random_poly(f4, 6, rng);
    if (a.is_zero() && b.is_zero()) continue;
    ExtGcd e = ext_gcd(a, b);
    CHECK(e.s * a + e.t * b == e.g);
    CHECK(e.g == gcd(a, b));
  }
}

TEST_CASE("separability") {
  FieldPtr f2 = FiniteField::get(2, 1);
  CHECK(is_separable(Poly(f2, {1, 0, 0, 1})));   // x^3-1
  CHECK(!is_separable(Poly(f2, {1, 0, 1})));     // x^2-1 = (x+1)^2
  CHECK_THROWS_AS(is_separable(Poly(f2, {1})), std::invalid_argument);

  // x^n - 1 separable whenever gcd(n, q) = 1
  for (auto [p, m, n] : {std::tuple<std::uint32_t, std::uint32_t, std::size_t>{2, 1, 5},
                         {2, 1, 9},
                         {3, 1, 7},
                         {2, 2, 5}}) {
    FieldPtr f = FiniteField::get(p, m);
    std::vector<std::uint32_t> c(n + 1, 0);
    c[0] = f->neg_idx(1);
    c[n] = 1;
    CHECK(is_separable(Poly(f, std::move(c))));
  }
}

TEST_CASE("factorize examples") {
  FieldPtr f2 = FiniteField::get(2, 1);
  Factorization fac = factorize(Poly(f2, {1, 0, 0, 1}));  // x^3-1
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == Poly(f2, {1, 1}));
  CHECK(fac.factors[0].second == 1);
  CHECK(fac.factors[1].first == Poly(f2, {1, 1, 1}));
  CHECK(fac.factors[1].second == 1);

  Factorization sq = factorize(Poly(f2, {1, 0, 1}));  // x^2+1 = (x+1)^2
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].first == Poly(f2, {1, 1}));
  CHECK(sq.factors[0].second == 2);
}

TEST_CASE("factor degrees of x^9-1 match cyclotomic coset sizes") {
  // independent oracle: coset sizes of multiplication by 2 mod 9
  std::set<int> remaining;
  for (int i = 0; i < 9; ++i) remaining.insert(i);
  std::multiset<std::size_t> coset_sizes;
  while (!remaining.empty()) {
    int start = *remaining.begin();
    std::size_t size = 0;
    int cur = start;
    do {
      remaining.erase(cur);
      ++size;
      cur = (2 * cur) % 9;
    } while (cur != start);
    coset_sizes.insert(size);
  }

  FieldPtr f2 = FiniteField::get(2, 1);
  std::vector<std::uint32_t> c(10, 0);
  c[0] = 1;
  c[9] = 1;
  Factorization fac = factorize(Poly(f2, std::move(c)));
  std::multiset<std::size_t> degrees;
  for (const auto& [factor, mult] : fac.factors) {
    CHECK(mult == 1);
    degrees.insert(static_cast<std::size_t>(factor.degree()));
  }
  CHECK(degrees == coset_sizes);  // {1, 2, 6}
}

TEST_CASE("factorization re-multiplies to the input") {
  SplitMix64 rng(14);
  int tested = 0;
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
    FieldPtr f = FiniteField::get(p, m);
    for (int i = 0; i < 334; ++i) {
      Poly a = random_poly(f, 12, rng);
      if (a.degree() < 1) continue;
      Factorization fac = factorize(a);
      CHECK(fac.product() == a);
      for (const auto& [factor, mult] : fac.factors) {
        CHECK(factor.is_monic());
        CHECK(is_irreducible(factor));
        CHECK(mult >= 1);
      }
      // deterministic output order
      for (std::size_t k = 1; k < fac.factors.size(); ++k) {
        CHECK(poly_less(fac.factors[k - 1].first, fac.factors[k].first));
      }
      CHECK(is_separable(a) == fac.squarefree());
      ++tested;
    }
  }
  CHECK(tested >= 800);
}

TEST_CASE("factorize is deterministic") {
  FieldPtr f4 = FiniteField::get(2, 2);
  SplitMix64 rng(15);
  for (int i = 0; i < 20; ++i) {
    Poly a = random_poly(f4, 10, rng);
    if (a.degree() < 1) continue;
    Factorization f1 = factorize(a);
    Factorization f2 = factorize(a);
    REQUIRE(f1.factors.size() == f2.factors.size());
    for (std::size_t k = 0; k < f1.factors.size(); ++k) {
      CHECK(f1.factors[k].first == f2.factors[k].first);
      CHECK(f1.factors[k].second == f2.factors[k].second);
    }
  }
}

TEST_CASE("irreducibility") {
  FieldPtr f2 = FiniteField::get(2, 1);
  CHECK(is_irreducible(Poly(f2, {1, 1, 1})));
  CHECK(!is_irreducible(Poly(f2, {1, 0, 1})));
  CHECK(is_irreducible(Poly(f2, {1, 1})));
  CHECK(is_irreducible(Poly(f2, {0, 1})));  // x
  CHECK_THROWS_AS(is_irreducible(Poly(f2, {1})), std::invalid_argument);
}

TEST_CASE("count_irreducibles equals exhaustive scans") {
  for (auto [p, m, dmax] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{2, 1, 10},
                            {3, 1, 6},
                            {2, 2, 5},
                            {5, 1, 4},
                            {2, 4, 2}}) {
    FieldPtr f = FiniteField::get(p, m);
    const std::uint64_t q = f->q();
    for (std::uint32_t d = 1; d <= dmax; ++d) {
      std::uint64_t total = 1;
      for (std::uint32_t i = 0; i < d; ++i) total *= q;
      if (total > 4096) break;
      BigInt scan = 0;
      for (std::uint64_t v = 0; v < total; ++v) {
        std::vector<std::uint32_t> c(d + 1, 0);
        std::uint64_t rest = v;
        for (std::uint32_t i = 0; i < d; ++i) {
          c[i] = static_cast<std::uint32_t>(rest % q);
          rest /= q;
        }
        c[d] = 1;
        if (is_irreducible(Poly(f, std::move(c)))) ++scan;
      }
      CHECK(count_irreducibles(q, d) == scan);
    }
  }
  CHECK(count_irreducibles(2, 1) == 2);
  CHECK(count_irreducibles(2, 3) == 2);
  CHECK(count_irreducibles(2, 4) == 3);
  CHECK_THROWS_AS(count_irreducibles(2, 0), std::invalid_argument);
}

TEST_CASE("mobius values") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
}

TEST_CASE("parse and print round trips") {
  SplitMix64 rng(16);
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {2, 2}, {3, 2}}) {
    FieldPtr f = FiniteField::get(p, m);
    for (int i = 0; i < 100; ++i) {
      Poly a = random_poly(f, 8, rng);
      if (a.is_zero()) continue;
      CHECK(parse_poly(f, to_string(a)) == a);
    }
  }

  FieldPtr f2 = FiniteField::get(2, 1);
  CHECK(parse_poly(f2, "1,1,0,1") == Poly(f2, {1, 1, 0, 1}));
  CHECK(parse_poly(f2, "x^3+x+1") == Poly(f2, {1, 1, 0, 1}));
  CHECK(parse_poly(f2, "x^5-1") == Poly(f2, {1, 0, 0, 0, 0, 1}));

  FieldPtr f4 = FiniteField::get(2, 2);
  CHECK(parse_poly(f4, "x^2-w") == Poly(f4, {2, 0, 1}));
  CHECK(parse_poly(f4, "(w+1)*x^2+w") == Poly(f4, {2, 0, 3}));
  CHECK(parse_poly(f4, "w^2") == Poly(f4, {3}));

  CHECK_THROWS_AS(parse_poly(f2, "x^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(f4, "5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(f2, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(f2, "1,7,0"), std::invalid_argument);
}

TEST_SUITE_END();
