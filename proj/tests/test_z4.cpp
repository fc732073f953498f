#include <doctest.h>

#include <map>

#include "cisforge/poly.hpp"
#include "cisforge/rng.hpp"
#include "cisforge/z4.hpp"

using namespace cisforge;
using namespace cisforge::z4;

namespace {

Z4Poly xn_minus_1(std::size_t n) {
  std::vector<std::uint8_t> c(n + 1, 0);
  c[0] = 3;
  c[n] = 1;
  return Z4Poly(std::move(c));
}

Z4Poly xn_plus_1(std::size_t n) {
  std::vector<std::uint8_t> c(n + 1, 0);
  c[0] = 1;
  c[n] = 1;
  return Z4Poly(std::move(c));
}

// pairwise minimum Hamming distance of the Gray image, the independent route
int gray_image_min_distance(const Z4Code& code) {
  std::vector<std::vector<std::uint8_t>> images;
  const std::uint64_t total = 1ULL << (2 * code.n);
  for (std::uint64_t m = 0; m < total; ++m) {
    std::vector<std::uint8_t> msg(code.n);
    std::uint64_t v = m;
    for (std::size_t i = 0; i < code.n; ++i) {
      msg[i] = static_cast<std::uint8_t>(v & 3);
      v >>= 2;
    }
    images.push_back(gray_map(encode_z4(code, msg)));
  }
  int best = INT32_MAX;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      int d = 0;
      for (std::size_t k = 0; k < images[i].size(); ++k) d += images[i][k] != images[j][k];
      best = std::min(best, d);
    }
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("z4");

TEST_CASE("ring arithmetic mod x^n + 1") {
  // x * x^{n-1} = -1 = 3
  for (std::size_t n : {2, 3, 5}) {
    std::vector<std::uint8_t> xv{0, 1};
    std::vector<std::uint8_t> xn1(n, 0);
    xn1[n - 1] = 1;
    Z4Poly prod = negacyclic_mul(Z4Poly(xv), Z4Poly(xn1), n);
    CHECK(prod == Z4Poly({3}));
  }
  CHECK(z4_mul(Z4Poly({2}), Z4Poly({2})).is_zero());  // 2 * 2 = 0

  // (1+x)^2 mod (x^2+1) = 2x
  Z4Poly one_x({1, 1});
  CHECK(negacyclic_mul(one_x, one_x, 2) == Z4Poly({0, 2}));
}

TEST_CASE("hensel lift examples") {
  auto f3 = hensel_lift(3);
  REQUIRE(f3.size() == 2);
  CHECK(f3[0] == Z4Poly({3, 1}));        // x + 3 = x - 1
  CHECK(f3[1] == Z4Poly({1, 1, 1}));     // x^2 + x + 1
  Z4Poly prod = z4_mul(f3[0], f3[1]);
  CHECK(prod == xn_minus_1(3));

  auto f1 = hensel_lift(1);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0] == Z4Poly({3, 1}));

  auto f7 = hensel_lift(7);
  REQUIRE(f7.size() == 3);
  CHECK(f7[0].degree() == 1);
  CHECK(f7[1].degree() == 3);
  CHECK(f7[2].degree() == 3);

  CHECK_THROWS_AS(hensel_lift(4), std::invalid_argument);
}

TEST_CASE("hensel lifts re-multiply and reduce correctly for odd n <= 15") {
  FieldPtr f2 = FiniteField::get(2, 1);
  for (std::size_t n = 1; n <= 15; n += 2) {
    auto lifts = hensel_lift(n);
    Z4Poly prod({1});
    for (const auto& f : lifts) prod = z4_mul(prod, f);
    CHECK(prod == xn_minus_1(n));

    // mod-2 images equal the F2 factorization, same order
    std::vector<std::int64_t> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    if (n >= 2) {
      Factorization base = factorize(Poly::from_ints(f2, c));
      REQUIRE(base.factors.size() == lifts.size());
      for (std::size_t i = 0; i < lifts.size(); ++i) {
        Poly image(f2.get());
        std::vector<std::uint32_t> img(lifts[i].c.size());
        for (std::size_t j = 0; j < img.size(); ++j) img[j] = lifts[i].c[j] & 1;
        CHECK(Poly(f2, std::move(img)) == base.factors[i].first);
      }
    }
  }
}

TEST_CASE("x -> -x bridge factors x^n + 1") {
  for (std::size_t n = 1; n <= 15; n += 2) {
    auto factors = factors_xn_plus_1(n);
    Z4Poly prod({1});
    for (const auto& f : factors) {
      CHECK(f.c.back() == 1);  // monic
      prod = z4_mul(prod, f);
    }
    CHECK(prod == xn_plus_1(n));
  }
}

TEST_CASE("unit tests over Z4") {
  CHECK(is_unit_z4(Z4Poly({1}), 3));
  CHECK(!is_unit_z4(Z4Poly({2}), 3));
  CHECK(!is_unit_z4(Z4Poly({1, 1}), 3));  // 1+x: gcd(1+x, x^3+1) != 1 mod 2
  CHECK(is_unit_z4(Z4Poly({3}), 3));
  CHECK(is_unit_z4(Z4Poly({0, 1}), 3));

  // exhaustive agreement between the mod-2 criterion and the matrix route
  for (std::uint64_t v = 0; v < 64; ++v) {
    Z4Poly a = residue_from_index(v, 3);
    CHECK(is_unit_z4(a, 3) == is_unit_z4_by_matrix(a, 3));
  }
}

TEST_CASE("unit counts are 2^n times the F2 unit count") {
  FieldPtr f2 = FiniteField::get(2, 1);
  for (std::size_t n : {2, 3, 4}) {
    std::vector<std::int64_t> c(n + 1, 0);
    c[0] = 1;
    c[n] = 1;
    Poly h = Poly::from_ints(f2, c);  // x^n + 1 over F2
    std::uint64_t f2_units = 0;
    for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
      std::vector<std::uint32_t> cc(n);
      for (std::size_t i = 0; i < n; ++i) cc[i] = (v >> i) & 1;
      Poly a(f2, std::move(cc));
      if (!a.is_zero() && gcd(a, h).degree() == 0) ++f2_units;
    }
    std::uint64_t z4_units = 0;
    const std::uint64_t total = 1ULL << (2 * n);
    for (std::uint64_t v = 0; v < total; ++v) {
      if (is_unit_z4(residue_from_index(v, n), n)) ++z4_units;
    }
    CHECK(z4_units == (1ULL << n) * f2_units);
  }
}

TEST_CASE("negacirculant structure") {
  Z4Matrix m = negacirculant(Z4Poly({0, 1}), 3);  // a = x
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(0, 2) == 0);
  CHECK(m.at(1, 2) == 1);
  CHECK(m.at(2, 0) == 3);  // x^3 = -1

  // wrapped entries are negated row to row
  Z4Matrix g = negacirculant(Z4Poly({1, 2, 3}), 3);
  for (std::size_t k = 0; k + 1 < 3; ++k) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::uint8_t expect =
          (j == 0) ? static_cast<std::uint8_t>((4 - g.at(k, 2)) & 3) : g.at(k, j - 1);
      CHECK(g.at(k + 1, j) == expect);
    }
  }
}

TEST_CASE("build and CIS") {
  Z4GeneratorSpec ones(1, 2, {Z4Poly({1})});
  CHECK(is_cis_z4(ones));
  Z4GeneratorSpec twos(3, 2, {Z4Poly({2, 2})});
  CHECK(!is_cis_z4(twos));
  Z4GeneratorSpec shift(3, 2, {Z4Poly({0, 1})});
  CHECK(is_cis_z4(shift));

  Z4Code code = build_z4_code(shift);
  CHECK(code.gen_matrix.rows == 3);
  CHECK(code.gen_matrix.cols == 6);
  for (std::size_t i = 0; i < 3; ++i) CHECK(code.gen_matrix.at(i, i) == 1);
}

TEST_CASE("gray map and lee weight") {
  CHECK(gray_map({2}) == std::vector<std::uint8_t>{1, 1});
  CHECK(gray_map({0}) == std::vector<std::uint8_t>{0, 0});
  CHECK(gray_map({1}) == std::vector<std::uint8_t>{0, 1});
  CHECK(gray_map({3}) == std::vector<std::uint8_t>{1, 0});
  CHECK(lee_weight({2}) == 2);
  CHECK(lee_weight({0, 0, 0}) == 0);

  // lee_weight = sum of min(v, 4-v) over all vectors of Z4^4
  for (std::uint32_t v = 0; v < 256; ++v) {
    std::vector<std::uint8_t> vec(4);
    std::size_t expect = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      vec[i] = static_cast<std::uint8_t>((v >> (2 * i)) & 3);
      expect += std::min<std::size_t>(vec[i], 4 - vec[i]);
    }
    CHECK(lee_weight(vec) == expect);
    std::size_t gray_weight = 0;
    for (auto b : gray_map(vec)) gray_weight += b;
    CHECK(gray_weight == expect);
  }
}

TEST_CASE("gray isometry on all pairs of Z4^2") {
  for (std::uint32_t u = 0; u < 16; ++u) {
    for (std::uint32_t v = 0; v < 16; ++v) {
      std::vector<std::uint8_t> a{static_cast<std::uint8_t>(u & 3),
                                  static_cast<std::uint8_t>((u >> 2) & 3)};
      std::vector<std::uint8_t> b{static_cast<std::uint8_t>(v & 3),
                                  static_cast<std::uint8_t>((v >> 2) & 3)};
      std::vector<std::uint8_t> diff{static_cast<std::uint8_t>((a[0] - b[0]) & 3),
                                     static_cast<std::uint8_t>((a[1] - b[1]) & 3)};
      auto ga = gray_map(a), gb = gray_map(b);
      std::size_t hamming = 0;
      for (std::size_t k = 0; k < ga.size(); ++k) hamming += ga[k] != gb[k];
      CHECK(lee_weight(diff) == hamming);
    }
  }
}

TEST_CASE("minimum Lee distance examples") {
  Z4Code rep2 = build_z4_code({1, 2, {Z4Poly({1})}});
  CHECK(min_lee_distance(rep2) == 2);
  Z4Code rep3 = build_z4_code({1, 3, {Z4Poly({1}), Z4Poly({1})}});
  CHECK(min_lee_distance(rep3) == 3);

  Z4Code shift = build_z4_code({3, 2, {Z4Poly({0, 1})}});
  CHECK(min_lee_distance(shift) == gray_image_min_distance(shift));

  CHECK_THROWS_AS(min_lee_distance(shift, /*budget=*/16), BudgetExceeded);
}

TEST_CASE("lee distance equals gray-image distance on random codes") {
  SplitMix64 rng(51);
  for (int i = 0; i < 8; ++i) {
    const std::size_t n = 2 + rng.below(2);  // 2..3 (pairwise sweep is quadratic)
    const int t = 2 + static_cast<int>(rng.below(2));
    std::vector<Z4Poly> gens;
    while (static_cast<int>(gens.size()) < t - 1) {
      Z4Poly r = residue_from_index(rng.below(1ULL << (2 * n)), n);
      if (is_unit_z4(r, n)) gens.push_back(r);
    }
    Z4Code code = build_z4_code({n, t, std::move(gens)});
    CHECK(min_lee_distance(code) == gray_image_min_distance(code));
  }
}

TEST_CASE("count probe reports all three values") {
  auto rep = count_cis_z4(3, 2);
  CHECK(rep.paper_count == 56);
  CHECK(rep.crt_count == 24);
  CHECK(rep.oracle_count == 24);
  CHECK(rep.crt_matches_oracle);
  CHECK(!rep.paper_matches_oracle);

  auto rep5 = count_cis_z4(5, 2);
  CHECK(rep5.paper_count == 992);
  CHECK(rep5.crt_count == 480);
  CHECK(rep5.oracle_count == 480);

  CHECK(count_cis_z4(3, 2).oracle_count >= 1);
  CHECK_THROWS_AS(count_cis_z4(7, 2), std::invalid_argument);  // 2 not primitive mod 7
  CHECK_THROWS_AS(count_cis_z4(4, 2), std::invalid_argument);
}

TEST_CASE("z4 random search is deterministic and verifiable") {
  auto r1 = z4_random_search(5, 2, /*seed=*/7, /*budget=*/400);
  auto r2 = z4_random_search(5, 2, 7, 400);
  REQUIRE(r1.found);
  CHECK(r1.best_lee == r2.best_lee);
  CHECK(r1.candidates_tried == r2.candidates_tried);
  REQUIRE(r1.best_spec.gens.size() == r2.best_spec.gens.size());
  for (std::size_t i = 0; i < r1.best_spec.gens.size(); ++i) {
    CHECK(r1.best_spec.gens[i] == r2.best_spec.gens[i]);
  }
  CHECK(is_cis_z4(r1.best_spec));
  CHECK(min_lee_distance(build_z4_code(r1.best_spec)) == r1.best_lee);

  auto p1 = z4_random_search(5, 2, 7, 400, std::nullopt, /*workers=*/3);
  CHECK(p1.best_lee == r1.best_lee);
  CHECK(p1.candidates_tried == r1.candidates_tried);
}

TEST_CASE("residue indexing round trip") {
  for (std::uint64_t v = 0; v < 256; ++v) {
    CHECK(residue_to_index(residue_from_index(v, 4), 4) == v);
  }
}

TEST_SUITE_END();
