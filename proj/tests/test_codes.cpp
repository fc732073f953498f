#include <doctest.h>

#include <numeric>
#include <set>

#include "cisforge/codes.hpp"
#include "cisforge/rng.hpp"

using namespace cisforge;

namespace {

RingPtr cyclic_ring(const FieldPtr& f, std::size_t n) {
  std::vector<std::uint32_t> c(n + 1, 0);
  c[0] = f->neg_idx(1);
  c[n] = 1;
  return QuotientRing::make(f, Poly(f, std::move(c)));
}

Poly random_residue(const RingPtr& ring, SplitMix64& rng) {
  return ring->from_index(rng.below(ring->size())).value;
}

// naive reference sweep through the codeword iterator
int naive_min_distance(const LinearCode& code) {
  CodewordIter it(code);
  std::vector<std::uint32_t> word;
  int best = INT32_MAX;
  it.next(word);  // skip the zero codeword
  while (it.next(word)) best = std::min<int>(best, static_cast<int>(weight_of_word(word)));
  return best;
}

GeneratorSpec random_cis_spec(const RingPtr& ring, int t, SplitMix64& rng) {
  std::vector<Poly> gens;
  while (static_cast<int>(gens.size()) < t - 1) {
    Residue r = ring->from_index(rng.below(ring->size()));
    if (is_unit(r)) gens.push_back(r.value);
  }
  return {ring, t, std::move(gens)};
}

}  // namespace

TEST_SUITE_BEGIN("cis-codes");

TEST_CASE("family classification") {
  FieldPtr f2 = FiniteField::get(2, 1);
  FieldPtr f4 = FiniteField::get(2, 2);
  CHECK(classify_family(Poly(f2, {1, 0, 0, 1})) == Family::QC);       // x^3-1
  CHECK(classify_family(Poly(f2, {1, 0, 1})) == Family::QC);          // x^2-1 (non-separable QC)
  CHECK(classify_family(Poly(f4, {2, 0, 0, 1})) == Family::QT);       // x^3-w
  CHECK(classify_family(Poly(f2, {1, 1, 0, 1})) == Family::QPC);      // x^3+x+1
  CHECK(classify_family(Poly(f2, {0, 0, 1})) == Family::Generic);     // x^2
  CHECK(classify_family(Poly(f2, {0, 1, 1, 1})) == Family::QPC);      // x(x^2+x+1), separable
  CHECK(classify_family(Poly(f2, {0, 0, 1, 1})) == Family::Generic);  // x^2(x+1)
}

TEST_CASE("build_code structure") {
  FieldPtr f2 = FiniteField::get(2, 1);
  RingPtr r3 = cyclic_ring(f2, 3);

  GeneratorSpec id_spec(r3, 2, {Poly(f2, {1})});
  LinearCode c1 = build_code(id_spec);
  CHECK(c1.dimension == 3);
  CHECK(c1.length == 6);
  CHECK(c1.family == Family::QC);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(c1.gen_matrix.at(i, j) == (i == j ? 1 : 0));
      CHECK(c1.gen_matrix.at(i, 3 + j) == (i == j ? 1 : 0));
    }
  }

  GeneratorSpec shift_spec(r3, 2, {Poly::x(f2.get())});
  LinearCode c2 = build_code(shift_spec);
  CHECK(c2.gen_matrix.at(0, 4) == 1);
  CHECK(c2.gen_matrix.at(1, 5) == 1);
  CHECK(c2.gen_matrix.at(2, 3) == 1);

  CHECK_THROWS_AS(GeneratorSpec(r3, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSpec(r3, 3, {Poly(f2, {1})}), std::invalid_argument);
}

TEST_CASE("repetition code of three blocks at n=2") {
  FieldPtr f2 = FiniteField::get(2, 1);
  RingPtr r2 = cyclic_ring(f2, 2);
  GeneratorSpec spec(r2, 3, {Poly(f2, {1}), Poly(f2, {1})});
  LinearCode code = build_code(spec);
  CHECK(min_distance(code) == 3);  // brute force over the 4 codewords
  CHECK(naive_min_distance(code) == 3);
}

TEST_CASE("is_cis examples and rank oracle") {
  FieldPtr f2 = FiniteField::get(2, 1);
  RingPtr r3 = cyclic_ring(f2, 3);
  CHECK(is_cis({r3, 2, {Poly(f2, {1})}}));
  CHECK(!is_cis({r3, 2, {Poly(f2, {1, 1})}}));
  CHECK(!is_cis({r3, 2, {Poly(f2, {1, 1, 1})}}));
  CHECK(is_cis({r3, 2, {Poly(f2, {0, 0, 1})}}));
  CHECK(is_cis_by_rank({r3, 2, {Poly(f2, {1})}}));
  CHECK(!is_cis_by_rank({r3, 2, {Poly(f2, {1, 1})}}));
}

TEST_CASE("Prop 2.1 equivalence: exhaustive over small QC rings") {
  FieldPtr f2 = FiniteField::get(2, 1);
  for (std::size_t n = 2; n <= 5; ++n) {
    RingPtr ring = cyclic_ring(f2, n);
    for (int t : {2, 3}) {
      const auto slots = static_cast<std::size_t>(t - 1);
      std::vector<std::uint64_t> digit(slots, 0);
      for (;;) {
        std::vector<Poly> gens;
        for (auto d : digit) gens.push_back(ring->from_index(d).value);
        GeneratorSpec spec(ring, t, std::move(gens));
        CHECK(is_cis(spec) == is_cis_by_rank(spec));
        std::size_t pos = 0;
        while (pos < slots && digit[pos] == ring->size() - 1) digit[pos++] = 0;
        if (pos == slots) break;
        ++digit[pos];
      }
    }
  }
}

TEST_CASE("Prop 2.1 equivalence: random specs incl non-separable h") {
  SplitMix64 rng(31);
  const std::vector<FieldPtr> fields = {FiniteField::get(2, 1), FiniteField::get(3, 1),
                                        FiniteField::get(2, 2)};
  int non_separable_seen = 0;
  for (int done = 0; done < 1000; ++done) {
    const FieldPtr& f = fields[done % fields.size()];
    const auto deg = static_cast<std::size_t>(2 + rng.below(7));  // 2..8
    std::vector<std::uint32_t> c(deg + 1, 0);
    for (std::size_t i = 0; i < deg; ++i) c[i] = static_cast<std::uint32_t>(rng.below(f->q()));
    c[deg] = 1;
    Poly h(f, std::move(c));
    if (!is_separable(h)) ++non_separable_seen;
    RingPtr ring = QuotientRing::make(f, h);
    const int t = 2 + static_cast<int>(rng.below(2));
    std::vector<Poly> gens;
    for (int s = 0; s + 1 < t; ++s) gens.push_back(ring->from_index(rng.below(ring->size())).value);
    GeneratorSpec spec(ring, t, std::move(gens));
    CHECK(is_cis(spec) == is_cis_by_rank(spec));
  }
  CHECK(non_separable_seen > 0);
}

TEST_CASE("information sets") {
  FieldPtr f2 = FiniteField::get(2, 1);
  RingPtr r3 = cyclic_ring(f2, 3);
  GeneratorSpec singular(r3, 2, {Poly(f2, {1, 1})});
  LinearCode code = build_code(singular);

  CHECK(is_information_set(code, natural_block(code, 0)));
  CHECK(!is_information_set(code, natural_block(code, 1)));  // circ(x+1) singular
  CHECK_THROWS_AS(is_information_set(code, {0, 1}), std::invalid_argument);

  GeneratorSpec unit_spec(r3, 2, {Poly(f2, {0, 0, 1})});
  LinearCode good = build_code(unit_spec);
  CHECK(is_information_set(good, natural_block(good, 1)));
}

TEST_CASE("CIS blocks partition the coordinates") {
  SplitMix64 rng(32);
  FieldPtr f4 = FiniteField::get(2, 2);
  RingPtr ring = QuotientRing::make(f4, Poly(f4, {2, 0, 0, 1}));
  for (int i = 0; i < 10; ++i) {
    GeneratorSpec spec = random_cis_spec(ring, 3, rng);
    LinearCode code = build_code(spec);
    std::set<std::size_t> all;
    for (std::size_t j = 0; j < code.t; ++j) {
      CHECK(is_information_set(code, natural_block(code, j)));
      for (auto c : natural_block(code, j)) all.insert(c);
    }
    CHECK(all.size() == code.length);
  }
}

TEST_CASE("encode and weight") {
  FieldPtr f2 = FiniteField::get(2, 1);
  RingPtr r3 = cyclic_ring(f2, 3);
  LinearCode code = build_code({r3, 2, {Poly(f2, {1})}});
  CHECK(weight_of_word(encode(code, {0, 0, 0})) == 0);
  std::vector<std::uint32_t> e1{1, 0, 0};
  auto row = encode(code, e1);
  for (std::size_t j = 0; j < code.length; ++j) CHECK(row[j] == code.gen_matrix.at(0, j));
  CHECK(weight_of_word(row) == 2);
  CHECK_THROWS_AS(encode(code, {1, 0}), std::invalid_argument);
}

TEST_CASE("min_distance kernels agree with the naive sweep") {
  SplitMix64 rng(33);
  FieldPtr f2 = FiniteField::get(2, 1);
  FieldPtr f3 = FiniteField::get(3, 1);
  FieldPtr f4 = FiniteField::get(2, 2);
  FieldPtr f8 = FiniteField::get(2, 3);
  FieldPtr f9 = FiniteField::get(3, 2);

  std::vector<RingPtr> rings = {
      cyclic_ring(f2, 4),  cyclic_ring(f2, 5),  cyclic_ring(f3, 3),
      cyclic_ring(f4, 3),  cyclic_ring(f8, 2),  cyclic_ring(f9, 2),
      QuotientRing::make(f2, Poly(f2, {1, 1, 0, 0, 1}))};
  for (const auto& ring : rings) {
    for (int t : {2, 3}) {
      for (int i = 0; i < 5; ++i) {
        std::vector<Poly> gens;
        for (int s = 0; s + 1 < t; ++s) gens.push_back(random_residue(ring, rng));
        LinearCode code = build_code({ring, t, std::move(gens)});
        CHECK(min_distance(code) == naive_min_distance(code));
      }
    }
  }
}

TEST_CASE("min_distance is invariant under row operations") {
  SplitMix64 rng(34);
  FieldPtr f4 = FiniteField::get(2, 2);
  RingPtr ring = cyclic_ring(f4, 3);
  GeneratorSpec spec = random_cis_spec(ring, 2, rng);
  LinearCode code = build_code(spec);
  const int d = min_distance(code);

  for (int trial = 0; trial < 10; ++trial) {
    Matrix g = code.gen_matrix;
    for (int op = 0; op < 8; ++op) {
      const auto i = static_cast<std::size_t>(rng.below(g.rows()));
      const auto j = static_cast<std::size_t>(rng.below(g.rows()));
      const auto c = static_cast<std::uint32_t>(rng.below(f4->q()));
      if (i != j) g.add_scaled_row(i, j, c);
      const auto s = static_cast<std::uint32_t>(1 + rng.below(f4->q() - 1));
      g.scale_row(i, s);
    }
    LinearCode shuffled = make_code(f4, std::move(g), code.family, code.t);
    CHECK(min_distance(shuffled) == d);
  }
}

TEST_CASE("Singleton bound holds") {
  SplitMix64 rng(35);
  FieldPtr f3 = FiniteField::get(3, 1);
  RingPtr ring = cyclic_ring(f3, 4);
  for (int i = 0; i < 20; ++i) {
    GeneratorSpec spec = random_cis_spec(ring, 2, rng);
    LinearCode code = build_code(spec);
    CHECK(min_distance(code) <= static_cast<int>(code.length - code.dimension + 1));
  }
}

TEST_CASE("distance budget is enforced") {
  FieldPtr f2 = FiniteField::get(2, 1);
  RingPtr big = cyclic_ring(f2, 30);
  LinearCode code = build_code({big, 2, {Poly(f2, {1})}});
  CHECK_THROWS_AS(min_distance(code, 1ULL << 20), BudgetExceeded);
}

TEST_CASE("worker sharding does not change the result") {
  SplitMix64 rng(36);
  FieldPtr f2 = FiniteField::get(2, 1);
  RingPtr ring = cyclic_ring(f2, 9);
  for (int i = 0; i < 5; ++i) {
    GeneratorSpec spec = random_cis_spec(ring, 2, rng);
    LinearCode code = build_code(spec);
    CHECK(min_distance(code, kDefaultDistanceBudget, 1) ==
          min_distance(code, kDefaultDistanceBudget, 3));
  }
}

TEST_CASE("codeword iterator yields q^n words, zero first") {
  FieldPtr f3 = FiniteField::get(3, 1);
  RingPtr ring = cyclic_ring(f3, 2);
  LinearCode code = build_code({ring, 2, {Poly(f3, {1})}});
  CodewordIter it(code);
  std::vector<std::uint32_t> word;
  std::set<std::vector<std::uint32_t>> seen;
  REQUIRE(it.next(word));
  CHECK(weight_of_word(word) == 0);
  seen.insert(word);
  while (it.next(word)) seen.insert(word);
  CHECK(seen.size() == 9);
}

TEST_CASE("make_code validates rank") {
  FieldPtr f2 = FiniteField::get(2, 1);
  Matrix bad(f2.get(), 2, 4);
  bad.at(0, 0) = 1;
  bad.at(1, 0) = 1;  // dependent rows
  CHECK_THROWS_AS(make_code(f2, std::move(bad)), std::invalid_argument);
}

TEST_SUITE_END();
