#ifndef CISFORGE_Z4_HPP
#define CISFORGE_Z4_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cisforge/bigint.hpp"
#include "cisforge/errors.hpp"

namespace cisforge::z4 {

/// Polynomial over Z_4, coefficients in {0,1,2,3}, ascending degree, no
/// trailing zeros.
struct Z4Poly {
  std::vector<std::uint8_t> c;

  Z4Poly() = default;
  explicit Z4Poly(std::vector<std::uint8_t> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  std::uint8_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
  bool operator==(const Z4Poly& rhs) const { return c == rhs.c; }
};

std::string to_string(const Z4Poly& a);

Z4Poly z4_add(const Z4Poly& a, const Z4Poly& b);
Z4Poly z4_neg(const Z4Poly& a);
Z4Poly z4_mul(const Z4Poly& a, const Z4Poly& b);
/// a(-x): negate odd-degree coefficients.
Z4Poly substitute_neg_x(const Z4Poly& a);

/// Reduction mod x^n + 1, wrap rule x^n = -1 = 3.
Z4Poly negacyclic_reduce(const Z4Poly& a, std::size_t n);
Z4Poly negacyclic_add(const Z4Poly& a, const Z4Poly& b, std::size_t n);
Z4Poly negacyclic_mul(const Z4Poly& a, const Z4Poly& b, std::size_t n);

Z4Poly residue_from_index(std::uint64_t index, std::size_t n);
std::uint64_t residue_to_index(const Z4Poly& a, std::size_t n);

/// Hensel lift of the F_2 factorization of x^n - 1 to Z_4 (n odd), by the
/// Graeffe step f(x^2) = +- ftilde(x) ftilde(-x). Factors multiply back to
/// x^n - 1 over Z_4 and reduce mod 2 to the F_2 factors, in the same order.
std::vector<Z4Poly> hensel_lift(std::size_t n);

/// Monic factors of x^n + 1 over Z_4 for odd n, via the x -> -x bridge from
/// the x^n - 1 lift.
std::vector<Z4Poly> factors_xn_plus_1(std::size_t n);

/// Unit of Z_4[x]/(x^n+1): the mod-2 image is a unit of F_2[x]/(x^n+1).
bool is_unit_z4(const Z4Poly& a, std::size_t n);
/// Independent route: the negacirculant matrix is invertible over Z_4
/// (equivalently its mod-2 image has full rank).
bool is_unit_z4_by_matrix(const Z4Poly& a, std::size_t n);

struct Z4Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint8_t> a;

  Z4Matrix() = default;
  Z4Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint8_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  std::uint8_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

/// n x n negacirculant expansion of a: row k is x^k * a mod (x^n + 1).
Z4Matrix negacirculant(const Z4Poly& a, std::size_t n);

struct Z4GeneratorSpec {
  std::size_t n = 0;
  int t = 0;
  std::vector<Z4Poly> gens;  // t-1 residues mod x^n + 1

  Z4GeneratorSpec() = default;
  Z4GeneratorSpec(std::size_t n, int t, std::vector<Z4Poly> gens);
};

struct Z4Code {
  std::size_t n = 0;
  int t = 0;
  Z4Matrix gen_matrix;  // n x tn over Z_4, blocks (I : A_1 : ... : A_{t-1})
  std::vector<Z4Poly> gens;
  std::optional<int> min_lee;
};

Z4Code build_z4_code(const Z4GeneratorSpec& spec);
bool is_cis_z4(const Z4GeneratorSpec& spec);

/// Coordinatewise Gray image, interleaved pairs: symbol i maps to bits
/// (2i, 2i+1) with 0->00, 1->01, 2->11, 3->10.
std::vector<std::uint8_t> gray_map(const std::vector<std::uint8_t>& v);
/// Sum of symbol Lee weights (0,1,2,1) = Hamming weight of the Gray image.
std::size_t lee_weight(const std::vector<std::uint8_t>& v);

std::vector<std::uint8_t> encode_z4(const Z4Code& code, const std::vector<std::uint8_t>& message);

inline constexpr std::uint64_t kDefaultLeeBudget = 1ULL << 20;

/// Minimum Lee weight over the 4^n - 1 nonzero codewords.
int min_lee_distance(const Z4Code& code, std::uint64_t budget = kDefaultLeeBudget,
                     int workers = 1);
int min_lee_distance_floor(const Z4Code& code, int floor,
                           std::uint64_t budget = kDefaultLeeBudget, int workers = 1);

struct Z4CountReport {
  std::size_t n = 0;
  int t = 0;
  BigInt paper_count;   // (4^n - 2^n)^{t-1}
  BigInt crt_count;     // (2 * (4^{n-1} - 2^{n-1}))^{t-1}
  BigInt oracle_count;  // exhaustive unit-tuple scan
  bool crt_matches_oracle = false;
  bool paper_matches_oracle = false;
};

/// Three-way count probe for multinegacirculant t-CIS codes. Requires n
/// prime with 2 primitive mod n; the oracle requires 4^{n(t-1)} <= budget.
Z4CountReport count_cis_z4(std::size_t n, int t, std::uint64_t budget = 1ULL << 24);

struct Z4SearchReport {
  bool found = false;
  int best_lee = 0;
  Z4GeneratorSpec best_spec;
  std::uint64_t candidates_tried = 0;
  double elapsed_sec = 0.0;
};

/// Seeded random search over unit tuples maximizing the minimum Lee distance;
/// reproducible from the seed for every worker count.
Z4SearchReport z4_random_search(std::size_t n, int t, std::uint64_t seed, std::uint64_t budget,
                                std::optional<int> target_lee = std::nullopt, int workers = 1,
                                std::uint64_t lee_budget = kDefaultLeeBudget);

}  // namespace cisforge::z4

#endif
