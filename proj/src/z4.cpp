#include "cisforge/z4.hpp"

#include <chrono>
#include <stdexcept>

#include "cisforge/asymptotics.hpp"
#include "cisforge/matrix.hpp"
#include "cisforge/poly.hpp"
#include "cisforge/rng.hpp"
#include "cisforge/slot_runner.hpp"

namespace cisforge::z4 {

namespace {

void trim(std::vector<std::uint8_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

constexpr std::uint8_t kLee[4] = {0, 1, 2, 1};

std::uint64_t pow4(std::size_t n, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v > cap / 4) return cap + 1;
    v *= 4;
  }
  return v;
}

}  // namespace

Z4Poly::Z4Poly(std::vector<std::uint8_t> coeffs) : c(std::move(coeffs)) {
  for (auto& v : c) v &= 3;
  trim(c);
}

std::string to_string(const Z4Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const std::uint8_t c = a.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(static_cast<int>(c));
      continue;
    }
    if (c != 1) out += std::to_string(static_cast<int>(c)) + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Z4Poly z4_add(const Z4Poly& a, const Z4Poly& b) {
  std::vector<std::uint8_t> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = static_cast<std::uint8_t>((a.coeff(i) + b.coeff(i)) & 3);
  }
  return Z4Poly(std::move(c));
}

Z4Poly z4_neg(const Z4Poly& a) {
  std::vector<std::uint8_t> c(a.c);
  for (auto& v : c) v = static_cast<std::uint8_t>((4 - v) & 3);
  return Z4Poly(std::move(c));
}

Z4Poly z4_mul(const Z4Poly& a, const Z4Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint8_t> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      c[i + j] = static_cast<std::uint8_t>((c[i + j] + a.c[i] * b.c[j]) & 3);
    }
  }
  return Z4Poly(std::move(c));
}

Z4Poly substitute_neg_x(const Z4Poly& a) {
  std::vector<std::uint8_t> c(a.c);
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = static_cast<std::uint8_t>((4 - c[i]) & 3);
  return Z4Poly(std::move(c));
}

Z4Poly negacyclic_reduce(const Z4Poly& a, std::size_t n) {
  std::vector<std::uint8_t> c(n, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    const std::size_t wraps = i / n;
    const std::size_t pos = i % n;
    // x^n = -1, so each wrap flips the sign
    const std::uint8_t v = (wraps % 2 == 0) ? a.c[i] : static_cast<std::uint8_t>((4 - a.c[i]) & 3);
    c[pos] = static_cast<std::uint8_t>((c[pos] + v) & 3);
  }
  return Z4Poly(std::move(c));
}

Z4Poly negacyclic_add(const Z4Poly& a, const Z4Poly& b, std::size_t n) {
  return negacyclic_reduce(z4_add(a, b), n);
}

Z4Poly negacyclic_mul(const Z4Poly& a, const Z4Poly& b, std::size_t n) {
  return negacyclic_reduce(z4_mul(a, b), n);
}

Z4Poly residue_from_index(std::uint64_t index, std::size_t n) {
  std::vector<std::uint8_t> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = static_cast<std::uint8_t>(index & 3);
    index >>= 2;
  }
  if (index != 0) throw std::invalid_argument("residue index out of range");
  return Z4Poly(std::move(c));
}

std::uint64_t residue_to_index(const Z4Poly& a, std::size_t n) {
  if (a.degree() >= static_cast<int>(n)) throw std::invalid_argument("residue not reduced");
  std::uint64_t v = 0;
  for (std::size_t i = n; i-- > 0;) v = (v << 2) | a.coeff(i);
  return v;
}

std::vector<Z4Poly> hensel_lift(std::size_t n) {
  if (n % 2 == 0) throw std::invalid_argument("Hensel lift needs odd n");
  if (n == 1) return {Z4Poly({3, 1})};  // x - 1

  FieldPtr f2 = FiniteField::get(2, 1);
  std::vector<std::int64_t> coeffs(n + 1, 0);
  coeffs[0] = -1;
  coeffs[n] = 1;
  Factorization base = factorize(Poly::from_ints(f2, coeffs));

  std::vector<Z4Poly> lifts;
  for (const auto& [factor, mult] : base.factors) {
    if (mult != 1) throw std::logic_error("x^n - 1 must be squarefree for odd n");
    // Graeffe step: g(x) = ftilde(x) * ftilde(-x) is even; its x^{2i}
    // coefficients give the lift, normalized monic.
    std::vector<std::uint8_t> ft(factor.coeffs().size());
    for (std::size_t i = 0; i < ft.size(); ++i) ft[i] = static_cast<std::uint8_t>(factor.coeff_index(i));
    Z4Poly f_pos{std::vector<std::uint8_t>(ft)};
    Z4Poly g = z4_mul(f_pos, substitute_neg_x(f_pos));
    std::vector<std::uint8_t> lift(static_cast<std::size_t>(factor.degree()) + 1, 0);
    for (std::size_t i = 0; i < lift.size(); ++i) lift[i] = g.coeff(2 * i);
    Z4Poly out{std::move(lift)};
    if (out.c.back() == 3) out = z4_neg(out);
    lifts.push_back(std::move(out));
  }
  return lifts;
}

std::vector<Z4Poly> factors_xn_plus_1(std::size_t n) {
  std::vector<Z4Poly> out;
  for (const auto& f : hensel_lift(n)) {
    Z4Poly g = substitute_neg_x(f);
    if (g.c.back() == 3) g = z4_neg(g);
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

Poly mod2_image(const Z4Poly& a, const FieldPtr& f2) {
  std::vector<std::uint32_t> c(a.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c[i] & 1;
  return Poly(f2.get(), std::move(c));
}

}  // namespace

bool is_unit_z4(const Z4Poly& a, std::size_t n) {
  FieldPtr f2 = FiniteField::get(2, 1);
  Poly image = mod2_image(negacyclic_reduce(a, n), f2);
  if (image.is_zero()) return false;
  std::vector<std::int64_t> coeffs(n + 1, 0);
  coeffs[0] = 1;
  coeffs[n] = 1;
  Poly h = Poly::from_ints(f2, coeffs);  // x^n + 1 over F_2
  return gcd(image, h).degree() == 0;
}

bool is_unit_z4_by_matrix(const Z4Poly& a, std::size_t n) {
  FieldPtr f2 = FiniteField::get(2, 1);
  Z4Matrix m = negacirculant(a, n);
  Matrix image(f2.get(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) image.at(i, j) = m.at(i, j) & 1;
  }
  return image.rank() == n;
}

Z4Matrix negacirculant(const Z4Poly& a, std::size_t n) {
  Z4Matrix m(n, n);
  Z4Poly cur = negacyclic_reduce(a, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) m.at(k, j) = cur.coeff(j);
    if (k + 1 < n) {
      std::vector<std::uint8_t> shifted(cur.c.size() + 1, 0);
      for (std::size_t i = 0; i < cur.c.size(); ++i) shifted[i + 1] = cur.c[i];
      cur = negacyclic_reduce(Z4Poly(std::move(shifted)), n);
    }
  }
  return m;
}

Z4GeneratorSpec::Z4GeneratorSpec(std::size_t n_in, int t_in, std::vector<Z4Poly> gens_in)
    : n(n_in), t(t_in), gens(std::move(gens_in)) {
  if (n < 1) throw std::invalid_argument("co-index n must be >= 1");
  if (t < 2) throw std::invalid_argument("index t must be >= 2");
  if (gens.size() != static_cast<std::size_t>(t - 1)) {
    throw std::invalid_argument("spec needs exactly t-1 generator residues");
  }
  for (auto& g : gens) g = negacyclic_reduce(g, n);
}

Z4Code build_z4_code(const Z4GeneratorSpec& spec) {
  Z4Code code;
  code.n = spec.n;
  code.t = spec.t;
  code.gens = spec.gens;
  const std::size_t n = spec.n;
  code.gen_matrix = Z4Matrix(n, n * static_cast<std::size_t>(spec.t));
  for (std::size_t i = 0; i < n; ++i) code.gen_matrix.at(i, i) = 1;
  for (std::size_t b = 1; b < static_cast<std::size_t>(spec.t); ++b) {
    Z4Matrix block = negacirculant(spec.gens[b - 1], n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) code.gen_matrix.at(i, b * n + j) = block.at(i, j);
    }
  }
  return code;
}

bool is_cis_z4(const Z4GeneratorSpec& spec) {
  for (const auto& g : spec.gens) {
    if (!is_unit_z4(g, spec.n)) return false;
  }
  return true;
}

std::vector<std::uint8_t> gray_map(const std::vector<std::uint8_t>& v) {
  static constexpr std::uint8_t kBits[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  std::vector<std::uint8_t> out(2 * v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[2 * i] = kBits[v[i] & 3][0];
    out[2 * i + 1] = kBits[v[i] & 3][1];
  }
  return out;
}

std::size_t lee_weight(const std::vector<std::uint8_t>& v) {
  std::size_t w = 0;
  for (std::uint8_t s : v) w += kLee[s & 3];
  return w;
}

std::vector<std::uint8_t> encode_z4(const Z4Code& code, const std::vector<std::uint8_t>& message) {
  if (message.size() != code.n) throw std::invalid_argument("wrong message length");
  const std::size_t len = code.gen_matrix.cols;
  std::vector<std::uint8_t> word(len, 0);
  for (std::size_t i = 0; i < code.n; ++i) {
    const std::uint8_t m = message[i] & 3;
    if (m == 0) continue;
    for (std::size_t j = 0; j < len; ++j) {
      word[j] = static_cast<std::uint8_t>((word[j] + m * code.gen_matrix.at(i, j)) & 3);
    }
  }
  return word;
}

int min_lee_distance_floor(const Z4Code& code, int floor, std::uint64_t budget, int workers) {
  (void)workers;  // the sweep is cheap at the supported sizes; kept sequential
  const std::uint64_t total = pow4(code.n, budget);
  if (total > budget) throw BudgetExceeded("message space 4^n exceeds the Lee budget");
  const std::size_t len = code.gen_matrix.cols;
  const std::size_t k = code.n;

  // rows of the generator matrix as byte vectors
  std::vector<std::uint8_t> rows(k * len);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < len; ++j) rows[i * len + j] = code.gen_matrix.at(i, j);
  }

  std::vector<std::uint8_t> digit(k, 0);
  std::vector<std::uint8_t> acc(len, 0);
  int best = INT32_MAX;
  for (std::uint64_t idx = 1;; ++idx) {
    // advance: every digit change (increment or 3->0 rollover) adds +1 * row
    std::size_t pos = 0;
    while (pos < k && digit[pos] == 3) {
      const std::uint8_t* row = rows.data() + pos * len;
      for (std::size_t j = 0; j < len; ++j) acc[j] = static_cast<std::uint8_t>((acc[j] + row[j]) & 3);
      digit[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
    const std::uint8_t* row = rows.data() + pos * len;
    for (std::size_t j = 0; j < len; ++j) acc[j] = static_cast<std::uint8_t>((acc[j] + row[j]) & 3);
    ++digit[pos];

    int w = 0;
    for (std::size_t j = 0; j < len; ++j) w += kLee[acc[j]];
    if (w < best) {
      best = w;
      if (best <= floor) return best;
    }
    if (idx + 1 >= total) break;
  }
  return best;
}

int min_lee_distance(const Z4Code& code, std::uint64_t budget, int workers) {
  return min_lee_distance_floor(code, 0, budget, workers);
}

Z4CountReport count_cis_z4(std::size_t n, int t, std::uint64_t budget) {
  if (t < 2) throw std::invalid_argument("index t must be >= 2");
  FieldPtr f2 = FiniteField::get(2, 1);
  if (!qc_two_factor_shape(f2, n)) {
    throw std::invalid_argument("hypothesis failed: 2 is not primitive mod n");
  }

  Z4CountReport report;
  report.n = n;
  report.t = t;
  const auto e = static_cast<unsigned long>(t - 1);
  report.paper_count = big_pow(big_pow(std::uint64_t{4}, static_cast<unsigned long>(n)) -
                                   big_pow(std::uint64_t{2}, static_cast<unsigned long>(n)),
                               e);
  report.crt_count = big_pow(2 * (big_pow(std::uint64_t{4}, static_cast<unsigned long>(n - 1)) -
                                  big_pow(std::uint64_t{2}, static_cast<unsigned long>(n - 1))),
                             e);

  const std::uint64_t size = pow4(n, 1ULL << 26);
  if (size > (1ULL << 26)) throw BudgetExceeded("residue space too large for the oracle");
  std::uint64_t space = 1;
  for (int i = 0; i + 1 < t; ++i) {
    if (space > budget / size) throw BudgetExceeded("tuple scan exceeds the oracle budget");
    space *= size;
  }

  std::vector<char> unit(size, 0);
  for (std::uint64_t i = 0; i < size; ++i) unit[i] = is_unit_z4(residue_from_index(i, n), n) ? 1 : 0;

  const auto slots = static_cast<std::size_t>(t - 1);
  std::vector<std::uint64_t> digit(slots, 0);
  BigInt count = 0;
  for (;;) {
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
  report.oracle_count = count;
  report.crt_matches_oracle = report.crt_count == report.oracle_count;
  report.paper_matches_oracle = report.paper_count == report.oracle_count;
  return report;
}

Z4SearchReport z4_random_search(std::size_t n, int t, std::uint64_t seed, std::uint64_t budget,
                                std::optional<int> target_lee, int workers,
                                std::uint64_t lee_budget) {
  if (t < 2) throw std::invalid_argument("index t must be >= 2");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t size = pow4(n, UINT64_MAX / 4);

  auto eval = [&](std::uint64_t slot, int floor) -> std::optional<std::pair<int, Z4GeneratorSpec>> {
    SplitMix64 rng(stream_seed(seed, slot));
    std::vector<Z4Poly> gens;
    gens.reserve(static_cast<std::size_t>(t - 1));
    for (int i = 0; i + 1 < t; ++i) {
      Z4Poly r = residue_from_index(rng.below(size), n);
      if (!is_unit_z4(r, n)) return std::nullopt;
      gens.push_back(std::move(r));
    }
    Z4GeneratorSpec spec(n, t, std::move(gens));
    const int d = min_lee_distance_floor(build_z4_code(spec), floor, lee_budget);
    return std::make_pair(d, std::move(spec));
  };

  auto run = detail::run_slots<Z4GeneratorSpec>(eval, budget, target_lee, workers);
  Z4SearchReport report;
  report.found = run.found;
  report.best_lee = run.d;
  report.best_spec = std::move(run.cand);
  report.candidates_tried = run.tried;
  report.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cisforge::z4
