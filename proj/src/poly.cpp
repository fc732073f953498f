#include "cisforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "cisforge/rng.hpp"

namespace cisforge {

namespace {

const FiniteField* common_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw std::invalid_argument("polynomials over different fields");
  return a.field();
}

// Splitting in factorize() must be reproducible; all of its randomness comes
// from this fixed stream, reseeded per call.
constexpr std::uint64_t kFactorSeed = 0x5f3759df9e3779b9ULL;

}  // namespace

Poly Poly::from_ints(const FieldPtr& field, const std::vector<std::int64_t>& scalars) {
  std::vector<std::uint32_t> idx(scalars.size());
  for (std::size_t i = 0; i < scalars.size(); ++i) idx[i] = field->scalar(scalars[i]).index();
  return Poly(field, std::move(idx));
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ca = a.coeff_index(static_cast<std::size_t>(i));
    const auto cb = b.coeff_index(static_cast<std::size_t>(i));
    if (ca != cb) return ca < cb;
  }
  return false;
}

Poly operator+(const Poly& a, const Poly& b) {
  const FiniteField* f = common_field(a, b);
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->add_idx(a.coeff_index(i), b.coeff_index(i));
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  const FiniteField* f = common_field(a, b);
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->sub_idx(a.coeff_index(i), b.coeff_index(i));
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a) {
  const FiniteField* f = a.field();
  std::vector<std::uint32_t> c(a.coeffs());
  for (auto& v : c) v = f->neg_idx(v);
  return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  const FiniteField* f = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<std::uint32_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const std::uint32_t ai = a.coeff_index(i);
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = f->add_idx(c[i + j], f->mul_idx(ai, b.coeff_index(j)));
    }
  }
  return Poly(f, std::move(c));
}

Poly operator*(FieldElement c, const Poly& a) {
  if (c.field() != a.field()) throw std::invalid_argument("scalar from a different field");
  std::vector<std::uint32_t> out(a.coeffs());
  for (auto& v : out) v = a.field()->mul_idx(c.index(), v);
  return Poly(a.field(), std::move(out));
}

Poly shift(const Poly& a, std::size_t k) {
  if (a.is_zero() || k == 0) return k == 0 ? a : a;
  std::vector<std::uint32_t> c(a.coeffs().size() + k, 0);
  std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(k));
  return Poly(a.field(), std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const FiniteField* f = common_field(a, b);
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(f), a};
  const std::uint32_t lead_inv = f->inv_idx(b.leading().index());
  std::vector<std::uint32_t> rem(a.coeffs());
  std::vector<std::uint32_t> quot(a.coeffs().size() - b.coeffs().size() + 1, 0);
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    const std::uint32_t coef = f->mul_idx(rem[i], lead_inv);
    if (coef == 0) continue;
    quot[i - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f->sub_idx(rem[i - db + j], f->mul_idx(coef, b.coeff_index(j)));
    }
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

FieldElement eval(const Poly& a, FieldElement point) {
  if (a.field() != point.field()) throw std::invalid_argument("evaluation point from a different field");
  const FiniteField* f = a.field();
  std::uint32_t acc = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    acc = f->add_idx(f->mul_idx(acc, point.index()), a.coeff_index(i));
  }
  return {f, acc};
}

Poly derivative(const Poly& a) {
  const FiniteField* f = a.field();
  if (a.coeffs().size() <= 1) return Poly(f);
  std::vector<std::uint32_t> c(a.coeffs().size() - 1, 0);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    c[i - 1] = f->mul_idx(f->scalar(static_cast<std::int64_t>(i)).index(), a.coeff_index(i));
  }
  return Poly(f, std::move(c));
}

Poly monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return a.leading().inv() * a;
}

Poly gcd(const Poly& a, const Poly& b) {
  common_field(a, b);
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const FiniteField* f = common_field(a, b);
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f->one()), s1 = Poly(f);
  Poly t0 = Poly(f), t1 = Poly::constant(f->one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    Poly t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  const FieldElement lead = r0.leading();
  const FieldElement scale = lead.inv();
  return {scale * r0, scale * s0, scale * t0};
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& mod) {
  const FiniteField* f = common_field(base, mod);
  if (e < 0) throw std::invalid_argument("negative exponent in powmod");
  Poly result = Poly::constant(f->one()) % mod;
  Poly b = base % mod;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
  }
  return result;
}

Poly Factorization::product() const {
  Poly out = Poly::constant(constant);
  for (const auto& [fac, mult] : factors) {
    for (std::uint32_t i = 0; i < mult; ++i) out = out * fac;
  }
  return out;
}

bool Factorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(), [](const auto& fm) { return fm.second == 1; });
}

bool is_separable(const Poly& h) {
  if (h.degree() < 1) throw std::invalid_argument("separability needs degree >= 1");
  const Poly d = derivative(h);
  if (d.is_zero()) return false;
  return gcd(h, d).degree() == 0;
}

namespace {

// p-th root of a polynomial all of whose exponents are multiples of p.
Poly pth_root(const Poly& a) {
  const FiniteField* f = a.field();
  const std::uint32_t p = f->p();
  std::vector<std::uint32_t> c;
  c.reserve(a.coeffs().size() / p + 1);
  // p-th root of a coefficient is c^{p^{m-1}} = c^{q/p}
  const std::int64_t root_exp = f->q() / p;
  for (std::size_t i = 0; i < a.coeffs().size(); i += p) {
    c.push_back(f->pow_idx(a.coeff_index(i), root_exp));
  }
  return Poly(f, std::move(c));
}

// Squarefree decomposition over F_q, characteristic p, handling h' = 0 via
// p-th-root extraction. Accumulates monic squarefree parts with multiplicity.
void squarefree_decompose(const Poly& input, std::uint32_t outer_mult,
                          std::map<Poly, std::uint32_t, PolyLess>& out) {
  const FiniteField* f = input.field();
  const std::uint32_t p = f->p();
  Poly h = monic(input);
  if (h.degree() == 0) return;

  Poly d = derivative(h);
  if (d.is_zero()) {
    squarefree_decompose(pth_root(h), outer_mult * p, out);
    return;
  }

  Poly c = gcd(h, d);
  Poly w = h / c;
  std::uint32_t i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly part = w / y;
    if (part.degree() > 0) out[part] += i * outer_mult;
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) squarefree_decompose(c, outer_mult, out);
}

// Distinct-degree factorization of a monic squarefree polynomial:
// returns (product-of-irreducibles-of-degree-d, d) pairs.
std::vector<std::pair<Poly, std::uint32_t>> distinct_degree(const Poly& input) {
  const FiniteField* f = input.field();
  std::vector<std::pair<Poly, std::uint32_t>> out;
  Poly w = input;
  Poly frob = Poly::x(f) % w;  // x^{q^d} mod w, advanced once per d
  for (std::uint32_t d = 1; 2 * d <= static_cast<std::uint32_t>(w.degree()); ++d) {
    frob = powmod(frob, BigInt(static_cast<unsigned long>(f->q())), w);
    Poly g = gcd(frob - (Poly::x(f) % w), w);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      w = w / g;
      frob = frob % w;
    }
  }
  if (w.degree() > 0) out.emplace_back(w, static_cast<std::uint32_t>(w.degree()));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting of a product of irreducibles of
// known degree d. Char 2 uses the absolute trace map.
void equal_degree(const Poly& input, std::uint32_t d, SplitMix64& rng, std::vector<Poly>& out) {
  const FiniteField* f = input.field();
  const std::uint32_t n = static_cast<std::uint32_t>(input.degree());
  if (n == d) {
    out.push_back(input);
    return;
  }
  while (true) {
    std::vector<std::uint32_t> c(n);
    for (auto& v : c) v = static_cast<std::uint32_t>(rng.below(f->q()));
    Poly r(f, std::move(c));
    if (r.degree() < 1) continue;
    Poly g = gcd(r, input);
    if (g.degree() == 0) {
      if (f->p() == 2) {
        // trace map T(r) = r + r^2 + ... + r^{2^{md-1}}
        const std::uint32_t md = d * f->m();
        Poly t = r;
        Poly cur = r;
        for (std::uint32_t i = 1; i < md; ++i) {
          cur = (cur * cur) % input;
          t = t + cur;
        }
        g = t.is_zero() ? Poly(f) : gcd(t, input);
        if (g.is_zero()) continue;
      } else {
        BigInt e = (big_pow(static_cast<std::uint64_t>(f->q()), d) - 1) / 2;
        Poly s = powmod(r, e, input);
        g = gcd(s - Poly::constant(f->one()), input);
      }
    }
    if (g.degree() > 0 && g.degree() < input.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(input / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factorize(const Poly& h) {
  if (h.degree() < 1) throw std::invalid_argument("factorize needs degree >= 1");
  const FiniteField* f = h.field();

  std::map<Poly, std::uint32_t, PolyLess> squarefree_parts;
  squarefree_decompose(h, 1, squarefree_parts);

  SplitMix64 rng(kFactorSeed);
  std::vector<std::pair<Poly, std::uint32_t>> factors;
  for (const auto& [part, mult] : squarefree_parts) {
    for (const auto& [prod, d] : distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      equal_degree(prod, d, rng, irreducibles);
      for (auto& irr : irreducibles) factors.emplace_back(std::move(irr), mult);
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return {h.leading(), std::move(factors)};
}

bool is_irreducible(const Poly& h) {
  if (h.degree() < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
  const FiniteField* f = h.field();
  const auto n = static_cast<std::uint32_t>(h.degree());
  if (n == 1) return true;
  if (h.coeff_index(0) == 0) return false;  // divisible by x

  std::vector<std::uint32_t> checkpoints;
  for (std::uint32_t ell = 2; ell <= n; ++ell) {
    if (n % ell == 0 && is_prime_u64(ell)) checkpoints.push_back(n / ell);
  }

  const Poly x = Poly::x(f) % h;
  Poly cur = x;
  const BigInt q(static_cast<unsigned long>(f->q()));
  for (std::uint32_t i = 1; i <= n; ++i) {
    cur = powmod(cur, q, h);  // now x^{q^i} mod h
    if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
      Poly diff = cur - x;
      if (diff.is_zero() || gcd(diff, h).degree() != 0) return false;
    }
  }
  return cur == x;
}

int mobius(std::uint64_t n) {
  int count = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      ++count;
    }
  }
  if (n > 1) ++count;
  return (count % 2 == 0) ? 1 : -1;
}

BigInt count_irreducibles(std::uint64_t q, std::uint32_t d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  BigInt sum = 0;
  for (std::uint32_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    sum += BigInt(mobius(d / e)) * big_pow(q, e);
  }
  return sum / d;
}

std::string to_string(const Poly& a) {
  if (a.is_zero()) return "0";
  const FiniteField* f = a.field();
  std::ostringstream os;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const std::uint32_t c = a.coeff_index(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = f->element_str(c);
    const bool compound = cs.find('+') != std::string::npos;
    if (i == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (c != 1) {
      os << (compound ? "(" + cs + ")" : cs) << "*";
    }
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

namespace {

struct Parser {
  const FieldPtr& field;
  std::string s;
  std::size_t pos = 0;

  explicit Parser(const FieldPtr& f, std::string_view text) : field(f) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + s + "': " + why);
  }

  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::uint64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (1ULL << 40)) fail("integer too large");
      ++pos;
    }
    return v;
  }

  // INT (element index) or w-power; used inside coefficients.
  FieldElement coefficient_atom() {
    if (eat('w')) {
      std::int64_t e = 1;
      if (eat('^')) e = static_cast<std::int64_t>(integer());
      return field->poly_gen().pow(e);
    }
    const std::uint64_t v = integer();
    if (v >= field->q()) fail("element index " + std::to_string(v) + " out of range");
    return field->element(static_cast<std::uint32_t>(v));
  }

  FieldElement coefficient_product() {
    FieldElement acc = coefficient_atom();
    while (eat('*')) acc = acc * coefficient_atom();
    return acc;
  }

  // signed sum of coefficient products, e.g. "2*w+1" inside parentheses
  FieldElement coefficient_sum() {
    FieldElement acc = field->zero();
    bool negative = eat('-');
    if (!negative) eat('+');
    while (true) {
      FieldElement a = coefficient_product();
      acc = negative ? acc - a : acc + a;
      if (eat('+')) {
        negative = false;
      } else if (eat('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return acc;
  }

  // one product of primaries: coefficient parts and x-powers
  void term(bool negative, std::vector<std::pair<FieldElement, std::size_t>>& out) {
    FieldElement coef = field->one();
    std::size_t xpow = 0;
    bool any = false;
    while (true) {
      if (eat('x')) {
        std::size_t e = 1;
        if (eat('^')) e = static_cast<std::size_t>(integer());
        if (e > 4096) fail("x-power too large");
        xpow += e;
      } else if (eat('(')) {
        coef = coef * coefficient_sum();
        if (!eat(')')) fail("expected ')'");
      } else if (peek() == 'w' || std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = coef * coefficient_atom();
      } else if (any) {
        break;
      } else {
        fail("expected term");
      }
      any = true;
      if (!eat('*')) {
        // allow implicit products like "2x" / "w(x)" style only via '*'-less adjacency
        if (peek() != 'x' && peek() != '(' && peek() != 'w') break;
      }
    }
    out.emplace_back(negative ? -coef : coef, xpow);
  }

  Poly run() {
    if (s.empty()) fail("empty input");
    std::vector<std::pair<FieldElement, std::size_t>> terms;
    bool negative = eat('-');
    while (true) {
      term(negative, terms);
      if (eat('+')) {
        negative = false;
      } else if (eat('-')) {
        negative = true;
      } else {
        break;
      }
    }
    if (!done()) fail("trailing characters at position " + std::to_string(pos));
    std::size_t deg = 0;
    for (const auto& [c, e] : terms) deg = std::max(deg, e);
    std::vector<std::uint32_t> coeffs(deg + 1, 0);
    for (const auto& [c, e] : terms) coeffs[e] = field->add_idx(coeffs[e], c.index());
    return Poly(field, std::move(coeffs));
  }
};

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  if (text.find(',') != std::string_view::npos) {
    std::vector<std::uint32_t> coeffs;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      std::size_t consumed = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(token, &consumed);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad coefficient token '" + token + "'");
      }
      while (consumed < token.size() && std::isspace(static_cast<unsigned char>(token[consumed]))) {
        ++consumed;
      }
      if (consumed != token.size()) throw std::invalid_argument("bad coefficient token '" + token + "'");
      if (v >= field->q()) throw std::invalid_argument("coefficient index out of range: " + token);
      coeffs.push_back(static_cast<std::uint32_t>(v));
    }
    return Poly(field, std::move(coeffs));
  }
  Parser parser(field, text);
  return parser.run();
}

}  // namespace cisforge
