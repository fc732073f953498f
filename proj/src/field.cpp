#include "cisforge/field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "cisforge/poly.hpp"

namespace cisforge {

namespace {

// Raw digit-vector arithmetic over F_p, used only while bootstrapping a
// field's tables (before FieldElement machinery exists for it).
using Digits = std::vector<std::uint32_t>;

void raw_trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits raw_mul_mod(const Digits& a, const Digits& b, const Digits& modulus, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  // reduce mod the monic modulus
  const std::size_t m = modulus.size() - 1;
  for (std::size_t d = prod.size(); d-- > m;) {
    const std::uint32_t lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint32_t sub = (lead * modulus[j]) % p;
      prod[d - m + j] = (prod[d - m + j] + p - sub) % p;
    }
  }
  prod.resize(m, 0);
  raw_trim(prod);
  return prod;
}

Digits raw_pow_mod(Digits base, std::uint64_t e, const Digits& modulus, std::uint32_t p) {
  Digits result{1};
  while (e > 0) {
    if (e & 1) result = raw_mul_mod(result, base, modulus, p);
    base = raw_mul_mod(base, base, modulus, p);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);

  pow_p_.resize(m_ + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  if (m_ == 1) {
    modulus_ = {0, 1};  // x; elements are residues mod p
  } else {
    // Smallest monic irreducible of degree m over F_p, comparing coefficient
    // tuples (c_{m-1},...,c_0), i.e. scanning v = sum c_i p^i upward.
    FieldPtr prime = FiniteField::get(p_, 1);
    for (std::uint32_t v = 0; v < q_; ++v) {
      std::vector<std::uint32_t> cand(m_ + 1, 0);
      std::uint32_t rest = v;
      for (std::uint32_t i = 0; i < m_; ++i) {
        cand[i] = rest % p_;
        rest /= p_;
      }
      cand[m_] = 1;
      std::vector<std::uint32_t> idx(cand.begin(), cand.end());
      Poly candidate(prime.get(), idx);
      if (is_irreducible(candidate)) {
        modulus_ = cand;
        break;
      }
    }
  }
  build_tables();
}

void FiniteField::build_tables() {
  exp_.assign(2 * (q_ - 1), 1);
  log_.assign(q_, 0);
  if (q_ == 2) {
    gen_ = 1;
    exp_ = {1};
    log_[1] = 0;
    return;
  }

  auto to_digits = [&](std::uint32_t v) {
    Digits d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    raw_trim(d);
    return d;
  };
  auto from_digits = [&](const Digits& d) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < d.size(); ++i) v += d[i] * pow_p_[i];
    return v;
  };

  Digits mod_digits(modulus_.begin(), modulus_.end());
  const std::uint64_t group = q_ - 1;
  const auto primes = prime_factors_u64(group);

  for (std::uint32_t cand = 2; cand < q_; ++cand) {
    Digits g = to_digits(cand);
    bool generates = true;
    for (std::uint64_t ell : primes) {
      Digits probe = raw_pow_mod(g, group / ell, mod_digits, p_);
      if (probe.size() == 1 && probe[0] == 1) {
        generates = false;
        break;
      }
    }
    if (!generates) continue;
    gen_ = cand;
    Digits acc{1};
    for (std::uint64_t i = 0; i < group; ++i) {
      const std::uint32_t v = from_digits(acc);
      exp_[i] = v;
      exp_[i + group] = v;
      log_[v] = static_cast<std::uint32_t>(i);
      acc = raw_mul_mod(acc, g, mod_digits, p_);
    }
    return;
  }
  throw std::logic_error("no multiplicative generator found (unreachable for prime-power q)");
}

FieldPtr FiniteField::get(std::uint32_t p, std::uint32_t m) {
  if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > (1ULL << 16)) throw std::invalid_argument("field size p^m exceeds 2^16");
  }

  static std::mutex mtx;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> registry;
  const auto key = std::make_pair(p, m);
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
  }
  // construct outside the lock: extension fields recursively fetch their
  // prime subfield during modulus selection
  FieldPtr field(new FiniteField(p, m));
  std::lock_guard<std::mutex> lock(mtx);
  return registry.emplace(key, field).first->second;
}

FieldElement FiniteField::element(std::uint32_t index) const {
  if (index >= q_) throw std::invalid_argument("element index out of range");
  return {this, index};
}

FieldElement FiniteField::scalar(std::int64_t c) const {
  std::int64_t r = c % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<std::uint32_t>(r)};
}

FieldElement FiniteField::poly_gen() const {
  if (m_ < 2) throw std::domain_error("prime field has no polynomial-basis generator");
  return {this, p_};
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.emplace_back(this, i);
  return out;
}

std::uint32_t FiniteField::add_idx(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint32_t da = (a / pow_p_[i]) % p_;
    const std::uint32_t db = (b / pow_p_[i]) % p_;
    out += ((da + db) % p_) * pow_p_[i];
  }
  return out;
}

std::uint32_t FiniteField::neg_idx(std::uint32_t a) const {
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint32_t da = (a / pow_p_[i]) % p_;
    out += ((p_ - da) % p_) * pow_p_[i];
  }
  return out;
}

std::uint32_t FiniteField::sub_idx(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  return add_idx(a, neg_idx(b));
}

std::uint32_t FiniteField::mul_idx(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) + log_[b]];
}

std::uint32_t FiniteField::inv_idx(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inversion of zero field element");
  return exp_[(q_ - 1) - log_[a]];
}

std::uint32_t FiniteField::pow_idx(std::uint32_t a, std::int64_t k) const {
  if (a == 0) {
    if (k > 0) return 0;
    if (k == 0) return 1;
    throw std::domain_error("negative power of zero field element");
  }
  const std::int64_t group = q_ - 1;
  std::int64_t r = k % group;
  if (r < 0) r += group;
  const std::uint64_t e = (static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) %
                          static_cast<std::uint64_t>(group);
  return exp_[e];
}

std::uint32_t FiniteField::order_idx(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("zero element has no multiplicative order");
  const std::uint32_t group = q_ - 1;
  // order = group / gcd(group, log a)
  std::uint32_t x = group, y = log_[a];
  while (y != 0) {
    const std::uint32_t t = x % y;
    x = y;
    y = t;
  }
  return group / x;
}

std::vector<std::uint32_t> FiniteField::repr(std::uint32_t index) const {
  std::vector<std::uint32_t> digits(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    digits[i] = index % p_;
    index /= p_;
  }
  return digits;
}

std::uint32_t FiniteField::from_repr(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() != m_) throw std::invalid_argument("repr length must equal extension degree");
  std::uint32_t v = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (digits[i] >= p_) throw std::invalid_argument("repr digit out of range");
    v += digits[i] * pow_p_[i];
  }
  return v;
}

std::string FiniteField::element_str(std::uint32_t index) const {
  if (m_ == 1 || index < p_) return std::to_string(index);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = m_; i-- > 0;) {
    const std::uint32_t d = (index / pow_p_[i]) % p_;
    if (d == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << d;
    } else {
      if (d != 1) os << d << "*";
      os << "w";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace cisforge
