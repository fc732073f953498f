#ifndef CISFORGE_BIGINT_HPP
#define CISFORGE_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>

namespace cisforge {

// Exact counts ((q^{n-1}-1)^{t-1} and friends) overflow 64 bits quickly;
// everything that counts codes is arbitrary precision.
using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline BigInt big_pow(std::uint64_t base, unsigned long exp) {
  return big_pow(BigInt(static_cast<unsigned long>(base)), exp);
}

}  // namespace cisforge

#endif
