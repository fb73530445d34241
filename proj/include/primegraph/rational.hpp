#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace primegraph {

// Arbitrary-precision scalars. All linear algebra in this library is exact;
// no floating point appears outside the advisory cross-check in verify.
using BigInt = mpz_class;
using BigRational = mpq_class;

// num/den in canonical form (reduced, denominator > 0). Throws on den == 0.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// (-1)^k without materializing a power
inline BigInt alt_sign(long k) { return (k % 2 == 0) ? BigInt(1) : BigInt(-1); }

inline std::string to_string(const BigInt& x) { return x.get_str(); }

// "p/q" with canonical sign, plain "p" for integers
inline std::string to_string(const BigRational& q) { return q.get_str(); }

// 2^-e as an exact rational, the interval widths used throughout
inline BigRational pow2_inv(unsigned long e) {
  return make_rational(1, big_pow(2, e));
}

}  // namespace primegraph
