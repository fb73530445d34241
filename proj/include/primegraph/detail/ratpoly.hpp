#pragma once

// Internal helpers: dense polynomials over BigRational, lowest degree first.
// Shared by the exact division/gcd routines and the Sturm-chain code.

#include <vector>

#include "primegraph/polynomial.hpp"
#include "primegraph/rational.hpp"

namespace primegraph::detail {

using RatPoly = std::vector<BigRational>;

inline void rp_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int rp_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rp_from(const IntPolynomial& p) {
  RatPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

inline BigRational rp_eval(const RatPoly& p, const BigRational& x) {
  BigRational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// num = quot * den + rem, deg(rem) < deg(den). den nonzero.
inline void rp_divmod(RatPoly num, const RatPoly& den, RatPoly& quot, RatPoly& rem) {
  quot.assign(num.size(), BigRational(0));
  const int dd = rp_deg(den);
  while (rp_deg(num) >= dd) {
    const int k = rp_deg(num) - dd;
    BigRational c = num.back() / den.back();
    quot[k] = c;
    for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    num.pop_back();  // leading term cancels exactly
    rp_trim(num);
  }
  rp_trim(quot);
  rem = std::move(num);
}

inline RatPoly rp_rem(RatPoly num, const RatPoly& den) {
  RatPoly q, r;
  rp_divmod(std::move(num), den, q, r);
  return r;
}

}  // namespace primegraph::detail
