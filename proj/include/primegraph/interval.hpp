#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "primegraph/rational.hpp"
#include "primegraph/roots.hpp"

namespace primegraph {

// Closed rational interval [lo, hi]; the certified-enclosure currency of the
// eigenvalue bound checks.
struct RatInterval {
  BigRational lo, hi;

  RatInterval() = default;
  RatInterval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  }
  static RatInterval point(const BigRational& q) { return {q, q}; }
  static RatInterval of(const RootInterval& r) { return {r.lo(), r.hi()}; }

  bool is_point() const { return lo == hi; }
  BigRational width() const { return hi - lo; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator-() const { return {-hi, -lo}; }

  RatInterval operator*(const RatInterval& o) const {
    const BigRational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
  }

  // requires 0 outside o
  RatInterval operator/(const RatInterval& o) const {
    if (o.lo <= 0 && o.hi >= 0) throw std::domain_error("interval division through zero");
    RatInterval inv{BigRational(1) / o.hi, BigRational(1) / o.lo};
    return *this * inv;
  }

  // certified order against a rational bound: true means every point of the
  // interval satisfies the relation
  bool certainly_ge(const BigRational& q) const { return lo >= q; }
  bool certainly_le(const BigRational& q) const { return hi <= q; }
  bool certainly_lt(const BigRational& q) const { return hi < q; }
  bool certainly_gt(const BigRational& q) const { return lo > q; }

  std::string str() const { return "[" + to_string(lo) + ", " + to_string(hi) + "]"; }
};

}  // namespace primegraph
