#pragma once

#include <vector>

#include "primegraph/polynomial.hpp"
#include "primegraph/rational.hpp"

namespace primegraph {

enum class Ordering { Less, Equal, Greater };

// Certified enclosure of one real algebraic number: either an exact rational
// (lo == hi) or an open bracket (lo, hi) containing exactly one root of the
// square-free witness polynomial, whose values at lo and hi are nonzero and
// of opposite sign. Comparisons against rationals are decided by sign
// evaluation; comparisons between enclosures refine until separated.
class RootInterval {
 public:
  // the exact root 0 of x; factories below build anything meaningful
  RootInterval()
      : poly_(IntPolynomial::monomial(1)), isolating_(IntPolynomial::monomial(1)) {}

  static RootInterval exact(IntPolynomial poly, const BigRational& value, int multiplicity = 1);
  static RootInterval bracket(IntPolynomial poly, IntPolynomial isolating, BigRational lo,
                              BigRational hi, int multiplicity = 1);

  const IntPolynomial& poly() const { return poly_; }
  const IntPolynomial& isolating() const { return isolating_; }
  const BigRational& lo() const { return lo_; }
  const BigRational& hi() const { return hi_; }
  int multiplicity() const { return multiplicity_; }
  bool is_exact() const { return lo_ == hi_; }
  BigRational width() const { return hi_ - lo_; }
  BigRational midpoint() const { return (lo_ + hi_) / 2; }
  double approx() const { return midpoint().get_d(); }

  void refine_step();
  void refine_to(const BigRational& max_width);

 private:
  IntPolynomial poly_;       // polynomial whose root this isolates
  IntPolynomial isolating_;  // square-free witness used for sign tests
  BigRational lo_, hi_;
  int sign_lo_ = 0;  // sign of isolating_ at lo_ (0 only for exact roots)
  int multiplicity_ = 1;
};

// Strict comparison of the enclosed root against q.
Ordering compare_root_to_rational(const RootInterval& r, const BigRational& q);

// Exact ordering of two enclosed roots (Equal when they name the same
// algebraic number, detected via the gcd of the witness polynomials).
Ordering compare_roots(const RootInterval& a, const RootInterval& b);

// Disjoint enclosures for all distinct real roots of p, multiplicities from
// square-free decomposition, sorted descending, each narrowed to max_width.
// p must be nonzero.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p, const BigRational& max_width);

// Number of distinct real roots of square-free g in (a, b]; Sturm's theorem.
int count_roots_in(const IntPolynomial& g, const BigRational& a, const BigRational& b);

}  // namespace primegraph
