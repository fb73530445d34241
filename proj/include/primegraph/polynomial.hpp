#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primegraph/rational.hpp"

namespace primegraph {

// Dense univariate polynomial with BigInt coefficients, lowest degree first.
// Canonical form: no trailing zero coefficient (the zero polynomial is the
// empty coefficient list, degree -1).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(BigInt c) { return IntPolynomial({std::move(c)}); }
  // c * x^k
  static IntPolynomial monomial(int k, BigInt c = BigInt(1));
  // x - r
  static IntPolynomial x_minus(const BigInt& r) { return IntPolynomial({-r, BigInt(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : BigInt(0);
  }
  const BigInt& leading() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const BigInt& s) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  IntPolynomial derivative() const;
  IntPolynomial pow(int e) const;

  BigInt operator()(const BigInt& x) const;
  BigRational operator()(const BigRational& x) const;
  int sign_at(const BigRational& x) const { return sgn((*this)(x)); }

  // Human-readable form, descending powers: "x^3 - 4x - 2".
  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

// gcd of all coefficients (nonnegative); 0 for the zero polynomial
BigInt content(const IntPolynomial& p);
// p / content, sign fixed so the leading coefficient is positive
IntPolynomial primitive_part(const IntPolynomial& p);

// Quotient of p by d when the division over Q is exact and the quotient has
// integer coefficients; nullopt otherwise. d must be nonzero.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& d);

// true iff division of p by d over the rationals leaves zero remainder
bool poly_divides(const IntPolynomial& d, const IntPolynomial& p);

// Largest k with d^k | p (0 if d does not divide p). d nonconstant.
int divisor_multiplicity(const IntPolynomial& d, const IntPolynomial& p);

// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Yun square-free decomposition: pairwise-coprime primitive square-free
// factors with their multiplicities, product of factor^mult = p up to a
// rational constant. p must be nonzero.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

}  // namespace primegraph
