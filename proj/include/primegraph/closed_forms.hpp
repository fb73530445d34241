#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primegraph/polynomial.hpp"
#include "primegraph/spectrum.hpp"

namespace primegraph {

// Direct evaluators for the closed-form statements about B(m,n), S(m,n) and
// R~_n. The exact-linear-algebra layer computes the same quantities
// independently; the verify module keeps the two honest against each other.

// det A(B(m,n)) = (-1)^(m+n-1) (3-(m+n)); requires m >= n >= 1
BigInt det_bridge_formula(int m, int n);

// 0 when m+n != 4, 1 for (2,2); nullopt for (3,1), the m+n = 4 case the
// statement does not name (the verify harness computes it by oracle)
std::optional<BigInt> det_bridge_complement_formula(int m, int n);

// det A(S(m,n)) = (-1)^(m+n) (4mn - 5(m+n) + 6); requires m >= n >= 1 and
// m+n >= 4 (at m+n = 3 the derivation divides by det A(B(m,n)) = 0)
BigInt det_suspension_formula(int m, int n);

// Entry (i,j), 1-based, of A(B(m,n))^-1 for the index ranges the closed form
// covers; nullopt for the bridge rows/columns m and m+1. Requires m+n != 3.
std::optional<BigRational> bridge_inverse_entry(int m, int n, int i, int j);

struct FactoredPoly {
  std::vector<std::pair<IntPolynomial, int>> factors;  // (factor, exponent)

  IntPolynomial expand() const;
  // "(x^3 - 4x - 2)(x - 1)(x + 1)^3"
  std::string str(const std::string& var = "x") const;
};

// char poly of B(m,m-1):
//   (x^3 + (3-m)x^2 + (2-2m)x - 2)(x - (m-2))(x+1)^(2m-5),  m > 2
FactoredPoly charpoly_bridge_formula(int m);

// char poly of R~_n:
//   (x^3 - (n+1)x^2 - (n+3)x + (3n+2))(x+1)^n (x^2+x-1),  n >= 0
FactoredPoly charpoly_reseminant_formula(int n);

// raised when certified intervals contradict a claimed spectrum ordering;
// this would falsify the statement being checked, so it is never silently
// reordered
struct OrderingViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Spec(B(m,m-1)) = [theta1, m-2, theta2, -1 x(2m-5), theta3] with the
// ordering theta1 > m-2 > 0 > theta2 > -1 > theta3 certified at `width`
SpectrumReport spectrum_bridge(int m, const BigRational& width);

// Spec(R~_n): n = 0 gives [2, 1/phi x2, -phi x2]; n > 0 gives
// [theta1, theta2, 1/phi, -1 xn, -phi, theta3] with
// theta1 > theta2 > 1/phi > -1 > -phi > theta3 certified at `width`
SpectrumReport spectrum_reseminant(int n, const BigRational& width);

// x^2+x-1 divides the characteristic polynomial (both golden-ratio
// conjugates at once; the quadratic is irreducible)
bool has_golden_ratio_eigenvalues(const IntPolynomial& charpoly);
bool golden_ratio_membership(int n);

struct BoundCheck {
  std::string name;
  bool pass = false;
  RatInterval certified;  // enclosure of the bounded quantity
  std::string detail;
};

struct BoundReport {
  std::string family;
  std::vector<BoundCheck> checks;
  bool all_pass() const;
};

// lambda1 bounds for B(m,n) (with the m = n refinement), plus the
// sum/product bounds for the two smallest non-(-1) eigenvalues when n = m-1
BoundReport eigenvalue_bound_checks_bridge(int m, int n);

// lambda1 bounds for R~_n plus the theta2/theta3 sum and product bounds
BoundReport eigenvalue_bound_checks_reseminant(int n);

struct FamilySpec {
  enum class Kind { Bridge, Reseminant } kind;
  int m = 0;
  int n = 0;
};

BoundReport eigenvalue_bound_checks(const FamilySpec& family);

}  // namespace primegraph
