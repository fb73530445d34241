#pragma once

#include <stdexcept>

#include "primegraph/matrix.hpp"
#include "primegraph/polynomial.hpp"

namespace primegraph {

struct SingularMatrixError : std::domain_error {
  SingularMatrixError() : std::domain_error("matrix is singular") {}
};

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_bareiss(const IntMatrix& m);

// Rank over the rationals.
int rank(const IntMatrix& m);
int rank(const RatMatrix& m);

// Exact rational inverse; throws SingularMatrixError when det = 0.
RatMatrix inverse(const IntMatrix& m);
RatMatrix inverse(const RatMatrix& m);

// det(xI - M) as an integer polynomial (Faddeev-LeVerrier; every
// intermediate division is exact). Monic of degree n.
IntPolynomial char_poly(const IntMatrix& m);

}  // namespace primegraph
