#include "primegraph/linalg.hpp"

namespace primegraph {

BigInt det_bareiss(const IntMatrix& m) {
  m.require_square();
  const int n = m.rows();
  if (n == 0) return BigInt(1);

  IntMatrix a = m;
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return BigInt(0);
      for (int j = 0; j < n; ++j) swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = std::move(t);
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

int rank(const RatMatrix& m) {
  RatMatrix a = m;
  const int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (int j = c; j < cols; ++j) swap(a.at(r, j), a.at(p, j));
    for (int i = r + 1; i < rows; ++i) {
      if (a.at(i, c) == 0) continue;
      BigRational f = a.at(i, c) / a.at(r, c);
      a.at(i, c) = 0;
      for (int j = c + 1; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

int rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix inverse(const RatMatrix& m) {
  m.require_square();
  const int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) throw SingularMatrixError();
    if (p != c)
      for (int j = 0; j < n; ++j) {
        swap(a.at(c, j), a.at(p, j));
        swap(inv.at(c, j), inv.at(p, j));
      }
    BigRational piv = a.at(c, c);
    for (int j = 0; j < n; ++j) {
      a.at(c, j) /= piv;
      inv.at(c, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      BigRational f = a.at(i, c);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

RatMatrix inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

IntPolynomial char_poly(const IntMatrix& m) {
  m.require_square();
  const int n = m.rows();
  std::vector<BigInt> c(static_cast<size_t>(n) + 1);
  c[n] = 1;
  // Faddeev-LeVerrier: M_k = A*M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A*M_k)/k.
  // The divisions are exact because the c's are the integer coefficients of
  // det(xI - A).
  IntMatrix am = m;  // A * M_k, starting from M_1 = I
  for (int k = 1; k <= n; ++k) {
    BigInt t = -am.trace();
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = std::move(t);
    if (k < n) {
      for (int i = 0; i < n; ++i) am.at(i, i) += c[n - k];
      am = m * am;
    }
  }
  return IntPolynomial(std::move(c));
}

}  // namespace primegraph
