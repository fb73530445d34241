#include "primegraph/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "primegraph/detail/ratpoly.hpp"

namespace primegraph {

using detail::RatPoly;

IntPolynomial IntPolynomial::monomial(int k, BigInt c) {
  if (k < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<BigInt> v(static_cast<size_t>(k) + 1, BigInt(0));
  v.back() = std::move(c);
  return IntPolynomial(std::move(v));
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c *= s;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * BigInt(static_cast<long>(i));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  IntPolynomial r = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational IntPolynomial::operator()(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
  return acc;
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeff(k);
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k > 0) {
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

BigInt content(const IntPolynomial& p) {
  BigInt g(0);
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return abs(g);
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  if (p.leading() < 0) c = -c;
  std::vector<BigInt> v(p.coeffs());
  for (auto& x : v) x /= c;
  return IntPolynomial(std::move(v));
}

namespace {

// remainder-free rational division; nullopt when the remainder is nonzero
std::optional<RatPoly> rat_divide_exact(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  RatPoly q, r;
  detail::rp_divmod(detail::rp_from(p), detail::rp_from(d), q, r);
  if (!r.empty()) return std::nullopt;
  return q;
}

}  // namespace

std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& d) {
  auto q = rat_divide_exact(p, d);
  if (!q) return std::nullopt;
  std::vector<BigInt> v;
  v.reserve(q->size());
  for (const auto& c : *q) {
    if (c.get_den() != 1) return std::nullopt;
    v.push_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

bool poly_divides(const IntPolynomial& d, const IntPolynomial& p) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return true;
  return rat_divide_exact(p, d).has_value();
}

int divisor_multiplicity(const IntPolynomial& d, const IntPolynomial& p) {
  if (d.degree() < 1) throw std::invalid_argument("nonconstant divisor required");
  int k = 0;
  IntPolynomial rest = p;
  while (!rest.is_zero()) {
    auto q = rat_divide_exact(rest, d);
    if (!q) break;
    std::vector<BigInt> v;
    v.reserve(q->size());
    bool integral = true;
    for (const auto& c : *q) {
      if (c.get_den() != 1) {
        integral = false;
        break;
      }
      v.push_back(c.get_num());
    }
    // rational quotient suffices for counting; scale away denominators
    if (!integral) {
      BigInt den(1);
      for (const auto& c : *q) den = lcm(den, BigInt(c.get_den()));
      v.clear();
      for (const auto& c : *q) v.push_back(BigInt(c.get_num()) * (den / BigInt(c.get_den())));
    }
    rest = IntPolynomial(std::move(v));
    ++k;
  }
  return k;
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r0 = primitive_part(a);
  IntPolynomial r1 = primitive_part(b);
  while (!r1.is_zero()) {
    RatPoly rem = detail::rp_rem(detail::rp_from(r0), detail::rp_from(r1));
    // clear denominators, keep it primitive to bound coefficient growth
    BigInt den(1);
    for (const auto& c : rem) den = lcm(den, BigInt(c.get_den()));
    std::vector<BigInt> v;
    v.reserve(rem.size());
    for (const auto& c : rem) v.push_back(BigInt(c.get_num()) * (den / BigInt(c.get_den())));
    r0 = std::move(r1);
    r1 = primitive_part(IntPolynomial(std::move(v)));
  }
  return primitive_part(r0);
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of zero polynomial");
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() == 0) return out;

  auto must_divide = [](const IntPolynomial& num, const IntPolynomial& den) {
    auto q = divide_exact(num, den);
    if (!q) throw std::logic_error("expected exact division in square-free decomposition");
    return *q;
  };

  IntPolynomial pp = primitive_part(p);
  IntPolynomial g = poly_gcd(pp, pp.derivative());
  if (g.degree() == 0) {
    out.emplace_back(pp, 1);
    return out;
  }
  // Yun: w carries the square-free parts still to be peeled off
  IntPolynomial w = must_divide(pp, g);
  IntPolynomial y = must_divide(pp.derivative(), g);
  IntPolynomial z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    IntPolynomial gi = poly_gcd(w, z);
    if (gi.degree() > 0) out.emplace_back(gi, i);
    w = must_divide(w, gi);
    y = must_divide(z, gi);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

}  // namespace primegraph
