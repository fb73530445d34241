#include "primegraph/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "primegraph/detail/ratpoly.hpp"

namespace primegraph {

using detail::RatPoly;

RootInterval RootInterval::exact(IntPolynomial poly, const BigRational& value, int multiplicity) {
  RootInterval r;
  r.poly_ = std::move(poly);
  // witness (den*x - num) pins the rational value for gcd-based equality tests
  r.isolating_ = IntPolynomial({-BigInt(value.get_num()), BigInt(value.get_den())});
  r.lo_ = r.hi_ = value;
  r.sign_lo_ = 0;
  r.multiplicity_ = multiplicity;
  return r;
}

RootInterval RootInterval::bracket(IntPolynomial poly, IntPolynomial isolating, BigRational lo,
                                   BigRational hi, int multiplicity) {
  RootInterval r;
  const int slo = isolating.sign_at(lo);
  const int shi = isolating.sign_at(hi);
  if (!(lo < hi) || slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("invalid root bracket");
  r.poly_ = std::move(poly);
  r.isolating_ = std::move(isolating);
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  r.sign_lo_ = slo;
  r.multiplicity_ = multiplicity;
  return r;
}

void RootInterval::refine_step() {
  if (is_exact()) return;
  BigRational mid = midpoint();
  const int s = isolating_.sign_at(mid);
  if (s == 0) {
    lo_ = hi_ = std::move(mid);
    sign_lo_ = 0;
  } else if (s == sign_lo_) {
    lo_ = std::move(mid);
  } else {
    hi_ = std::move(mid);
  }
}

void RootInterval::refine_to(const BigRational& max_width) {
  while (!is_exact() && width() > max_width) refine_step();
}

Ordering compare_root_to_rational(const RootInterval& r, const BigRational& q) {
  if (r.is_exact()) {
    const int c = cmp(r.lo(), q);
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
  }
  if (q <= r.lo()) return Ordering::Greater;
  if (q >= r.hi()) return Ordering::Less;
  const int sq = r.isolating().sign_at(q);
  if (sq == 0) return Ordering::Equal;
  // root lies on the side of q where the sign still flips
  return sq == r.isolating().sign_at(r.lo()) ? Ordering::Greater : Ordering::Less;
}

namespace {

Ordering flip(Ordering o) {
  return o == Ordering::Less ? Ordering::Greater : o == Ordering::Greater ? Ordering::Less : o;
}

}  // namespace

Ordering compare_roots(const RootInterval& a, const RootInterval& b) {
  if (a.is_exact()) return flip(compare_root_to_rational(b, a.lo()));
  if (b.is_exact()) return compare_root_to_rational(a, b.lo());
  if (a.hi() <= b.lo()) return Ordering::Less;
  if (b.hi() <= a.lo()) return Ordering::Greater;

  // overlapping brackets: equal only if both enclose the same root of the
  // gcd of the witnesses, which then changes sign across the overlap
  IntPolynomial h = poly_gcd(a.isolating(), b.isolating());
  if (h.degree() >= 1) {
    const BigRational lo = std::max(a.lo(), b.lo());
    const BigRational hi = std::min(a.hi(), b.hi());
    if (h.sign_at(lo) * h.sign_at(hi) < 0) return Ordering::Equal;
  }
  RootInterval x = a, y = b;
  while (true) {
    x.refine_step();
    y.refine_step();
    if (x.is_exact()) return flip(compare_root_to_rational(y, x.lo()));
    if (y.is_exact()) return compare_root_to_rational(x, y.lo());
    if (x.hi() <= y.lo()) return Ordering::Less;
    if (y.hi() <= x.lo()) return Ordering::Greater;
  }
}

namespace {

// Sturm chain of a square-free polynomial, over the rationals.
std::vector<RatPoly> sturm_chain(const IntPolynomial& g) {
  std::vector<RatPoly> chain;
  chain.push_back(detail::rp_from(g));
  chain.push_back(detail::rp_from(g.derivative()));
  while (detail::rp_deg(chain.back()) > 0) {
    RatPoly r = detail::rp_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;  // cannot happen for square-free input
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const BigRational& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& s : chain) {
    const int sg = sgn(detail::rp_eval(s, x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++variations;
    prev = sg;
  }
  return variations;
}

// power of two strictly above every root magnitude (Cauchy bound)
BigRational dyadic_root_bound(const IntPolynomial& g) {
  BigInt maxc(0);
  for (int i = 0; i < g.degree(); ++i) maxc = std::max(maxc, BigInt(abs(g.coeff(i))));
  const BigInt lead = abs(g.leading());
  BigInt b(2);
  while (b * lead <= lead + maxc) b *= 2;
  return BigRational(b);
}

struct Isolator {
  const IntPolynomial& g;
  std::vector<RatPoly> chain;
  std::vector<RootInterval> found;
  int multiplicity;
  const IntPolynomial& original;

  int var(const BigRational& x) const { return sign_variations(chain, x); }

  // invariant: g(a) != 0, g(b) != 0, count = roots of g in (a, b)
  void bisect(const BigRational& a, const BigRational& b, int count) {
    if (count == 0) return;
    if (count == 1) {
      found.push_back(RootInterval::bracket(original, g, a, b, multiplicity));
      return;
    }
    BigRational mid = (a + b) / 2;
    if (g.sign_at(mid) == 0) {
      found.push_back(RootInterval::exact(original, mid, multiplicity));
      // carve out a punctured neighborhood of the rational root
      BigRational eps = (b - a) / 4;
      while (g.sign_at(mid - eps) == 0 || g.sign_at(mid + eps) == 0 ||
             var(mid - eps) - var(mid + eps) != 1)
        eps /= 2;
      bisect(a, mid - eps, var(a) - var(mid - eps));
      bisect(mid + eps, b, var(mid + eps) - var(b));
    } else {
      const int vm = var(mid);
      bisect(a, mid, var(a) - vm);
      bisect(mid, b, vm - var(b));
    }
  }
};

void isolate_squarefree(const IntPolynomial& g, int multiplicity, const IntPolynomial& original,
                        std::vector<RootInterval>& out) {
  if (g.degree() < 1) return;
  if (g.degree() == 1) {
    out.push_back(RootInterval::exact(original, make_rational(-g.coeff(0), g.coeff(1)),
                                      multiplicity));
    return;
  }
  Isolator iso{g, sturm_chain(g), {}, multiplicity, original};
  const BigRational bound = dyadic_root_bound(g);
  iso.bisect(-bound, bound, iso.var(-bound) - iso.var(bound));
  out.insert(out.end(), std::make_move_iterator(iso.found.begin()),
             std::make_move_iterator(iso.found.end()));
}

bool overlap(const RootInterval& a, const RootInterval& b) {
  if (a.is_exact() && b.is_exact()) return a.lo() == b.lo();
  if (a.is_exact()) return b.lo() < a.lo() && a.lo() < b.hi();
  if (b.is_exact()) return a.lo() < b.lo() && b.lo() < a.hi();
  return std::max(a.lo(), b.lo()) < std::min(a.hi(), b.hi());
}

}  // namespace

int count_roots_in(const IntPolynomial& g, const BigRational& a, const BigRational& b) {
  if (g.degree() < 0) throw std::domain_error("root count of zero polynomial");
  auto chain = sturm_chain(g);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p, const BigRational& max_width) {
  if (p.is_zero()) throw std::domain_error("root isolation of zero polynomial");
  std::vector<RootInterval> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    isolate_squarefree(factor, mult, p, out);

  // separate roots of different square-free factors
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      while (overlap(out[i], out[j])) {
        if (out[i].is_exact() && out[j].is_exact())
          throw std::logic_error("coincident roots from coprime factors");
        out[i].refine_step();
        out[j].refine_step();
      }

  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) {
    return compare_roots(a, b) == Ordering::Greater;
  });
  for (auto& r : out) r.refine_to(max_width);
  return out;
}

}  // namespace primegraph
