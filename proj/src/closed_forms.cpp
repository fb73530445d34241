#include "primegraph/closed_forms.hpp"

#include <functional>

#include "primegraph/graph.hpp"
#include "primegraph/linalg.hpp"

namespace primegraph {

namespace {

void require_bridge_params(int m, int n) {
  if (n < 1 || m < n) throw std::invalid_argument("bridge parameters require m >= n >= 1");
}

}  // namespace

BigInt det_bridge_formula(int m, int n) {
  require_bridge_params(m, n);
  return alt_sign(m + n - 1) * BigInt(3 - (m + n));
}

std::optional<BigInt> det_bridge_complement_formula(int m, int n) {
  require_bridge_params(m, n);
  if (m + n != 4) return BigInt(0);
  if (m == 2 && n == 2) return BigInt(1);
  return std::nullopt;  // (3,1): the statement's case split does not name it
}

BigInt det_suspension_formula(int m, int n) {
  require_bridge_params(m, n);
  if (m + n < 4)
    throw std::invalid_argument(
        "suspension determinant formula needs m+n >= 4 (its derivation divides by "
        "det A(B(m,n)), which vanishes at m+n = 3)");
  return alt_sign(m + n) * BigInt(4 * m * n - 5 * (m + n) + 6);
}

std::optional<BigRational> bridge_inverse_entry(int m, int n, int i, int j) {
  require_bridge_params(m, n);
  if (m + n == 3) throw std::invalid_argument("A(B(m,n)) is singular when m+n = 3");
  if (i < 1 || j < 1 || i > m + n || j > m + n)
    throw std::out_of_range("inverse entry index out of range");

  const auto first_block = [&](int k) { return k <= m - 1; };
  const auto second_block = [&](int k) { return k >= m + 2; };
  const bool i_cov = first_block(i) || second_block(i);
  const bool j_cov = first_block(j) || second_block(j);
  if (!i_cov || !j_cov) return std::nullopt;  // bridge rows/columns m, m+1

  const BigInt den(m + n - 3);
  if (i == j) return make_rational(BigInt(-(m + n - 4)), den);
  if (first_block(i) == first_block(j)) return make_rational(BigInt(1), den);
  return make_rational(BigInt(-1), den);
}

IntPolynomial FactoredPoly::expand() const {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& [f, e] : factors) p = p * f.pow(e);
  return p;
}

std::string FactoredPoly::str(const std::string& var) const {
  std::string out;
  for (const auto& [f, e] : factors) {
    out += "(" + f.str(var) + ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

IntPolynomial bridge_cubic(int m) {
  return IntPolynomial({BigInt(-2), BigInt(2 - 2 * m), BigInt(3 - m), BigInt(1)});
}

IntPolynomial reseminant_cubic(int n) {
  return IntPolynomial({BigInt(3 * n + 2), BigInt(-(n + 3)), BigInt(-(n + 1)), BigInt(1)});
}

const IntPolynomial kXPlusOne({BigInt(1), BigInt(1)});

}  // namespace

FactoredPoly charpoly_bridge_formula(int m) {
  if (m <= 2) throw std::invalid_argument("bridge characteristic polynomial requires m > 2");
  FactoredPoly p;
  p.factors.emplace_back(bridge_cubic(m), 1);
  p.factors.emplace_back(IntPolynomial::x_minus(BigInt(m - 2)), 1);
  p.factors.emplace_back(kXPlusOne, 2 * m - 5);
  return p;
}

FactoredPoly charpoly_reseminant_formula(int n) {
  if (n < 0) throw std::invalid_argument("reseminant index must be nonnegative");
  FactoredPoly p;
  p.factors.emplace_back(reseminant_cubic(n), 1);
  if (n > 0) p.factors.emplace_back(kXPlusOne, n);
  p.factors.emplace_back(golden_quadratic(), 1);
  return p;
}

namespace {

void verify_strictly_descending(const SpectrumReport& rep, const std::string& what) {
  for (size_t i = 0; i + 1 < rep.entries.size(); ++i) {
    if (compare(rep.entries[i].value, rep.entries[i + 1].value) != Ordering::Greater)
      throw OrderingViolation(what + ": certified intervals contradict the claimed order at "
                                     "position " + std::to_string(i));
  }
}

std::vector<RootInterval> three_real_roots(const IntPolynomial& cubic, const BigRational& width,
                                           const std::string& what) {
  auto roots = isolate_real_roots(cubic, width);
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity();
  if (roots.size() != 3 || total != 3)
    throw OrderingViolation(what + ": cubic does not have three simple real roots");
  return roots;
}

}  // namespace

SpectrumReport spectrum_bridge(int m, const BigRational& width) {
  if (m <= 2) throw std::invalid_argument("bridge spectrum requires m > 2");
  auto roots = three_real_roots(bridge_cubic(m), width, "Spec(B(m,m-1))");
  SpectrumReport rep;
  rep.entries = {
      {EigenDescriptor::poly_root(roots[0]), 1},
      {EigenDescriptor::rational(BigRational(m - 2)), 1},
      {EigenDescriptor::poly_root(roots[1]), 1},
      {EigenDescriptor::rational(BigRational(-1)), 2 * m - 5},
      {EigenDescriptor::poly_root(roots[2]), 1},
  };
  verify_strictly_descending(rep, "Spec(B(m,m-1))");
  // the claimed chain also pins theta2 below zero
  if (compare_root_to_rational(roots[1], BigRational(0)) != Ordering::Less)
    throw OrderingViolation("Spec(B(m,m-1)): theta2 is not negative");
  return rep;
}

SpectrumReport spectrum_reseminant(int n, const BigRational& width) {
  if (n < 0) throw std::invalid_argument("reseminant index must be nonnegative");
  SpectrumReport rep;
  if (n == 0) {
    rep.entries = {
        {EigenDescriptor::rational(BigRational(2)), 1},
        {EigenDescriptor::surd(SurdBranch::PhiInverse, width), 2},
        {EigenDescriptor::surd(SurdBranch::MinusPhi, width), 2},
    };
  } else {
    auto roots = three_real_roots(reseminant_cubic(n), width, "Spec(R~_n)");
    rep.entries = {
        {EigenDescriptor::poly_root(roots[0]), 1},
        {EigenDescriptor::poly_root(roots[1]), 1},
        {EigenDescriptor::surd(SurdBranch::PhiInverse, width), 1},
        {EigenDescriptor::rational(BigRational(-1)), n},
        {EigenDescriptor::surd(SurdBranch::MinusPhi, width), 1},
        {EigenDescriptor::poly_root(roots[2]), 1},
    };
  }
  verify_strictly_descending(rep, "Spec(R~_n)");
  return rep;
}

bool has_golden_ratio_eigenvalues(const IntPolynomial& charpoly) {
  return poly_divides(golden_quadratic(), charpoly);
}

bool golden_ratio_membership(int n) {
  return has_golden_ratio_eigenvalues(char_poly(adjacency_matrix(reseminant_tilde(n))));
}

bool BoundReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

// Decide lob <= f(root) <= hib by refining the root enclosure until the
// image interval lands inside or outside. Rational roots are exact, so
// boundary equalities terminate too.
BoundCheck check_between(const std::string& name, RootInterval root,
                         const std::function<RatInterval(const RootInterval&)>& f,
                         const BigRational& lob, const BigRational& hib) {
  for (int iter = 0; iter < 4096; ++iter) {
    RatInterval v = f(root);
    if (v.certainly_ge(lob) && v.certainly_le(hib))
      return {name, true, v, ""};
    if (v.certainly_lt(lob) || v.certainly_gt(hib))
      return {name, false, v, "certified outside [" + to_string(lob) + ", " + to_string(hib) + "]"};
    if (root.is_exact()) break;
    root.refine_step();
  }
  return {name, false, f(root), "undecided after refinement"};
}

RatInterval as_interval(const RootInterval& r) { return RatInterval::of(r); }

// refine until the enclosure is strictly positive (callers know the root is)
void make_positive(RootInterval& r) {
  while (!r.is_exact() && r.lo() <= 0) r.refine_step();
}

}  // namespace

BoundReport eigenvalue_bound_checks_bridge(int m, int n) {
  require_bridge_params(m, n);
  BoundReport rep{"bridge(" + std::to_string(m) + "," + std::to_string(n) + ")", {}};

  // lambda1 from the exact characteristic polynomial of the graph itself
  auto roots = isolate_real_roots(char_poly(adjacency_matrix(bridge_graph({m, n}))), pow2_inv(30));
  const RootInterval& lambda1 = roots.front();
  rep.checks.push_back(check_between("lambda1 in [m-1, m]", lambda1, as_interval,
                                     BigRational(m - 1), BigRational(m)));
  if (m == n)
    rep.checks.push_back(check_between("lambda1 >= m - (1 - 1/m)", lambda1, as_interval,
                                       make_rational(BigInt(m) * m - m + 1, BigInt(m)),
                                       BigRational(m)));

  if (n == m - 1 && m > 2) {
    // theta2+theta3 and theta2*theta3 through the cubic's symmetric functions
    RootInterval theta1 = isolate_real_roots(bridge_cubic(m), pow2_inv(30)).front();
    make_positive(theta1);
    const BigRational sum_all(m - 3);  // theta1+theta2+theta3
    const BigRational prod_all(2);     // theta1*theta2*theta3
    rep.checks.push_back(check_between(
        "theta2+theta3 in [-3, -2]", theta1,
        [&](const RootInterval& t) { return RatInterval::point(sum_all) - RatInterval::of(t); },
        BigRational(-3), BigRational(-2)));
    rep.checks.push_back(check_between(
        "theta2*theta3 in [2/m, 2/(m-1)]", theta1,
        [&](const RootInterval& t) { return RatInterval::point(prod_all) / RatInterval::of(t); },
        make_rational(2, m), make_rational(2, m - 1)));
  }
  return rep;
}

BoundReport eigenvalue_bound_checks_reseminant(int n) {
  if (n < 0) throw std::invalid_argument("reseminant index must be nonnegative");
  BoundReport rep{"reseminant(" + std::to_string(n) + ")", {}};

  RootInterval theta1 = isolate_real_roots(reseminant_cubic(n), pow2_inv(30)).front();
  make_positive(theta1);
  rep.checks.push_back(check_between(
      "lambda1 in [(n+1)(n+4)/(n+3), n+2]", theta1, as_interval,
      make_rational(BigInt(n + 1) * (n + 4), BigInt(n + 3)), BigRational(n + 2)));

  const BigRational sum_all(n + 1);
  const BigRational prod_all(-(3 * n + 2));
  rep.checks.push_back(check_between(
      "theta2+theta3 in [-1, -(n+1)/(n+3)]", theta1,
      [&](const RootInterval& t) { return RatInterval::point(sum_all) - RatInterval::of(t); },
      BigRational(-1), make_rational(BigInt(-(n + 1)), BigInt(n + 3))));
  rep.checks.push_back(check_between(
      "theta2*theta3 in [-(3n+2)(n+3)/((n+1)(n+4)), -(3n+2)/(n+2)]", theta1,
      [&](const RootInterval& t) { return RatInterval::point(prod_all) / RatInterval::of(t); },
      make_rational(BigInt(-(3 * n + 2)) * (n + 3), BigInt(n + 1) * (n + 4)),
      make_rational(BigInt(-(3 * n + 2)), BigInt(n + 2))));
  return rep;
}

BoundReport eigenvalue_bound_checks(const FamilySpec& family) {
  if (family.kind == FamilySpec::Kind::Bridge)
    return eigenvalue_bound_checks_bridge(family.m, family.n);
  return eigenvalue_bound_checks_reseminant(family.n);
}

}  // namespace primegraph
