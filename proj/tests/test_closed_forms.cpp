#include <doctest.h>

#include "primegraph/closed_forms.hpp"
#include "primegraph/graph.hpp"
#include "primegraph/linalg.hpp"

using namespace primegraph;

namespace {

const BigRational kWidth = pow2_inv(30);

IntPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  for (long c : coeffs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("det_bridge_formula") {
  CHECK(det_bridge_formula(4, 3) == BigInt(-4));
  CHECK(det_bridge_formula(1, 1) == BigInt(-1));
  CHECK(det_bridge_formula(2, 2) == BigInt(1));
  CHECK_THROWS_AS(det_bridge_formula(2, 3), std::invalid_argument);
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; n <= m; ++n)
      CHECK(det_bridge_formula(m, n) == det_bareiss(adjacency_matrix(bridge_graph({m, n}))));
}

TEST_CASE("det equality corollary is an iff") {
  for (int s1 = 2; s1 <= 24; ++s1)
    for (int s2 = 2; s2 <= 24; ++s2) {
      const bool equal = det_bridge_formula(s1 - 1, 1) == det_bridge_formula(s2 - 1, 1);
      CHECK(equal == (s1 == s2));
    }
}

TEST_CASE("det_bridge_complement_formula") {
  CHECK(det_bridge_complement_formula(5, 3) == BigInt(0));
  CHECK(det_bridge_complement_formula(2, 2) == BigInt(1));
  CHECK(det_bridge_complement_formula(2, 1) == BigInt(0));
  CHECK_FALSE(det_bridge_complement_formula(3, 1).has_value());  // statement is silent
  for (int m = 1; m <= 7; ++m)
    for (int n = 1; n <= m; ++n) {
      const auto f = det_bridge_complement_formula(m, n);
      const BigInt oracle = det_bareiss(adjacency_matrix(complement(bridge_graph({m, n}))));
      if (f) CHECK(*f == oracle);
      else CHECK(oracle == BigInt(0));  // the (3,1) gap, pinned by oracle
    }
}

TEST_CASE("det_suspension_formula") {
  CHECK(det_suspension_formula(4, 3) == BigInt(-19));
  CHECK(det_suspension_formula(2, 2) == BigInt(2));
  CHECK(det_suspension_formula(3, 2) == BigInt(-5));
  CHECK_THROWS_AS(det_suspension_formula(2, 1), std::invalid_argument);  // m+n = 3
  CHECK_THROWS_AS(det_suspension_formula(1, 1), std::invalid_argument);
  for (int m = 2; m <= 7; ++m)
    for (int n = 1; n <= m && m + n <= 14; ++n)
      if (m + n >= 4)
        CHECK(det_suspension_formula(m, n) ==
              det_bareiss(adjacency_matrix(suspension_graph({m, n}))));
}

TEST_CASE("bridge_inverse_entry") {
  CHECK(bridge_inverse_entry(4, 3, 1, 1) == make_rational(-3, 4));
  CHECK(bridge_inverse_entry(4, 3, 1, 2) == make_rational(1, 4));
  CHECK(bridge_inverse_entry(4, 3, 6, 1) == make_rational(-1, 4));
  CHECK(bridge_inverse_entry(4, 3, 6, 7) == make_rational(1, 4));
  // bridge rows/columns are uncovered
  CHECK_FALSE(bridge_inverse_entry(4, 3, 4, 4).has_value());
  CHECK_FALSE(bridge_inverse_entry(4, 3, 5, 2).has_value());
  CHECK_FALSE(bridge_inverse_entry(4, 3, 1, 5).has_value());
  CHECK_THROWS_AS(bridge_inverse_entry(2, 1, 1, 1), std::invalid_argument);  // singular
  CHECK_THROWS_AS(bridge_inverse_entry(4, 3, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(bridge_inverse_entry(4, 3, 1, 8), std::out_of_range);

  // every covered pair matches the exact inverse; uncovered count is 4(m+n)-4
  for (int m = 2; m <= 6; ++m)
    for (int n = 1; n <= m; ++n) {
      if (m + n < 5) continue;
      const RatMatrix inv = inverse(adjacency_matrix(bridge_graph({m, n})));
      int uncovered = 0;
      for (int i = 1; i <= m + n; ++i)
        for (int j = 1; j <= m + n; ++j) {
          const auto e = bridge_inverse_entry(m, n, i, j);
          if (!e) {
            ++uncovered;
            continue;
          }
          CHECK(inv.at(i - 1, j - 1) == *e);
        }
      CHECK(uncovered == 4 * (m + n) - 4);
    }
}

TEST_CASE("charpoly_bridge_formula") {
  CHECK(charpoly_bridge_formula(3).str() == "(x^3 - 4x - 2)(x - 1)(x + 1)");
  CHECK(charpoly_bridge_formula(4).str() == "(x^3 - x^2 - 6x - 2)(x - 2)(x + 1)^3");
  CHECK_THROWS_AS(charpoly_bridge_formula(2), std::invalid_argument);
  for (int m = 3; m <= 10; ++m) {
    const FactoredPoly f = charpoly_bridge_formula(m);
    CHECK(f.expand().degree() == 2 * m - 1);
    CHECK(f.expand() == char_poly(adjacency_matrix(bridge_graph({m, m - 1}))));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].first.degree() == 3);
  }
}

TEST_CASE("charpoly_reseminant_formula") {
  // n = 0 collapses to (x-2)(x^2+x-1)^2
  CHECK(charpoly_reseminant_formula(0).expand() ==
        poly({-2, 1}) * poly({-1, 1, 1}).pow(2));
  CHECK(charpoly_reseminant_formula(2).str() == "(x^3 - 3x^2 - 5x + 8)(x + 1)^2(x^2 + x - 1)");
  CHECK_THROWS_AS(charpoly_reseminant_formula(-1), std::invalid_argument);
  for (int n = 0; n <= 10; ++n) {
    const FactoredPoly f = charpoly_reseminant_formula(n);
    CHECK(f.expand().degree() == n + 5);
    CHECK(f.expand() == char_poly(adjacency_matrix(reseminant_tilde(n))));
  }
}

TEST_CASE("spectrum_bridge") {
  const SpectrumReport rep3 = spectrum_bridge(3, kWidth);
  CHECK(rep3.total() == 5);
  CHECK(rep3.multiplicity_of(BigRational(-1)) == 1);
  CHECK(compare_root_to_rational(rep3.entries[0].value.enclosure, BigRational(2)) ==
        Ordering::Greater);
  CHECK(compare_root_to_rational(rep3.entries[0].value.enclosure, BigRational(3)) ==
        Ordering::Less);

  const SpectrumReport rep4 = spectrum_bridge(4, kWidth);
  CHECK(rep4.multiplicity_of(BigRational(-1)) == 3);
  CHECK(rep4.entries[1].value.rational_value() == BigRational(2));  // m - 2

  for (int m = 3; m <= 9; ++m) {
    const SpectrumReport rep = spectrum_bridge(m, kWidth);
    CHECK(rep.total() == 2 * m - 1);
    const RatInterval trace = rep.trace_enclosure();
    CHECK(trace.lo <= 0);
    CHECK(trace.hi >= 0);
  }
  CHECK_THROWS_AS(spectrum_bridge(2, kWidth), std::invalid_argument);
}

TEST_CASE("spectrum_reseminant") {
  const SpectrumReport rep0 = spectrum_reseminant(0, kWidth);
  REQUIRE(rep0.entries.size() == 3);
  CHECK(rep0.entries[0].value.rational_value() == BigRational(2));
  CHECK(rep0.entries[1].multiplicity == 2);
  CHECK(rep0.entries[2].multiplicity == 2);
  CHECK(rep0.entries[1].value.kind == EigenDescriptor::Kind::Surd);
  CHECK(rep0.total() == 5);

  const SpectrumReport rep1 = spectrum_reseminant(1, kWidth);
  REQUIRE(rep1.entries.size() == 6);
  CHECK(rep1.multiplicity_of(BigRational(-1)) == 1);
  // theta2 = 1 exactly at n = 1
  CHECK(rep1.entries[1].value.enclosure.is_exact());
  CHECK(rep1.entries[1].value.enclosure.lo() == BigRational(1));

  // theta1 within the stated lambda1 bounds at n = 3: [14/3, 5]
  const SpectrumReport rep3 = spectrum_reseminant(3, kWidth);
  CHECK(compare_root_to_rational(rep3.entries[0].value.enclosure, make_rational(14, 3)) ==
        Ordering::Greater);
  CHECK(compare_root_to_rational(rep3.entries[0].value.enclosure, BigRational(5)) ==
        Ordering::Less);

  for (int n = 1; n <= 9; ++n) {
    const SpectrumReport rep = spectrum_reseminant(n, kWidth);
    CHECK(rep.total() == n + 5);
    CHECK(rep.multiplicity_of(BigRational(-1)) == n);
    const RatInterval trace = rep.trace_enclosure();
    CHECK(trace.lo <= 0);
    CHECK(trace.hi >= 0);
  }
  CHECK_THROWS_AS(spectrum_reseminant(-1, kWidth), std::invalid_argument);
}

TEST_CASE("golden ratio membership") {
  for (int n = 0; n <= 8; ++n) CHECK(golden_ratio_membership(n));
  CHECK(divisor_multiplicity(golden_quadratic(),
                             char_poly(adjacency_matrix(cycle5()))) == 2);
  CHECK_FALSE(has_golden_ratio_eigenvalues(char_poly(adjacency_matrix(complete_graph(4)))));
  CHECK(char_poly(adjacency_matrix(complete_graph(4))) ==
        poly({-3, 1}) * poly({1, 1}).pow(3));
}

TEST_CASE("eigenvalue bound checks: bridge") {
  // lambda1 within [m-1, m], e.g. B(5,4) in [4,5]
  const BoundReport b54 = eigenvalue_bound_checks_bridge(5, 4);
  CHECK(b54.all_pass());
  // m = n refinement present
  const BoundReport b44 = eigenvalue_bound_checks_bridge(4, 4);
  CHECK(b44.all_pass());
  REQUIRE(b44.checks.size() == 2);
  CHECK(b44.checks[1].name.find("1/m") != std::string::npos);
  // theta sum/product bounds, e.g. B(3,2): product in [2/3, 1]
  const BoundReport b32 = eigenvalue_bound_checks_bridge(3, 2);
  CHECK(b32.all_pass());
  REQUIRE(b32.checks.size() == 3);
  CHECK(b32.checks[2].certified.lo >= make_rational(2, 3));
  CHECK(b32.checks[2].certified.hi <= BigRational(1));
  for (int m = 3; m <= 8; ++m) CHECK(eigenvalue_bound_checks_bridge(m, m - 1).all_pass());
}

TEST_CASE("eigenvalue bound checks: reseminant") {
  for (int n = 0; n <= 8; ++n) {
    const BoundReport rep = eigenvalue_bound_checks_reseminant(n);
    CHECK(rep.all_pass());
  }
  // theta2+theta3 for n = 2 sits inside [-1, -3/5]
  const BoundReport r2 = eigenvalue_bound_checks_reseminant(2);
  REQUIRE(r2.checks.size() == 3);
  CHECK(r2.checks[1].certified.lo >= BigRational(-1));
  CHECK(r2.checks[1].certified.hi <= make_rational(-3, 5));
  // boundary equalities at n = 0 decide exactly
  const BoundReport r0 = eigenvalue_bound_checks_reseminant(0);
  CHECK(r0.checks[1].certified.is_point());
  CHECK(r0.checks[1].certified.lo == BigRational(-1));

  const BoundReport via_spec =
      eigenvalue_bound_checks({FamilySpec::Kind::Reseminant, 0, 2});
  CHECK(via_spec.all_pass());
}

TEST_CASE("quartic symmetric-function identity for general bridges") {
  const IntPolynomial x_plus_1 = poly({1, 1});
  for (int m = 3; m <= 6; ++m)
    for (int n = 2; n <= m; ++n) {
      const IntPolynomial cp = char_poly(adjacency_matrix(bridge_graph({m, n})));
      const auto quartic = divide_exact(cp, x_plus_1.pow(m + n - 4));
      REQUIRE(quartic.has_value());
      CHECK(quartic->coeff(0) == BigInt(m + n - 3));   // product of the lambda*
      CHECK(-quartic->coeff(3) == BigInt(m + n - 4));  // their sum
      CHECK(quartic->coeff(0) + quartic->coeff(3) == BigInt(1));
    }
}
