#include "primegraph/spectrum.hpp"

#include <sstream>
#include <stdexcept>

namespace primegraph {

IntPolynomial golden_quadratic() { return IntPolynomial({BigInt(-1), BigInt(1), BigInt(1)}); }

EigenDescriptor EigenDescriptor::rational(const BigRational& q) {
  EigenDescriptor d;
  d.kind = Kind::Rational;
  d.enclosure = RootInterval::exact(
      IntPolynomial({-BigInt(q.get_num()), BigInt(q.get_den())}), q);
  return d;
}

EigenDescriptor EigenDescriptor::surd(SurdBranch b, const BigRational& width) {
  EigenDescriptor d;
  d.kind = Kind::Surd;
  d.branch = b;
  auto roots = isolate_real_roots(golden_quadratic(), width);
  // descending: 1/phi first, -phi second
  d.enclosure = (b == SurdBranch::PhiInverse) ? roots[0] : roots[1];
  return d;
}

EigenDescriptor EigenDescriptor::poly_root(RootInterval r) {
  EigenDescriptor d;
  d.kind = Kind::PolyRoot;
  d.enclosure = std::move(r);
  return d;
}

const BigRational& EigenDescriptor::rational_value() const {
  if (kind != Kind::Rational) throw std::logic_error("descriptor is not rational");
  return enclosure.lo();
}

Ordering compare(const EigenDescriptor& a, const EigenDescriptor& b) {
  return compare_roots(a.enclosure, b.enclosure);
}

std::string EigenDescriptor::str(bool plain_ascii) const {
  switch (kind) {
    case Kind::Rational:
      return to_string(rational_value());
    case Kind::Surd:
      if (branch == SurdBranch::PhiInverse) return plain_ascii ? "phi^-1" : "φ⁻¹";
      return plain_ascii ? "-phi" : "−φ";
    case Kind::PolyRoot:
      return "root of " + enclosure.poly().str() + " in [" + to_string(enclosure.lo()) +
             ", " + to_string(enclosure.hi()) + "]";
  }
  return "";
}

namespace {

nlohmann::json poly_coeff_array(const IntPolynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

}  // namespace

nlohmann::json EigenDescriptor::to_json() const {
  switch (kind) {
    case Kind::Rational:
      return {{"kind", "rational"}, {"value", to_string(rational_value())}};
    case Kind::Surd:
      return {{"kind", "surd"},
              {"branch", branch == SurdBranch::PhiInverse ? "phi_inverse" : "minus_phi"},
              {"polynomial", poly_coeff_array(enclosure.poly())},
              {"lo", to_string(enclosure.lo())},
              {"hi", to_string(enclosure.hi())}};
    case Kind::PolyRoot:
      return {{"kind", enclosure.poly().degree() == 3 ? "cubic_root" : "root"},
              {"polynomial", poly_coeff_array(enclosure.poly())},
              {"lo", to_string(enclosure.lo())},
              {"hi", to_string(enclosure.hi())}};
  }
  return nullptr;
}

int SpectrumReport::total() const {
  int t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

int SpectrumReport::multiplicity_of(const BigRational& q) const {
  for (const auto& e : entries)
    if (e.value.is_rational() && e.value.rational_value() == q) return e.multiplicity;
  return 0;
}

RatInterval SpectrumReport::trace_enclosure() const {
  RatInterval sum = RatInterval::point(BigRational(0));
  for (const auto& e : entries)
    sum = sum + e.value.interval() * RatInterval::point(BigRational(e.multiplicity));
  return sum;
}

nlohmann::json SpectrumReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j = e.value.to_json();
    j["multiplicity"] = e.multiplicity;
    arr.push_back(std::move(j));
  }
  return {{"entries", std::move(arr)}, {"total", total()}};
}

std::string SpectrumReport::table(bool plain_ascii) const {
  std::ostringstream out;
  out << "eigenvalue  multiplicity\n";
  for (const auto& e : entries)
    out << e.value.str(plain_ascii) << "  x" << e.multiplicity << "\n";
  return out.str();
}

}  // namespace primegraph
