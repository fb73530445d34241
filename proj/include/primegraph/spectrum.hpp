#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "primegraph/interval.hpp"
#include "primegraph/roots.hpp"

namespace primegraph {

// x^2 + x - 1, whose roots are 1/phi and -phi (phi the golden ratio)
IntPolynomial golden_quadratic();

enum class SurdBranch { PhiInverse, MinusPhi };

// One exact eigenvalue: a rational, a golden-ratio surd, or an isolated real
// root of an explicit integer polynomial. All kinds carry a RootInterval so
// comparisons are uniform and exact.
struct EigenDescriptor {
  enum class Kind { Rational, Surd, PolyRoot };

  Kind kind = Kind::Rational;
  SurdBranch branch = SurdBranch::PhiInverse;  // Kind::Surd only
  RootInterval enclosure;

  static EigenDescriptor rational(const BigRational& q);
  static EigenDescriptor surd(SurdBranch b, const BigRational& width);
  static EigenDescriptor poly_root(RootInterval r);

  bool is_rational() const { return kind == Kind::Rational; }
  const BigRational& rational_value() const;  // Kind::Rational only
  RatInterval interval() const { return RatInterval::of(enclosure); }
  void refine_to(const BigRational& width) { enclosure.refine_to(width); }

  std::string str(bool plain_ascii = true) const;
  nlohmann::json to_json() const;
};

Ordering compare(const EigenDescriptor& a, const EigenDescriptor& b);

struct SpectrumEntry {
  EigenDescriptor value;
  int multiplicity = 1;
};

// Multiset of eigenvalues, descriptors strictly descending; sum of
// multiplicities equals the vertex count.
struct SpectrumReport {
  std::vector<SpectrumEntry> entries;

  int total() const;
  // multiplicity of an exact rational eigenvalue (0 when absent)
  int multiplicity_of(const BigRational& q) const;
  // enclosure of sum(value * multiplicity); contains 0 for adjacency spectra
  RatInterval trace_enclosure() const;
  nlohmann::json to_json() const;
  std::string table(bool plain_ascii = true) const;
};

}  // namespace primegraph
