#pragma once

// Coefficient arithmetic behind a backend switch: exact rationals, or complex
// doubles with tolerance-based zero tests and equality. A Field carries the
// backend choice plus tolerances; FieldElement values are tagged with the
// backend they belong to and mixing backends is an error.

#include <complex>
#include <string>
#include <vector>

#include "troplift/rational.hpp"

namespace troplift {

enum class Backend { Rational, Complex };

struct ToleranceConfig {
  double zero_tolerance = 1e-10;          // |z| below this counts as zero
  double root_residual_tolerance = 1e-8;  // acceptance bound for numeric roots
  int iteration_cap = 1000;               // simultaneous-iteration cap
};

class FieldElement {
 public:
  FieldElement() = default;  // rational zero
  static FieldElement of(Rational v);
  static FieldElement of(std::complex<double> v);

  Backend backend() const { return backend_; }
  const Rational& rat() const;
  std::complex<double> cx() const;

  // Structural equality / canonical order (no tolerance; use Field::eq for
  // backend semantics). Complex values order by (re, im).
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  friend bool operator<(const FieldElement& a, const FieldElement& b);

 private:
  Backend backend_ = Backend::Rational;
  Rational rat_{};
  std::complex<double> cx_{};
};

class Field {
 public:
  explicit Field(Backend backend = Backend::Rational, ToleranceConfig tol = ToleranceConfig{});

  Backend backend() const { return backend_; }
  const ToleranceConfig& tolerances() const { return tol_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long v) const;
  FieldElement from_integer(const Int& v) const;
  FieldElement from_rational(const Rational& v) const;
  FieldElement from_complex(std::complex<double> v) const;  // complex backend only

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;  // DomainError on zero
  FieldElement pow(const FieldElement& a, unsigned long e) const;

  bool is_zero(const FieldElement& a) const;
  bool eq(const FieldElement& a, const FieldElement& b) const;

  std::string to_string(const FieldElement& a) const;

  // Roots of sum_k coeffs[k] y^k (ascending, degree >= 1 after trimming).
  // Rational backend: exactly the rational roots, with multiplicity -- a
  // partial root set by documented contract. Complex backend: all deg-many
  // roots by simultaneous iteration, each accepted only when
  // |p(root)| <= root_residual_tolerance * max|coeff|.
  // The result is sorted canonically (rationals ascending, complex by (re, im)).
  std::vector<FieldElement> roots_univariate(const std::vector<FieldElement>& coeffs) const;

 private:
  void check(const FieldElement& a) const;

  Backend backend_;
  ToleranceConfig tol_;
};

// Flag-style literals: rational "p/q" / decimals; complex also "a+bi", "2i", "-i".
FieldElement field_element_from_string(const Field& K, const std::string& text);

}  // namespace troplift
