#include "troplift/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <set>

#include "troplift/errors.hpp"

namespace troplift {

FieldElement FieldElement::of(Rational v) {
  FieldElement e;
  e.backend_ = Backend::Rational;
  e.rat_ = std::move(v);
  return e;
}

FieldElement FieldElement::of(std::complex<double> v) {
  FieldElement e;
  e.backend_ = Backend::Complex;
  e.cx_ = v;
  return e;
}

const Rational& FieldElement::rat() const {
  if (backend_ != Backend::Rational) throw DomainError("not a rational value");
  return rat_;
}

std::complex<double> FieldElement::cx() const {
  if (backend_ != Backend::Complex) throw DomainError("not a complex value");
  return cx_;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.backend_ != b.backend_) return false;
  if (a.backend_ == Backend::Rational) return a.rat_ == b.rat_;
  return a.cx_.real() == b.cx_.real() && a.cx_.imag() == b.cx_.imag();
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  if (a.backend_ != b.backend_) return a.backend_ < b.backend_;
  if (a.backend_ == Backend::Rational) return a.rat_ < b.rat_;
  if (a.cx_.real() != b.cx_.real()) return a.cx_.real() < b.cx_.real();
  return a.cx_.imag() < b.cx_.imag();
}

Field::Field(Backend backend, ToleranceConfig tol) : backend_(backend), tol_(tol) {
  if (backend_ == Backend::Complex) {
    if (!(tol_.zero_tolerance > 0) || !(tol_.root_residual_tolerance > 0))
      throw DomainError("tolerances must be strictly positive");
    if (tol_.iteration_cap <= 0) throw DomainError("iteration cap must be positive");
  }
}

void Field::check(const FieldElement& a) const {
  if (a.backend() != backend_)
    throw DomainError("mixed coefficient backends");
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long v) const {
  if (backend_ == Backend::Rational) return FieldElement::of(Rational(v));
  return FieldElement::of(std::complex<double>(static_cast<double>(v), 0.0));
}

FieldElement Field::from_integer(const Int& v) const {
  if (backend_ == Backend::Rational) return FieldElement::of(Rational(v));
  return FieldElement::of(std::complex<double>(v.convert_to<double>(), 0.0));
}

FieldElement Field::from_rational(const Rational& v) const {
  if (backend_ == Backend::Rational) return FieldElement::of(v);
  return FieldElement::of(std::complex<double>(v.convert_to<double>(), 0.0));
}

FieldElement Field::from_complex(std::complex<double> v) const {
  if (backend_ != Backend::Complex)
    throw DomainError("complex literal under the rational backend");
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw DomainError("non-finite complex value");
  return FieldElement::of(v);
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  if (backend_ == Backend::Rational) return FieldElement::of(Rational(a.rat() + b.rat()));
  return FieldElement::of(a.cx() + b.cx());
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  if (backend_ == Backend::Rational) return FieldElement::of(Rational(a.rat() * b.rat()));
  return FieldElement::of(a.cx() * b.cx());
}

FieldElement Field::neg(const FieldElement& a) const {
  check(a);
  if (backend_ == Backend::Rational) return FieldElement::of(Rational(-a.rat()));
  return FieldElement::of(-a.cx());
}

FieldElement Field::inv(const FieldElement& a) const {
  check(a);
  if (is_zero(a)) throw DomainError("division by zero");
  if (backend_ == Backend::Rational) return FieldElement::of(Rational(1 / a.rat()));
  return FieldElement::of(1.0 / a.cx());
}

FieldElement Field::pow(const FieldElement& a, unsigned long e) const {
  check(a);
  FieldElement acc = one();
  FieldElement base = a;
  while (e != 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool Field::is_zero(const FieldElement& a) const {
  check(a);
  if (backend_ == Backend::Rational) return a.rat() == 0;
  return std::abs(a.cx()) <= tol_.zero_tolerance;
}

bool Field::eq(const FieldElement& a, const FieldElement& b) const {
  return is_zero(sub(a, b));
}

namespace {

std::string double_text(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace

std::string Field::to_string(const FieldElement& a) const {
  check(a);
  if (backend_ == Backend::Rational) return troplift::to_string(a.rat());
  std::complex<double> z = a.cx();
  if (z.imag() == 0.0) return double_text(z.real());
  std::string im;
  if (z.imag() == 1.0)
    im = "i";
  else if (z.imag() == -1.0)
    im = "-i";
  else
    im = double_text(z.imag()) + "i";
  if (z.real() == 0.0) return im;
  if (im[0] == '-') return double_text(z.real()) + im;
  return double_text(z.real()) + "+" + im;
}

// ---- root finding ----------------------------------------------------------

namespace {

// Positive divisors by trial division; inputs here come from principal
// coefficients of small instances.
std::vector<Int> divisors(Int v) {
  if (v < 0) v = -v;
  std::vector<Int> low, high;
  for (Int i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      low.push_back(i);
      if (i * i != v) high.push_back(v / i);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Rational eval_rational(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (y - r); callers only pass exact roots so the remainder is zero.
std::vector<Rational> deflate_rational(const std::vector<Rational>& coeffs, const Rational& r) {
  std::vector<Rational> q(coeffs.size() - 1);
  Rational carry = 0;
  for (std::size_t d = coeffs.size(); d-- > 1;) {
    carry = coeffs[d] + r * carry;
    q[d - 1] = carry;
  }
  return q;
}

std::complex<double> eval_complex(const std::vector<std::complex<double>>& coeffs,
                                  std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

std::vector<FieldElement> Field::roots_univariate(const std::vector<FieldElement>& coeffs) const {
  for (const auto& c : coeffs) check(c);
  std::size_t deg = coeffs.size();
  while (deg > 0 && is_zero(coeffs[deg - 1])) --deg;
  if (deg == 0) throw DomainError("root finding on the zero polynomial");
  if (deg == 1) throw DomainError("root finding needs degree at least 1");
  std::size_t low = 0;
  while (low < deg - 1 && is_zero(coeffs[low])) ++low;  // y^low factors out

  std::vector<FieldElement> roots(low, zero());

  if (backend_ == Backend::Rational) {
    std::vector<Rational> work(deg - low);
    for (std::size_t k = low; k < deg; ++k) work[k - low] = coeffs[k].rat();
    if (work.size() == 2) {
      // Deep lifts solve long runs of linear residuals whose coefficients
      // grow large; the divisor search is unusable there and unnecessary.
      roots.push_back(FieldElement::of(Rational(-work[0] / work[1])));
    } else if (work.size() >= 3) {
      // Primitive integer model for the divisor search.
      Int scale = 1;
      for (const auto& c : work) scale = lcm(scale, denominator(c));
      std::vector<Int> ints(work.size());
      for (std::size_t k = 0; k < work.size(); ++k)
        ints[k] = numerator(Rational(work[k] * scale));
      Int content = 0;
      for (const auto& c : ints) content = gcd(content, c);
      std::set<Rational> candidates;
      for (const auto& p : divisors(ints.front() / content))
        for (const auto& q : divisors(ints.back() / content)) {
          candidates.insert(Rational(p, q));
          candidates.insert(Rational(-p, q));
        }
      for (const auto& r : candidates) {
        while (work.size() >= 2 && eval_rational(work, r) == 0) {
          roots.push_back(FieldElement::of(r));
          work = deflate_rational(work, r);
        }
      }
    }
  } else {
    std::vector<std::complex<double>> p(deg - low);
    double max_coeff = 0;
    for (std::size_t k = low; k < deg; ++k) {
      p[k - low] = coeffs[k].cx();
      max_coeff = std::max(max_coeff, std::abs(p[k - low]));
    }
    std::size_t d = p.size() - 1;
    if (d >= 1) {
      std::vector<std::complex<double>> monic(p);
      for (auto& c : monic) c /= p.back();
      std::vector<std::complex<double>> z(d);
      const std::complex<double> seed(0.4, 0.9);
      std::complex<double> acc = 1;
      for (std::size_t k = 0; k < d; ++k) {
        acc *= seed;
        z[k] = acc;
      }
      const double bound = tol_.root_residual_tolerance * std::max(max_coeff, 1e-300);
      bool converged = false;
      for (int iter = 0; iter < tol_.iteration_cap && !converged; ++iter) {
        for (std::size_t k = 0; k < d; ++k) {
          std::complex<double> denom = monic.back();
          for (std::size_t j = 0; j < d; ++j) {
            if (j == k) continue;
            denom *= z[k] - z[j];
          }
          if (std::abs(denom) < 1e-300)
            z[k] += std::complex<double>(1e-6 * static_cast<double>(k + 1), 1e-6);
          else
            z[k] -= eval_complex(monic, z[k]) / denom;
        }
        converged = true;
        for (std::size_t k = 0; k < d; ++k)
          if (std::abs(eval_complex(p, z[k])) > bound) {
            converged = false;
            break;
          }
      }
      if (!converged)
        throw NonConvergence("root iteration did not meet the residual bound within the cap");
      for (const auto& r : z) roots.push_back(FieldElement::of(r));
    }
  }

  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---- literals ---------------------------------------------------------------

namespace {

// Decimal or rational literal starting at pos; exact value, advanced position.
Rational scan_number(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError("expected a number", start);
  Int num(text.substr(start, pos - start));
  Int den = 1;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t fstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == fstart) throw ParseError("expected digits after decimal point", fstart);
    for (std::size_t k = fstart; k < pos; ++k) {
      num = num * 10 + (text[k] - '0');
      den *= 10;
    }
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart) throw ParseError("expected denominator digits", dstart);
    den = Int(text.substr(dstart, pos - dstart));
    if (den == 0) throw ParseError("zero denominator", dstart);
  }
  return Rational(num, den);
}

}  // namespace

FieldElement field_element_from_string(const Field& K, const std::string& text) {
  if (K.backend() == Backend::Rational) return K.from_rational(rational_from_string(text));

  // complex: [sign] part [sign part], each part a number with optional i suffix
  double re = 0, im = 0;
  bool have_re = false, have_im = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    double sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected + or - between complex parts", pos);
    }
    double mag;
    if (pos < text.size() && text[pos] == 'i') {
      mag = 1;
    } else {
      mag = scan_number(text, pos).convert_to<double>();
    }
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      if (have_im) throw ParseError("duplicate imaginary part", pos - 1);
      im = sign * mag;
      have_im = true;
    } else {
      if (have_re || have_im) throw ParseError("real part must come first", pos);
      re = sign * mag;
      have_re = true;
    }
  }
  if (!have_re && !have_im) throw ParseError("empty complex literal", 0);
  return K.from_complex(std::complex<double>(re, im));
}

}  // namespace troplift
