#include "troplift/rational.hpp"

#include <cctype>
#include <cstddef>

#include "troplift/errors.hpp"

namespace troplift {

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

namespace {

std::size_t scan_digits(const std::string& text, std::size_t pos, std::size_t start) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError("expected digits in rational literal", start);
  return pos;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t start = pos;
  pos = scan_digits(text, pos, start);
  Int num(text.substr(start, pos - start));
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    pos = scan_digits(text, pos, dstart);
    den = Int(text.substr(dstart, pos - dstart));
    if (den == 0) throw ParseError("zero denominator in rational literal", dstart);
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t fstart = pos;
    pos = scan_digits(text, pos, fstart);
    for (std::size_t k = fstart; k < pos; ++k) {
      num = num * 10 + (text[k] - '0');
      den *= 10;
    }
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational literal", pos);
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

}  // namespace troplift
