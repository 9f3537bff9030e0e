#include "troplift/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "troplift/errors.hpp"

namespace troplift {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i < text.size() && text[i] == '.') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw ParseError("digit expected after decimal point", i);
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      }
      out.push_back({Token::Kind::Number, text.substr(start, i - start), start});
      continue;
    }
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({Token::Kind::Ident, text.substr(start, i - start), start});
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Kind::Plus; break;
      case '-': kind = Token::Kind::Minus; break;
      case '*': kind = Token::Kind::Star; break;
      case '/': kind = Token::Kind::Slash; break;
      case '^': kind = Token::Kind::Caret; break;
      case '(': kind = Token::Kind::LParen; break;
      case ')': kind = Token::Kind::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, text.substr(start, 1), start});
    ++i;
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

/* Recursive descent over the token list. Every sub-expression is a SeriesPoly
   in the full variable set so exponent vectors line up; constants and t-powers
   are polynomials with a single constant term. */
class Parser {
 public:
  Parser(const Field& K, std::vector<Token> tokens, std::vector<std::string> variables)
      : K_(K), tokens_(std::move(tokens)), variables_(std::move(variables)) {
    for (std::size_t v = 0; v < variables_.size(); ++v) index_[variables_[v]] = v;
  }

  SeriesPoly run() {
    SeriesPoly f = expression();
    expect(Token::Kind::End, "end of input");
    return f;
  }

  const std::vector<std::string>& variables() const { return variables_; }

 private:
  const Field& K_;
  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  std::vector<std::string> variables_;
  std::map<std::string, std::size_t> index_;

  const Token& peek() const { return tokens_[cursor_]; }
  Token take() { return tokens_[cursor_++]; }

  bool accept(Token::Kind kind) {
    if (peek().kind != kind) return false;
    ++cursor_;
    return true;
  }

  void expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind)
      throw ParseError("expected " + what, peek().pos);
    ++cursor_;
  }

  SeriesPoly constant(const PuiseuxSeries& c) {
    SeriesPoly f;
    f.n = static_cast<int>(variables_.size());
    if (!c.is_exact_zero()) f.terms.emplace(Multidegree(variables_.size(), 0), c);
    return f;
  }

  SeriesPoly expression() {
    bool negative = false;
    if (accept(Token::Kind::Minus))
      negative = true;
    else
      accept(Token::Kind::Plus);
    SeriesPoly f = term();
    if (negative) f = neg(f);
    for (;;) {
      if (accept(Token::Kind::Plus))
        f = add(K_, f, term());
      else if (accept(Token::Kind::Minus))
        f = add(K_, f, neg(term()));
      else
        return f;
    }
  }

  SeriesPoly term() {
    SeriesPoly f = factor();
    while (accept(Token::Kind::Star)) f = mul(K_, f, factor());
    return f;
  }

  SeriesPoly factor() {
    if (accept(Token::Kind::Minus)) return neg(factor());
    return power();
  }

  SeriesPoly power() {
    const Token& head = peek();
    switch (head.kind) {
      case Token::Kind::Number:
        return constant(series_constant(K_, number_literal()));
      case Token::Kind::Ident:
        if (head.text == "t") return t_power();
        return variable_power();
      case Token::Kind::LParen: {
        take();
        SeriesPoly f = expression();
        expect(Token::Kind::RParen, "')'");
        if (accept(Token::Kind::Caret)) return pow(K_, f, uint_exponent());
        return f;
      }
      default:
        throw ParseError("expected a number, variable, t or '('", head.pos);
    }
  }

  // NUMBER ['/' NUMBER]; decimals expand exactly.
  FieldElement number_literal() {
    Token num = take();
    std::string text = num.text;
    if (peek().kind == Token::Kind::Slash && tokens_[cursor_ + 1].kind == Token::Kind::Number) {
      take();
      text += "/" + take().text;
    }
    return K_.from_rational(checked_rational(text, num.pos));
  }

  Rational checked_rational(const std::string& text, std::size_t pos) {
    try {
      return rational_from_string(text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), pos);
    }
  }

  SeriesPoly t_power() {
    take();  // t
    Rational e(1);
    if (accept(Token::Kind::Caret)) e = t_exponent();
    return constant(series_term(K_, e, K_.one()));
  }

  // INT or '(' ['-'] INT ['/' INT] ')'.
  Rational t_exponent() {
    if (peek().kind == Token::Kind::Number) {
      Token num = take();
      if (num.text.find('.') != std::string::npos)
        throw ParseError("exponent of t must be an integer or a parenthesized fraction",
                         num.pos);
      return checked_rational(num.text, num.pos);
    }
    expect(Token::Kind::LParen, "an integer or '(' after '^'");
    std::string text;
    if (accept(Token::Kind::Minus)) text += "-";
    if (peek().kind != Token::Kind::Number || peek().text.find('.') != std::string::npos)
      throw ParseError("integer expected in exponent of t", peek().pos);
    Token num = take();
    text += num.text;
    if (accept(Token::Kind::Slash)) {
      if (peek().kind != Token::Kind::Number || peek().text.find('.') != std::string::npos)
        throw ParseError("integer denominator expected in exponent of t", peek().pos);
      text += "/" + take().text;
    }
    expect(Token::Kind::RParen, "')'");
    return checked_rational(text, num.pos);
  }

  SeriesPoly variable_power() {
    Token name = take();
    auto it = index_.find(name.text);
    if (it == index_.end())
      throw ParseError("unknown variable '" + name.text + "'", name.pos);
    unsigned long e = 1;
    if (accept(Token::Kind::Caret)) e = uint_exponent();
    SeriesPoly f;
    f.n = static_cast<int>(variables_.size());
    if (e > 0) {
      Multidegree i(variables_.size(), 0);
      i[it->second] = static_cast<unsigned>(e);
      f.terms.emplace(std::move(i), series_constant(K_, K_.one()));
    } else {
      f.terms.emplace(Multidegree(variables_.size(), 0), series_constant(K_, K_.one()));
    }
    return f;
  }

  unsigned long uint_exponent() {
    if (peek().kind != Token::Kind::Number || peek().text.find('.') != std::string::npos)
      throw ParseError("nonnegative integer exponent expected", peek().pos);
    Token num = take();
    try {
      std::size_t used = 0;
      unsigned long e = std::stoul(num.text, &used);
      if (used != num.text.size() || e > 1000000)
        throw std::out_of_range("exponent");
      return e;
    } catch (const std::exception&) {
      throw ParseError("exponent too large", num.pos);
    }
  }
};

std::vector<std::string> collect_variables(const std::vector<Token>& tokens,
                                           const std::vector<std::string>& declared) {
  if (!declared.empty()) {
    std::map<std::string, int> seen;
    for (const auto& name : declared) {
      if (name == "t" || name.empty() || !ident_start(name[0]))
        throw DomainError("invalid variable name '" + name + "'");
      for (char c : name)
        if (!ident_char(c)) throw DomainError("invalid variable name '" + name + "'");
      if (++seen[name] > 1) throw DomainError("duplicate variable name '" + name + "'");
    }
    return declared;
  }
  std::vector<std::string> vars;
  for (const auto& tok : tokens)
    if (tok.kind == Token::Kind::Ident && tok.text != "t")
      if (std::find(vars.begin(), vars.end(), tok.text) == vars.end()) vars.push_back(tok.text);
  return vars;
}

}  // namespace

ParsedPolynomial parse_polynomial(const Field& K, const std::string& text,
                                  const std::vector<std::string>& declared) {
  std::vector<Token> tokens = tokenize(text);
  std::vector<std::string> vars = collect_variables(tokens, declared);
  Parser parser(K, std::move(tokens), vars);
  SeriesPoly f = parser.run();
  if (f.is_zero()) throw ZeroPolynomialError("polynomial input simplifies to zero");
  return {std::move(f), std::move(vars)};
}

PuiseuxSeries parse_series(const Field& K, const std::string& text) {
  std::vector<Token> tokens = tokenize(text);
  for (const auto& tok : tokens)
    if (tok.kind == Token::Kind::Ident && tok.text != "t")
      throw ParseError("only t may appear in a series", tok.pos);
  Parser parser(K, std::move(tokens), {});
  SeriesPoly f = parser.run();
  if (f.is_zero()) return series_zero();
  return f.terms.begin()->second;
}

}  // namespace troplift
