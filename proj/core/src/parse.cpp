#include <cctype>
#include <sstream>

#include "taftinv/downup.hpp"

namespace taftinv {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message),
      kind_(kind),
      position_(position) {}

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := power (('*'|'/') power)*
// power  := atom ['^' ['-'] int]
// atom   := number | symbol | '(' expr ')'
class Parser {
 public:
  Parser(const std::string& text, const ActionSpec& spec, const DownUp* algebra)
      : s_(text), spec_(spec), alg_(algebra) {}

  PBWElement parse() {
    PBWElement e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(ParseError::Kind::Syntax, pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void syntax(const std::string& msg) { throw ParseError(ParseError::Kind::Syntax, pos_, msg); }

  PBWElement mul(const PBWElement& a, const PBWElement& b) {
    if (a.is_scalar()) return a.scalar_value() * b;
    if (b.is_scalar()) return b.scalar_value() * a;
    return alg_->mul(a, b);
  }

  PBWElement expr() {
    skip_ws();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    PBWElement acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  PBWElement term() {
    PBWElement acc = power();
    for (;;) {
      if (accept('*')) {
        acc = mul(acc, power());
      } else {
        skip_ws();
        const std::size_t at = pos_;
        if (!accept('/')) return acc;
        PBWElement d = power();
        if (!d.is_scalar()) throw ParseError(ParseError::Kind::Domain, at, "division by a non-scalar");
        if (d.is_zero()) throw ParseError(ParseError::Kind::Domain, at, "division by zero");
        acc = d.scalar_value().inverse() * acc;
      }
    }
  }

  PBWElement power() {
    PBWElement base = atom();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_ws();
    bool neg = accept('-');
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) syntax("expected an exponent");
    long long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + (s_[pos_++] - '0');
      if (e > 1000000) syntax("exponent too large");
    }
    if (base.is_scalar()) {
      if (base.is_zero() && neg) throw ParseError(ParseError::Kind::Domain, at, "zero to a negative power");
      return PBWElement(base.scalar_value().pow(neg ? -e : e));
    }
    if (neg) throw ParseError(ParseError::Kind::Domain, at, "negative exponent on a non-scalar");
    if (!alg_) syntax("algebra element in a scalar expression");
    return alg_->pow(base, static_cast<int>(e));
  }

  PBWElement atom() {
    skip_ws();
    if (pos_ >= s_.size()) syntax("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PBWElement e = expr();
      if (!accept(')')) syntax("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
      return PBWElement(CycNum(Rational(mpz_class(digits))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string name;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
      if (name == "w") return PBWElement(spec_.omega);
      if (name == "s") return PBWElement(spec_.sqrt_omega);
      if (name == "r") return PBWElement(spec_.zeta);
      if (name == "u" || name == "v" || name == "z") {
        if (!alg_) throw ParseError(ParseError::Kind::UnknownSymbol, at, "'" + name + "' is not a scalar symbol");
        if (name == "u") return PBWElement::monomial(1, 0, 0);
        if (name == "z") return PBWElement::monomial(0, 1, 0);
        return PBWElement::monomial(0, 0, 1);
      }
      throw ParseError(ParseError::Kind::UnknownSymbol, at, "unknown symbol '" + name + "'");
    }
    syntax("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const ActionSpec& spec_;
  const DownUp* alg_;
  std::size_t pos_ = 0;
};

}  // namespace

PBWElement parse_element(const std::string& text, const DownUp& algebra) {
  return Parser(text, algebra.spec(), &algebra).parse();
}

PBWElement parse_element(const std::string& text, const ActionSpec& spec) {
  DownUp alg(spec);
  return parse_element(text, alg);
}

CycNum parse_scalar(const std::string& text, const ActionSpec& spec) {
  return Parser(text, spec, nullptr).parse().scalar_value();
}

PBWElement deserialize(const std::string& text, const ActionSpec& spec) {
  PBWElement out;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(ParseError::Kind::Syntax, line_start, "expected 'i j l : coef'");
    std::istringstream head(line.substr(0, colon));
    Monomial m;
    std::string extra;
    if (!(head >> m.i >> m.j >> m.l) || (head >> extra) || m.i < 0 || m.j < 0 || m.l < 0)
      throw ParseError(ParseError::Kind::Syntax, line_start, "bad exponent triple");
    try {
      out.add(m, parse_scalar(line.substr(colon + 1), spec));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), line_start + colon + 1 + e.position(), e.what());
    }
  }
  return out;
}

}  // namespace taftinv
