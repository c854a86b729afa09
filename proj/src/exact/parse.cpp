#include <cctype>
#include <string>

#include "dt4/error.hpp"
#include "dt4/exact.hpp"

namespace dt4::exact {

namespace {

// expr    := ['-'|'+'] term (('+'|'-') term)*
// term    := power (('*'|'/') power)*
// power   := primary ['^' integer]
// primary := integer | name | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, char prefix, int max_index)
      : prefix_(prefix), max_index_(max_index) {
    // Accept U+2212 MINUS SIGN as '-'.
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 &&
          static_cast<unsigned char>(text[i + 2]) == 0x92) {
        src_ += '-';
        i += 2;
      } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        src_ += text[i];
      }
    }
  }

  RationalFunction parse() {
    if (src_.empty()) fail("empty input");
    RationalFunction r = expr();
    if (pos_ != src_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + src_ + "'");
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  RationalFunction expr() {
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    RationalFunction acc = term();
    if (negate) acc = -acc;
    while (peek() == '+' || peek() == '-') {
      const char op = src_[pos_++];
      RationalFunction t = term();
      acc = op == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  RationalFunction term() {
    RationalFunction acc = power();
    while (peek() == '*' || peek() == '/') {
      const char op = src_[pos_++];
      RationalFunction f = power();
      acc = op == '*' ? acc * f : acc / f;
    }
    return acc;
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (peek() == '^') {
      ++pos_;
      const std::string digits = integer();
      const unsigned long k = std::stoul(digits);
      RationalFunction r(MultiPoly(1));
      for (unsigned long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return src_.substr(start, pos_ - start);
  }

  RationalFunction primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RationalFunction(MultiPoly(BigRational(BigInt(integer()))));
    }
    if (c == prefix_) {
      ++pos_;
      const int idx = std::stoi(integer());
      if (idx < 1 || idx > max_index_) fail("variable index out of range");
      if (idx == 4) return RationalFunction(MultiPoly::variable(3));
      Exponent e{0, 0, 0};
      e[idx - 1] = 1;
      return RationalFunction(MultiPoly::monomial(e));
    }
    fail("unexpected token");
  }

  std::string src_;
  std::size_t pos_ = 0;
  char prefix_;
  int max_index_;
};

MultiPoly require_polynomial(const RationalFunction& r, std::string_view text) {
  if (!r.denominator().is_constant())
    throw Error(ErrorKind::Parse, "not a polynomial: " + std::string(text));
  return r.numerator() * (1 / r.denominator().coefficient({0, 0, 0}));
}

}  // namespace

RationalFunction parse_rational_function(std::string_view text) {
  return Parser(text, 'l', 4).parse();
}

MultiPoly parse_poly(std::string_view text) {
  return require_polynomial(parse_rational_function(text), text);
}

SymmetricForm parse_symmetric(std::string_view text) {
  return SymmetricForm(require_polynomial(Parser(text, 's', 3).parse(), text));
}

}  // namespace dt4::exact
