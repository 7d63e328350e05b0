#include "fgv/parse.hpp"

#include <cctype>
#include <string>

#include "fgv/errors.hpp"

namespace fgv {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      if (text_.compare(pos_, kUnicodeMinus.size(), kUnicodeMinus) == 0) return;
      if (!std::isspace(static_cast<unsigned char>(text_[pos_]))) return;
      ++pos_;
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  /// Next significant character; U+2212 is reported as '-'.
  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) return '\0';
    if (text_.compare(pos_, kUnicodeMinus.size(), kUnicodeMinus) == 0) return '-';
    return text_[pos_];
  }
  void advance() {
    if (text_.compare(pos_, kUnicodeMinus.size(), kUnicodeMinus) == 0) {
      pos_ += kUnicodeMinus.size();
    } else {
      ++pos_;
    }
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip_ws();
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_++];
    }
    if (out.empty()) fail("expected digits");
    return out;
  }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

 private:
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  std::string_view text_;
  std::size_t pos_ = 0;
};

unsigned parse_exponent(Cursor& cur) {
  if (!cur.accept('^')) return 1;
  const std::string d = cur.digits();
  if (d.size() > 6) cur.fail("exponent too large");
  return static_cast<unsigned>(std::stoul(d));
}

BivarPoly parse_term(Cursor& cur) {
  Rational coeff(1);
  unsigned ex = 0;
  unsigned ey = 0;
  bool any = false;
  while (true) {
    const char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(Integer(cur.digits()));
      if (cur.accept('/')) {
        Integer den(cur.digits());
        if (den == 0) cur.fail("zero denominator");
        value /= Rational(den);
      }
      coeff *= value;
    } else if (c == 'x') {
      cur.advance();
      ex += parse_exponent(cur);
    } else if (c == 'y') {
      cur.advance();
      ey += parse_exponent(cur);
    } else if (c == '*' && any) {
      cur.advance();
      const char n = cur.peek();
      if (!(std::isdigit(static_cast<unsigned char>(n)) || n == 'x' || n == 'y')) {
        cur.fail("expected a factor after '*'");
      }
      continue;
    } else {
      break;
    }
    any = true;
  }
  if (!any) cur.fail("expected a term");
  return BivarPoly::monomial(coeff, ex, ey);
}

BivarPoly parse_sum(Cursor& cur) {
  BivarPoly out;
  bool negative = false;
  if (cur.accept('-')) {
    negative = true;
  } else {
    cur.accept('+');
  }
  while (true) {
    BivarPoly term = parse_term(cur);
    if (negative) term = -term;
    out += term;
    if (cur.accept('+')) {
      negative = false;
    } else if (cur.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  return out;
}

}  // namespace

BivarPoly parse_polynomial(std::string_view text) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty polynomial");
  BivarPoly p = parse_sum(cur);
  if (!cur.at_end()) cur.fail(std::string("unexpected character '") + cur.peek() + "'");
  return p;
}

RationalFunction parse_rational_function(std::string_view text) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty expression");
  if (cur.peek() != '(') return RationalFunction(parse_polynomial(text));
  cur.expect('(');
  BivarPoly num = parse_sum(cur);
  cur.expect(')');
  BivarPoly den(Rational(1));
  if (cur.accept('/')) {
    cur.expect('(');
    const std::size_t at = cur.pos();
    den = parse_sum(cur);
    cur.expect(')');
    if (den.is_zero()) {
      cur.set_pos(at);
      cur.fail("zero denominator");
    }
  }
  if (!cur.at_end()) cur.fail(std::string("unexpected character '") + cur.peek() + "'");
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace fgv
