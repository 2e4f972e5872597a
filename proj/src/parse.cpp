#include "lcgerm/parse.hpp"

#include <cctype>

#include "lcgerm/errors.hpp"

namespace lcgerm {

namespace {

constexpr unsigned kMaxExponent = 4096;

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableNames& names) : text_(text), names_(names) {}

  BivarPoly parse() {
    BivarPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  BivarPoly expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    BivarPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  BivarPoly term() {
    BivarPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  BivarPoly factor() {
    BivarPoly b = base();
    if (accept('^')) {
      const std::size_t at = pos_;
      const Integer e = digits();
      if (e > kMaxExponent) {
        pos_ = at;
        fail("exponent too large");
      }
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  BivarPoly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BivarPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = digits();
      Integer den = 1;
      // '/' only ever appears inside a rational literal.
      if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        den = digits();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return BivarPoly::constant(nullptr, Elem(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == names_.x) return BivarPoly::x();
      if (name == names_.y) return BivarPoly::y();
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_poly(std::string_view text, const VariableNames& names) {
  if (names.x == names.y) throw InvariantError("variable names must differ");
  return PolyParser(text, names).parse();
}

}  // namespace lcgerm
