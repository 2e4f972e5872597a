#include "lcgerm/rational.hpp"

#include <cctype>

#include "lcgerm/errors.hpp"

namespace lcgerm {

std::string to_pq(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_display(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return to_pq(c);
}

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::size_t start = pos;
  if (pos < text.size() && text[pos] == '-') ++pos;
  std::size_t end = scan_digits(text, pos);
  if (end == pos) throw ParseError("expected integer", pos);
  Integer num(std::string(text.substr(start, end - start)));
  Integer den = 1;
  pos = end;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    end = scan_digits(text, pos);
    if (end == pos) throw ParseError("expected positive denominator", pos);
    den = Integer(std::string(text.substr(pos, end - pos)));
    if (den == 0) throw ParseError("zero denominator", pos);
    pos = end;
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace lcgerm
