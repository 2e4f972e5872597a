#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "lcgerm/field.hpp"
#include "lcgerm/upoly.hpp"

namespace lcgerm {

// Exponent pair (i, j) of the monomial x^i y^j.
using Exponent = std::pair<int, int>;

// Sparse polynomial in x, y over a tower field. No zero coefficients are
// stored; equality is coefficient-wise.
class BivarPoly {
 public:
  using Terms = std::map<Exponent, Elem>;

  explicit BivarPoly(FieldPtr field = nullptr) : field_(std::move(field)) {}
  BivarPoly(FieldPtr field, Terms terms);

  static BivarPoly constant(const FieldPtr& field, const Elem& c);
  static BivarPoly monomial(const FieldPtr& field, const Elem& c, int i, int j);
  static BivarPoly x(const FieldPtr& field = nullptr) { return monomial(field, Elem(1), 1, 0); }
  static BivarPoly y(const FieldPtr& field = nullptr) { return monomial(field, Elem(1), 0, 1); }

  const FieldPtr& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Elem coeff(int i, int j) const;
  int total_degree() const;
  int degree_x() const;
  int degree_y() const;
  // Minimal total degree of a monomial; requires a nonzero polynomial.
  int order() const;
  bool over_rationals() const { return field_ == nullptr; }

  BivarPoly lifted(const FieldPtr& target) const;
  BivarPoly partial_x() const;
  BivarPoly partial_y() const;

  // f(x, y + c)
  BivarPoly shift_y(const Elem& c) const;
  // f(a*x + b*y, c*x + d*y)
  BivarPoly linear_substitution(const Elem& a, const Elem& b, const Elem& c, const Elem& d) const;
  // f(x, x*y) / x^order()  and  f(x*y, y) / y^order()
  BivarPoly chart_x() const;
  BivarPoly chart_y() const;
  // f(0, t) as a univariate polynomial in t
  UPoly restrict_to_x_axis_zero() const;
  // Coefficients of x and y.
  std::array<Elem, 2> linear_part() const;

  BivarPoly operator-() const;
  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const Elem& s, const BivarPoly& p);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

  BivarPoly pow(unsigned e) const;

  // Parseable text; terms by ascending total degree, then descending y-degree.
  std::string to_string(const std::string& xname = "x", const std::string& yname = "y") const;

 private:
  void add_term(const Exponent& e, const Elem& c);

  FieldPtr field_;
  Terms terms_;
};

// gcd in K[x, y], normalized so the lex-leading coefficient is 1.
BivarPoly gcd(const BivarPoly& a, const BivarPoly& b);

}  // namespace lcgerm
