#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lcgerm/field.hpp"

namespace lcgerm {

// Dense univariate polynomial over a tower field, coefficients low to high.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(FieldPtr field) : field_(std::move(field)) {}
  UPoly(FieldPtr field, std::vector<Elem> coeffs);

  static UPoly constant(const FieldPtr& field, const Elem& c);
  static UPoly monomial(const FieldPtr& field, const Elem& c, int degree);
  // t - root
  static UPoly linear_root(const FieldPtr& field, const Elem& root);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(int i) const;
  const Elem& lead() const { return c_.back(); }

  UPoly lifted(const FieldPtr& target) const;
  UPoly monic() const;
  UPoly derivative() const;
  Elem eval(const Elem& at) const;
  // p(t + shift)
  UPoly shifted(const Elem& shift) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Elem& s, const UPoly& p);
  friend bool operator==(const UPoly& a, const UPoly& b);
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> c_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& f);
bool is_squarefree(const UPoly& f);
Elem resultant(const UPoly& a, const UPoly& b);

// Deterministic order: degree, then coefficients from the top.
int compare(const UPoly& a, const UPoly& b);

}  // namespace lcgerm
