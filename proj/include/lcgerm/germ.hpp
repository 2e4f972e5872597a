#pragma once

#include <string>

#include "lcgerm/bivar_poly.hpp"

namespace lcgerm {

// Order of vanishing at (0, 0): min{i + j : coeff(i, j) != 0}.
int mult_at_origin(const BivarPoly& f);

// True iff gcd(f, df/dx, df/dy) is a unit.
bool squarefree_check(const BivarPoly& f);

bool are_coprime(const BivarPoly& f, const BivarPoly& g);

// A reduced plane curve through the origin, with rational coefficients.
class CurveGerm {
 public:
  // Throws InvariantError unless poly is nonzero, over Q, vanishes at the
  // origin, and is squarefree.
  explicit CurveGerm(BivarPoly poly, std::string label = "");

  const BivarPoly& poly() const { return poly_; }
  const std::string& label() const { return label_; }
  int mult() const { return mult_at_origin(poly_); }

 private:
  BivarPoly poly_;
  std::string label_;
};

bool is_smooth_at_origin(const CurveGerm& g);

// Distinct tangent lines at the origin. Throws unless both are smooth there.
bool are_transverse_at_origin(const CurveGerm& g1, const CurveGerm& g2);

}  // namespace lcgerm
