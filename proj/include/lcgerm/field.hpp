#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lcgerm/rational.hpp"

namespace lcgerm {

class Field;
class UPoly;

// A null FieldPtr denotes the rationals.
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr int kDefaultMaxTowerHeight = 4;

// Element of a tower Q = K0 < K1 < ... < Kh. At height 0 the value is a
// Rational; at height h it is a polynomial in the generator of Kh with
// coefficients in K(h-1), reduced modulo the minimal polynomial.
class Elem {
 public:
  Elem() = default;
  Elem(const Rational& q) : q_(q) { q_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  Elem(long v) : q_(v) {}             // NOLINT(google-explicit-constructor)
  Elem(int v) : q_(v) {}              // NOLINT(google-explicit-constructor)

  // Reduces `coeffs` (elements of field->base()) modulo the minimal polynomial.
  static Elem from_coeffs(const FieldPtr& field, std::vector<Elem> coeffs);
  static Elem generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  int height() const;
  bool is_zero() const;
  bool is_one() const;

  // True when the value lies in Q (all generator powers vanish, recursively).
  bool in_rationals() const;
  // Value as a rational; requires in_rationals().
  Rational to_rational() const;

  // Coefficients over the base field (height > 0 only).
  const std::vector<Elem>& coeffs() const { return c_; }

  // Embeds this element into `target`, which must be this element's field or
  // an extension of it.
  Elem lifted(const FieldPtr& target) const;

  Elem inverse() const;

  Elem operator-() const;
  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b) { return a * b.inverse(); }
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }

  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  // Deterministic total order used to sort points on exceptional lines.
  friend int compare(const Elem& a, const Elem& b);

  std::string to_string() const;

 private:
  FieldPtr field_;
  Rational q_;
  std::vector<Elem> c_;
};

// Whichever of the two fields is the larger; they must lie in one tower.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

int field_height(const FieldPtr& f);

// One simple algebraic extension K[t]/(minpoly) of a base field.
class Field {
 public:
  // Validates that `minpoly` is monic, of degree >= 2, irreducible over its
  // field, and that the resulting height does not exceed `max_height`.
  static FieldPtr extend(const UPoly& minpoly, std::string generator_name,
                         int max_height = kDefaultMaxTowerHeight);

  const FieldPtr& base() const { return base_; }
  int height() const { return height_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  // Monic, low-to-high coefficients over base().
  const std::vector<Elem>& minpoly() const { return minpoly_; }
  const std::string& generator_name() const { return name_; }
  // Degree over Q.
  long absolute_degree() const;

 private:
  Field(FieldPtr base, std::vector<Elem> minpoly, std::string name, int height)
      : base_(std::move(base)), minpoly_(std::move(minpoly)), name_(std::move(name)), height_(height) {}

  FieldPtr base_;
  std::vector<Elem> minpoly_;
  std::string name_;
  int height_;
};

}  // namespace lcgerm
