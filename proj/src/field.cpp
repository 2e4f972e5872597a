#include "lcgerm/field.hpp"

#include <sstream>

#include "lcgerm/errors.hpp"
#include "lcgerm/factor.hpp"
#include "lcgerm/upoly.hpp"

namespace lcgerm {

int field_height(const FieldPtr& f) { return f ? f->height() : 0; }

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return a;
  const FieldPtr& hi = field_height(a) >= field_height(b) ? a : b;
  const FieldPtr& lo = field_height(a) >= field_height(b) ? b : a;
  FieldPtr walk = hi;
  while (field_height(walk) > field_height(lo)) walk = walk->base();
  if (walk != lo) throw InvariantError("field elements from unrelated extension towers");
  return hi;
}

int Elem::height() const { return field_height(field_); }

bool Elem::is_zero() const { return field_ ? c_.empty() : q_ == 0; }

bool Elem::is_one() const {
  if (!field_) return q_ == 1;
  return c_.size() == 1 && c_[0].is_one();
}

bool Elem::in_rationals() const {
  if (!field_) return true;
  return c_.empty() || (c_.size() == 1 && c_[0].in_rationals());
}

Rational Elem::to_rational() const {
  if (!field_) return q_;
  if (!in_rationals()) throw InvariantError("element is not rational: " + to_string());
  return c_.empty() ? Rational(0) : c_[0].to_rational();
}

Elem Elem::lifted(const FieldPtr& target) const {
  if (field_ == target) return *this;
  if (field_height(target) <= height()) {
    throw InvariantError("cannot embed element into a smaller field");
  }
  Elem inner = lifted(target->base());
  Elem out;
  out.field_ = target;
  if (!inner.is_zero()) out.c_.push_back(std::move(inner));
  return out;
}

namespace {

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void reduce_mod(std::vector<Elem>& r, const std::vector<Elem>& mp) {
  const std::size_t d = mp.size() - 1;
  for (std::size_t i = r.size(); i-- > d;) {
    if (r[i].is_zero()) continue;
    const Elem lead = r[i];
    for (std::size_t j = 0; j < d; ++j) r[i - d + j] -= lead * mp[j];
    r[i] = Elem().lifted(lead.field());
  }
  if (r.size() > d) r.resize(d);
  trim(r);
}

}  // namespace

Elem Elem::from_coeffs(const FieldPtr& field, std::vector<Elem> coeffs) {
  if (!field) throw InvariantError("from_coeffs requires an extension field");
  for (auto& c : coeffs) c = c.lifted(field->base());
  trim(coeffs);
  reduce_mod(coeffs, field->minpoly());
  Elem out;
  out.field_ = field;
  out.c_ = std::move(coeffs);
  return out;
}

Elem Elem::generator(const FieldPtr& field) {
  return from_coeffs(field, {Elem(0), Elem(1)});
}

Elem Elem::operator-() const {
  if (!field_) return Elem(Rational(-q_));
  Elem out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Elem operator+(const Elem& a, const Elem& b) {
  if (!a.field_ && !b.field_) return Elem(Rational(a.q_ + b.q_));
  const FieldPtr f = common_field(a.field_, b.field_);
  const Elem x = a.lifted(f), y = b.lifted(f);
  Elem out;
  out.field_ = f;
  out.c_.resize(std::max(x.c_.size(), y.c_.size()), Elem().lifted(f->base()));
  for (std::size_t i = 0; i < x.c_.size(); ++i) out.c_[i] = x.c_[i];
  for (std::size_t i = 0; i < y.c_.size(); ++i) out.c_[i] += y.c_[i];
  trim(out.c_);
  return out;
}

Elem operator-(const Elem& a, const Elem& b) { return a + (-b); }

Elem operator*(const Elem& a, const Elem& b) {
  if (!a.field_ && !b.field_) return Elem(Rational(a.q_ * b.q_));
  const FieldPtr f = common_field(a.field_, b.field_);
  const Elem x = a.lifted(f), y = b.lifted(f);
  Elem out;
  out.field_ = f;
  if (x.c_.empty() || y.c_.empty()) return out;
  out.c_.assign(x.c_.size() + y.c_.size() - 1, Elem().lifted(f->base()));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) out.c_[i + j] += x.c_[i] * y.c_[j];
  }
  reduce_mod(out.c_, f->minpoly());
  return out;
}

Elem Elem::inverse() const {
  if (is_zero()) throw InvariantError("division by zero");
  if (!field_) return Elem(Rational(1 / q_));
  // Extended Euclid in base[t]: track s with s*a == r (mod minpoly).
  const FieldPtr& base = field_->base();
  UPoly r0(base, field_->minpoly()), r1(base, c_);
  UPoly s0(base), s1 = UPoly::constant(base, Elem(1));
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    UPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero()) throw InvariantError("minimal polynomial is not irreducible");
  const Elem scale = r1.lead().inverse();
  std::vector<Elem> coeffs;
  for (const auto& c : s1.coeffs()) coeffs.push_back(c * scale);
  return from_coeffs(field_, std::move(coeffs));
}

bool operator==(const Elem& a, const Elem& b) {
  if (!a.field_ && !b.field_) return a.q_ == b.q_;
  const FieldPtr f = common_field(a.field_, b.field_);
  const Elem x = a.lifted(f), y = b.lifted(f);
  if (x.c_.size() != y.c_.size()) return false;
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] != y.c_[i]) return false;
  }
  return true;
}

int compare(const Elem& a, const Elem& b) {
  if (!a.field_ && !b.field_) return cmp(a.q_, b.q_) < 0 ? -1 : (cmp(a.q_, b.q_) > 0 ? 1 : 0);
  const FieldPtr f = common_field(a.field_, b.field_);
  const Elem x = a.lifted(f), y = b.lifted(f);
  if (x.c_.size() != y.c_.size()) return x.c_.size() < y.c_.size() ? -1 : 1;
  for (std::size_t i = x.c_.size(); i-- > 0;) {
    const int c = compare(x.c_[i], y.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Elem::to_string() const {
  if (!field_) return to_display(q_);
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].to_string();
    if (!c_[i].in_rationals()) coeff = "(" + coeff + ")";
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << coeff;
    } else {
      if (!c_[i].is_one()) out << coeff << "*";
      out << field_->generator_name();
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

long Field::absolute_degree() const {
  return degree() * (base_ ? base_->absolute_degree() : 1);
}

FieldPtr Field::extend(const UPoly& minpoly, std::string generator_name, int max_height) {
  const int height = field_height(minpoly.field()) + 1;
  if (height > max_height) {
    throw TowerHeightExceeded("extension tower height " + std::to_string(height) +
                              " exceeds bound " + std::to_string(max_height));
  }
  if (minpoly.degree() < 2) throw InvariantError("minimal polynomial must have degree >= 2");
  UPoly monic = minpoly.monic();
  const auto factors = factor(monic);
  if (factors.size() != 1 || factors[0].degree() != monic.degree()) {
    throw InvariantError("minimal polynomial " + monic.to_string() + " is reducible");
  }
  return FieldPtr(new Field(minpoly.field(), monic.coeffs(), std::move(generator_name), height));
}

}  // namespace lcgerm
