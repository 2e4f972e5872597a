#include "lcgerm/upoly.hpp"

#include <sstream>

#include "lcgerm/errors.hpp"

namespace lcgerm {

UPoly::UPoly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = c.lifted(field_);
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const FieldPtr& field, const Elem& c) { return UPoly(field, {c}); }

UPoly UPoly::monomial(const FieldPtr& field, const Elem& c, int degree) {
  std::vector<Elem> coeffs(degree + 1, Elem().lifted(field));
  coeffs[degree] = c;
  return UPoly(field, std::move(coeffs));
}

UPoly UPoly::linear_root(const FieldPtr& field, const Elem& root) {
  return UPoly(field, {-root, Elem(1)});
}

Elem UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Elem().lifted(field_);
  return c_[i];
}

UPoly UPoly::lifted(const FieldPtr& target) const {
  if (target == field_) return *this;
  return UPoly(target, c_);
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Elem inv = lead().inverse();
  UPoly out = *this;
  for (auto& c : out.c_) c *= inv;
  return out;
}

UPoly UPoly::derivative() const {
  std::vector<Elem> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(Elem(i) * c_[i]);
  return UPoly(field_, std::move(d));
}

Elem UPoly::eval(const Elem& at) const {
  Elem acc = Elem().lifted(common_field(field_, at.field()));
  for (int i = degree(); i >= 0; --i) acc = acc * at + c_[i];
  return acc;
}

UPoly UPoly::shifted(const Elem& shift) const {
  const FieldPtr f = common_field(field_, shift.field());
  const UPoly step(f, {shift, Elem(1)});
  UPoly acc(f);
  for (int i = degree(); i >= 0; --i) acc = acc * step + UPoly::constant(f, c_[i]);
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  const FieldPtr f = common_field(a.field_, b.field_);
  std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), Elem().lifted(f));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i].lifted(f);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(f, std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  const FieldPtr f = common_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return UPoly(f);
  std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, Elem().lifted(f));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(f, std::move(c));
}

UPoly operator*(const Elem& s, const UPoly& p) {
  const FieldPtr f = common_field(p.field_, s.field());
  std::vector<Elem> c;
  c.reserve(p.c_.size());
  for (const auto& x : p.c_) c.push_back(s * x);
  return UPoly(f, std::move(c));
}

bool operator==(const UPoly& a, const UPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].to_string();
    if (!c_[i].in_rationals()) coeff = "(" + coeff + ")";
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << coeff;
      continue;
    }
    if (!c_[i].is_one()) out << coeff << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InvariantError("polynomial division by zero");
  const FieldPtr f = common_field(a.field(), b.field());
  std::vector<Elem> r = a.lifted(f).coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Elem inv = b.lead().inverse();
  if (a.degree() < db) return {UPoly(f), a.lifted(f)};
  std::vector<Elem> q(a.degree() - db + 1, Elem().lifted(f));
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    const Elem factor = r[i] * inv;
    q[i - db] = factor;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= factor * bc[j];
  }
  r.resize(db);
  return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    // Monic remainders keep coefficient growth in check over Q.
    y = r.is_zero() ? std::move(r) : r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& f) {
  if (f.degree() <= 0) return f;
  return divmod(f, gcd(f, f.derivative())).first.monic();
}

bool is_squarefree(const UPoly& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

Elem power(const Elem& base, int e) {
  Elem acc(1);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

Elem resultant(const UPoly& a, const UPoly& b) {
  const FieldPtr f = common_field(a.field(), b.field());
  if (a.is_zero() || b.is_zero()) return Elem().lifted(f);
  if (b.degree() == 0) return power(b.lead(), a.degree()).lifted(f);
  if (a.degree() == 0) return power(a.lead(), b.degree()).lifted(f);
  const UPoly r = divmod(a, b).second;
  if (r.is_zero()) return Elem().lifted(f);
  const int m = a.degree(), n = b.degree();
  Elem out = power(b.lead(), m - r.degree()) * resultant(b, r);
  if ((m * n) % 2 == 1) out = -out;
  return out;
}

int compare(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    const int c = compare(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace lcgerm
