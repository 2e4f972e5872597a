#include "lcgerm/bivar_poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

#include "lcgerm/errors.hpp"

namespace lcgerm {

BivarPoly::BivarPoly(FieldPtr field, Terms terms) : field_(std::move(field)) {
  for (auto& [e, c] : terms) add_term(e, c);
}

void BivarPoly::add_term(const Exponent& e, const Elem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c.lifted(field_));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BivarPoly BivarPoly::constant(const FieldPtr& field, const Elem& c) { return monomial(field, c, 0, 0); }

BivarPoly BivarPoly::monomial(const FieldPtr& field, const Elem& c, int i, int j) {
  BivarPoly p(field);
  p.add_term({i, j}, c);
  return p;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Elem BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Elem().lifted(field_) : it->second;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int BivarPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BivarPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BivarPoly::order() const {
  if (terms_.empty()) throw InvariantError("order of the zero polynomial");
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e.first + e.second);
  return d;
}

BivarPoly BivarPoly::lifted(const FieldPtr& target) const {
  if (target == field_) return *this;
  BivarPoly out(target);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.lifted(target));
  return out;
}

BivarPoly BivarPoly::partial_x() const {
  BivarPoly out(field_);
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) out.add_term({e.first - 1, e.second}, Elem(e.first) * c);
  }
  return out;
}

BivarPoly BivarPoly::partial_y() const {
  BivarPoly out(field_);
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) out.add_term({e.first, e.second - 1}, Elem(e.second) * c);
  }
  return out;
}

BivarPoly BivarPoly::shift_y(const Elem& shift) const {
  const FieldPtr f = common_field(field_, shift.field());
  if (shift.is_zero()) return lifted(f);
  const int dy = degree_y();
  // binom[j][k] * shift^(j-k)
  std::vector<Elem> powers(dy + 1, Elem(1));
  for (int k = 1; k <= dy; ++k) powers[k] = powers[k - 1] * shift;
  BivarPoly out(f);
  for (const auto& [e, c] : terms_) {
    Integer binom = 1;
    for (int k = 0; k <= e.second; ++k) {
      // term c * C(j, k) * shift^(j-k) * x^i y^k
      out.add_term({e.first, k}, c * Elem(Rational(binom)) * powers[e.second - k]);
      binom = binom * (e.second - k) / (k + 1);
    }
  }
  return out;
}

BivarPoly BivarPoly::linear_substitution(const Elem& a, const Elem& b, const Elem& c, const Elem& d) const {
  FieldPtr f = field_;
  for (const Elem* s : {&a, &b, &c, &d}) f = common_field(f, s->field());
  BivarPoly X(f), Y(f);
  X.add_term({1, 0}, a);
  X.add_term({0, 1}, b);
  Y.add_term({1, 0}, c);
  Y.add_term({0, 1}, d);
  std::vector<BivarPoly> xp{constant(f, Elem(1))}, yp{constant(f, Elem(1))};
  for (int i = 1; i <= degree_x(); ++i) xp.push_back(xp.back() * X);
  for (int j = 1; j <= degree_y(); ++j) yp.push_back(yp.back() * Y);
  BivarPoly out(f);
  for (const auto& [e, coef] : terms_) out = out + coef * (xp[e.first] * yp[e.second]);
  return out;
}

BivarPoly BivarPoly::chart_x() const {
  const int m = order();
  BivarPoly out(field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.first + e.second - m, e.second}, c);
  return out;
}

BivarPoly BivarPoly::chart_y() const {
  const int m = order();
  BivarPoly out(field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.first, e.first + e.second - m}, c);
  return out;
}

UPoly BivarPoly::restrict_to_x_axis_zero() const {
  std::vector<Elem> c(std::max(degree_y(), 0) + 1, Elem().lifted(field_));
  for (const auto& [e, v] : terms_) {
    if (e.first == 0) c[e.second] = v;
  }
  return UPoly(field_, std::move(c));
}

std::array<Elem, 2> BivarPoly::linear_part() const { return {coeff(1, 0), coeff(0, 1)}; }

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out = a.lifted(common_field(a.field_, b.field_));
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out(common_field(a.field_, b.field_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return out;
}

BivarPoly operator*(const Elem& s, const BivarPoly& p) {
  BivarPoly out(common_field(p.field_, s.field()));
  for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
  return out;
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly result = constant(field_, Elem(1));
  BivarPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string BivarPoly::to_string(const std::string& xname, const std::string& yname) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Elem>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
    if (dl != dr) return dl < dr;
    return l.first.second > r.first.second;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    std::string body;
    bool negative = false;
    if (c.in_rationals()) {
      Rational q = c.to_rational();
      negative = q < 0;
      if (negative) q = -q;
      if (q != 1 || (e.first == 0 && e.second == 0)) body = to_display(q);
    } else {
      body = "(" + c.to_string() + ")";
    }
    auto append_var = [&](const std::string& name, int power) {
      if (power == 0) return;
      if (!body.empty()) body += "*";
      body += name;
      if (power > 1) body += "^" + std::to_string(power);
    };
    append_var(xname, e.first);
    append_var(yname, e.second);
    if (first) {
      out << (negative ? "-" : "") << body;
    } else {
      out << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// gcd via primitive pseudo-remainder sequences in K[x][y].

namespace {

using YPoly = std::vector<UPoly>;  // coefficient of y^j is a polynomial in x

void ytrim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly to_ypoly(const BivarPoly& f) {
  YPoly out(std::max(f.degree_y(), 0) + 1, UPoly(f.field()));
  std::vector<std::vector<Elem>> rows(out.size());
  for (const auto& [e, c] : f.terms()) {
    auto& row = rows[e.second];
    if (static_cast<int>(row.size()) <= e.first) row.resize(e.first + 1, Elem().lifted(f.field()));
    row[e.first] = c;
  }
  for (std::size_t j = 0; j < rows.size(); ++j) out[j] = UPoly(f.field(), rows[j]);
  ytrim(out);
  return out;
}

BivarPoly from_ypoly(const YPoly& p, const FieldPtr& field) {
  BivarPoly out(field);
  for (std::size_t j = 0; j < p.size(); ++j) {
    const auto& cs = p[j].coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      out = out + BivarPoly::monomial(field, cs[i], static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

UPoly content(const YPoly& p, const FieldPtr& field) {
  UPoly g(field);
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

YPoly primitive(const YPoly& p, const FieldPtr& field) {
  if (p.empty()) return p;
  const UPoly c = content(p, field);
  YPoly out;
  for (const auto& coef : p) out.push_back(divmod(coef, c).first);
  return out;
}

YPoly pseudo_rem(YPoly a, const YPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    const UPoly la = a.back();
    const UPoly lb = b.back();
    for (auto& c : a) c = lb * c;
    for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - la * b[j];
    ytrim(a);
  }
  return a;
}

}  // namespace

BivarPoly gcd(const BivarPoly& a, const BivarPoly& b) {
  const FieldPtr field = common_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) return BivarPoly(field);
  YPoly pa = to_ypoly(a.lifted(field)), pb = to_ypoly(b.lifted(field));
  const UPoly cont = gcd(content(pa, field), content(pb, field));
  pa = primitive(pa, field);
  pb = primitive(pb, field);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    if (pb.size() == 1) {  // nonzero, free of y after primitive part: a unit
      pa = {UPoly::constant(field, Elem(1))};
      break;
    }
    YPoly r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    pb = primitive(r, field);
  }
  if (pa.size() == 1) pa = {UPoly::constant(field, Elem(1))};
  BivarPoly result = from_ypoly(pa, field) * from_ypoly({cont}, field);
  // Normalize: lex-leading (highest y, then highest x) coefficient is 1.
  Exponent top{-1, -1};
  for (const auto& [e, c] : result.terms()) {
    if (e.second > top.second || (e.second == top.second && e.first > top.first)) top = e;
  }
  return result.coeff(top.first, top.second).inverse() * result;
}

}  // namespace lcgerm
