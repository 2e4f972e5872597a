#include "lcgerm/germ.hpp"

#include "lcgerm/errors.hpp"
#include "lcgerm/upoly.hpp"

namespace lcgerm {

int mult_at_origin(const BivarPoly& f) {
  if (f.is_zero()) throw InvariantError("multiplicity of the zero polynomial");
  return f.order();
}

namespace {

// Coefficients of y^0, y^1, ... as polynomials in x.
std::vector<UPoly> y_coefficients(const BivarPoly& f) {
  std::vector<std::vector<Elem>> c(static_cast<std::size_t>(f.degree_y()) + 1);
  for (const auto& [e, v] : f.terms()) {
    auto& row = c[static_cast<std::size_t>(e.second)];
    if (row.size() <= static_cast<std::size_t>(e.first)) row.resize(static_cast<std::size_t>(e.first) + 1);
    row[static_cast<std::size_t>(e.first)] = v;
  }
  std::vector<UPoly> out;
  for (auto& row : c) out.emplace_back(f.field(), std::move(row));
  return out;
}

// gcd in K[x] of the y-coefficients.
UPoly y_content(const BivarPoly& f) {
  UPoly g(f.field());
  for (const auto& c : y_coefficients(f)) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

// f(x0, y) as a polynomial in y.
UPoly at_x(const BivarPoly& f, const Elem& x0) {
  std::vector<Elem> c(static_cast<std::size_t>(f.degree_y()) + 1);
  for (const auto& [e, v] : f.terms()) {
    Elem p = v;
    for (int i = 0; i < e.first; ++i) p = p * x0;
    c[static_cast<std::size_t>(e.second)] = c[static_cast<std::size_t>(e.second)] + p;
  }
  return UPoly(f.field(), std::move(c));
}

// Sample points for the specialisation tests below.
const long kSamples[] = {1, -1, 2, -2, 3, -3, 5, 7};

}  // namespace

// Fast path: a square factor h^2 | f either lies in K[x] (so divides the
// content twice) or survives x = x0 whenever the leading y-coefficient does
// not vanish there. So a squarefree content and a squarefree f(x0, y) of
// full y-degree prove f squarefree. Otherwise fall back to the full gcd.
bool squarefree_check(const BivarPoly& f) {
  if (f.is_zero()) throw InvariantError("squarefree check of the zero polynomial");
  const UPoly cont = y_content(f);
  if (!is_squarefree(cont)) return false;
  const int dy = f.degree_y();
  if (dy == 0) return true;
  for (long x0 : kSamples) {
    const UPoly g = at_x(f, Elem(x0));
    if (g.degree() == dy && is_squarefree(g)) return true;
  }
  return gcd(f, gcd(f.partial_x(), f.partial_y())).is_constant();
}

// Same argument: a common factor is either in K[x] or survives x = x0.
bool are_coprime(const BivarPoly& f, const BivarPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_constant() || g.is_constant();
  const FieldPtr field = common_field(f.field(), g.field());
  const BivarPoly fl = f.lifted(field), gl = g.lifted(field);
  if (gcd(y_content(fl), y_content(gl)).degree() > 0) return false;
  const int df = fl.degree_y();
  if (df == 0 || gl.degree_y() == 0) return true;
  for (long x0 : kSamples) {
    const UPoly a = at_x(fl, Elem(x0));
    if (a.degree() == df && gcd(a, at_x(gl, Elem(x0))).degree() == 0) return true;
  }
  return gcd(f, g).is_constant();
}

CurveGerm::CurveGerm(BivarPoly poly, std::string label) : poly_(std::move(poly)), label_(std::move(label)) {
  const std::string name = label_.empty() ? poly_.to_string() : label_;
  if (poly_.is_zero()) throw InvariantError("curve germ '" + name + "' is the zero polynomial");
  if (!poly_.over_rationals()) throw InvariantError("curve germ '" + name + "' must have rational coefficients");
  if (!poly_.coeff(0, 0).is_zero()) {
    throw InvariantError("curve germ '" + name + "' does not pass through the origin");
  }
  if (!squarefree_check(poly_)) throw InvariantError("curve germ '" + name + "' is not squarefree");
}

bool is_smooth_at_origin(const CurveGerm& g) { return g.mult() == 1; }

bool are_transverse_at_origin(const CurveGerm& g1, const CurveGerm& g2) {
  if (!is_smooth_at_origin(g1) || !is_smooth_at_origin(g2)) {
    throw InvariantError("transversality requires germs smooth at the origin");
  }
  const auto l1 = g1.poly().linear_part();
  const auto l2 = g2.poly().linear_part();
  return !(l1[0] * l2[1] - l1[1] * l2[0]).is_zero();
}

}  // namespace lcgerm
