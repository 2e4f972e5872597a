#include "lcgerm/invariants.hpp"

#include <stdexcept>

#include "lcgerm/errors.hpp"

namespace lcgerm {

WeightedGerm::WeightedGerm(std::vector<Component> components) {
  for (auto& c : components) {
    if (c.coefficient < 0) {
      throw InvariantError("negative coefficient " + to_display(c.coefficient) + " on " + c.germ.poly().to_string());
    }
    if (c.coefficient == 0) {
      dropped_zero_ = true;
      continue;
    }
    components_.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      if (!are_coprime(components_[i].germ.poly(), components_[j].germ.poly())) {
        throw InvariantError("components " + components_[i].germ.poly().to_string() + " and " +
                             components_[j].germ.poly().to_string() + " share a component");
      }
    }
  }
}

std::vector<CurveGerm> WeightedGerm::germs() const {
  std::vector<CurveGerm> out;
  for (const auto& c : components_) out.push_back(c.germ);
  return out;
}

std::vector<Rational> WeightedGerm::coefficients() const {
  std::vector<Rational> out;
  for (const auto& c : components_) out.push_back(c.coefficient);
  return out;
}

WeightedGerm WeightedGerm::scaled(const Rational& t) const {
  if (t < 0) throw InvariantError("negative scale factor");
  WeightedGerm out;
  for (const auto& c : components_) {
    if (t == 0) {
      out.dropped_zero_ = true;
      continue;
    }
    out.components_.push_back({c.germ, c.coefficient * t});
  }
  return out;
}

long noether_pair(const ResolutionTree& tree, int i, int j) {
  long total = 0;
  for (const auto& n : tree.nodes) total += n.weight * n.mult[i] * n.mult[j];
  for (const auto& leaf : tree.leaves) {
    bool has_i = false, has_j = false;
    for (int g : leaf.germs) {
      has_i = has_i || g == i;
      has_j = has_j || g == j;
    }
    if (has_i && has_j) total += leaf.weight;
  }
  return total;
}

namespace {

void require_coprime(const CurveGerm& f, const CurveGerm& g) {
  if (!are_coprime(f.poly(), g.poly())) {
    throw InvariantError("germs " + f.poly().to_string() + " and " + g.poly().to_string() + " share a component");
  }
}

// x-leading coefficient of p is a nonzero constant.
bool constant_x_lead(const BivarPoly& p) {
  const int dx = p.degree_x();
  for (const auto& [e, c] : p.terms()) {
    if (e.first == dx && e.second != 0) return false;
  }
  return true;
}

UPoly eval_y(const BivarPoly& p, const Rational& y0) {
  std::vector<Elem> c(p.degree_x() + 1, Elem(0));
  for (const auto& [e, v] : p.terms()) {
    Rational pw = 1;
    for (int k = 0; k < e.second; ++k) pw *= y0;
    c[e.first] += v * Elem(pw);
  }
  return UPoly(nullptr, std::move(c));
}

// Monomial coefficients of the polynomial of degree <= n through (k, vals[k]).
std::vector<Rational> interpolate(const std::vector<Rational>& vals) {
  const std::size_t n = vals.size();
  std::vector<Rational> dd = vals;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / Rational(static_cast<long>(level));
    }
  }
  // Horner on the Newton basis (y - 0)(y - 1)...
  std::vector<Rational> poly(n, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    // poly = poly * (y - k) + dd[k]
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * Rational(static_cast<long>(k));
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

long intersection_multiplicity_noether(const CurveGerm& f, const CurveGerm& g, const TreeOptions& options) {
  require_coprime(f, g);
  return noether_pair(build_tree({f, g}, options), 0, 1);
}

long intersection_multiplicity_resultant(const CurveGerm& f, const CurveGerm& g) {
  require_coprime(f, g);
  const Elem one(1), zero(0);
  for (long s = 1; s <= 1000; ++s) {
    const BivarPoly fs = f.poly().linear_substitution(one, zero, Elem(s), one);
    const BivarPoly gs = g.poly().linear_substitution(one, zero, Elem(s), one);
    if (!constant_x_lead(fs) || !constant_x_lead(gs)) continue;
    const UPoly f0 = fs.linear_substitution(zero, one, one, zero).restrict_to_x_axis_zero();
    const UPoly g0 = gs.linear_substitution(zero, one, one, zero).restrict_to_x_axis_zero();
    const UPoly common = gcd(f0, g0);
    bool monomial = true;
    for (int k = 0; k < common.degree(); ++k) monomial = monomial && common.coeff(k).is_zero();
    if (!monomial) continue;

    const int bound = f.poly().total_degree() * g.poly().total_degree();
    std::vector<Rational> vals;
    for (int k = 0; k <= bound; ++k) {
      const Rational y0(k);
      vals.push_back(resultant(eval_y(fs, y0), eval_y(gs, y0)).to_rational());
    }
    const auto coeffs = interpolate(vals);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] != 0) return static_cast<long>(k);
    }
    throw InvariantError("resultant vanishes identically");
  }
  throw std::logic_error("no admissible shear found");
}

long intersection_multiplicity(const CurveGerm& f, const CurveGerm& g, const TreeOptions& options) {
  const long a = intersection_multiplicity_noether(f, g, options);
  const long b = intersection_multiplicity_resultant(f, g);
  if (a != b) {
    throw std::logic_error("intersection multiplicity mismatch: Noether " + std::to_string(a) + ", resultant " +
                           std::to_string(b));
  }
  return a;
}

Rational pair_mult(const WeightedGerm& omega, const CurveGerm& delta, const TreeOptions& options) {
  if (omega.empty()) return 0;
  for (const auto& c : omega.components()) require_coprime(c.germ, delta);
  auto germs = omega.germs();
  germs.push_back(delta);
  const auto tree = build_tree(germs, options);
  const int d = static_cast<int>(omega.size());
  Rational total = 0;
  for (int j = 0; j < d; ++j) total += omega.components()[j].coefficient * Rational(noether_pair(tree, j, d));
  return total;
}

Rational total_mult(const WeightedGerm& d) {
  Rational total = 0;
  for (const auto& c : d.components()) total += c.coefficient * Rational(c.germ.mult());
  return total;
}

LcReport lc_report(const ResolutionTree& tree, const std::vector<Rational>& coeffs) {
  LcReport report;
  report.resolution_depth = tree.max_depth();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] > 1) {
      report.is_lc = false;
      report.witness = LcWitness{LcWitness::Kind::Component, static_cast<int>(j), coeffs[j], Rational(0), {}};
      return report;
    }
  }
  for (const auto& n : tree.nodes) {
    Rational e = 1 - n.logdisc;
    for (std::size_t j = 0; j < coeffs.size(); ++j) e += coeffs[j] * Rational(n.ord[j]);
    if (e > 1) {
      report.is_lc = false;
      report.witness = LcWitness{LcWitness::Kind::Node, n.id, e, n.logdisc, n.ord};
      return report;
    }
  }
  return report;
}

LcReport is_log_canonical_at_origin(const WeightedGerm& d, const TreeOptions& options) {
  return lc_report(build_tree(d.germs(), options), d.coefficients());
}

const Rational& LctValue::value() const {
  if (!value_) throw std::logic_error("log canonical threshold is +infinity");
  return *value_;
}

std::string LctValue::to_string() const { return value_ ? to_pq(*value_) : "inf"; }

LctResult lct_at_origin(const WeightedGerm& d, const TreeOptions& options) {
  LctResult out;
  if (d.empty()) {
    if (d.dropped_zero_entries()) throw InvariantError("all coefficients are zero");
    return out;
  }
  const auto tree = build_tree(d.germs(), options);
  const auto coeffs = d.coefficients();
  out.resolution_depth = tree.max_depth();
  std::optional<Rational> best;
  auto consider = [&](const Rational& v, Binding::Kind kind, int index) {
    if (!best || v < *best) {
      best = v;
      out.binding = {kind, index};
    }
  };
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    consider(1 / coeffs[j], Binding::Kind::Component, static_cast<int>(j));
  }
  for (const auto& n : tree.nodes) {
    Rational denom = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) denom += coeffs[j] * Rational(n.ord[j]);
    if (denom > 0) consider(n.logdisc / denom, Binding::Kind::Node, n.id);
  }
  out.lct = LctValue::finite(*best);
  return out;
}

FamilyThreshold lct_threshold_in_family(const WeightedGerm& d_fixed, const CurveGerm& c_var,
                                        const TreeOptions& options) {
  for (const auto& c : d_fixed.components()) require_coprime(c.germ, c_var);
  auto germs = d_fixed.germs();
  germs.push_back(c_var);
  const auto tree = build_tree(germs, options);
  auto coeffs = d_fixed.coefficients();
  coeffs.push_back(0);
  if (!lc_report(tree, coeffs).is_lc) throw InvariantError("fixed part is not log canonical at the origin");

  const std::size_t v = coeffs.size() - 1;
  FamilyThreshold out{Rational(1), {Binding::Kind::Cap, -1}, tree.max_depth()};
  for (const auto& n : tree.nodes) {
    if (n.ord[v] == 0) continue;
    Rational slack = n.logdisc;
    for (std::size_t j = 0; j < v; ++j) slack -= coeffs[j] * Rational(n.ord[j]);
    const Rational bound = slack / Rational(n.ord[v]);
    if (bound < out.value) {
      out.value = bound;
      out.binding = {Binding::Kind::Node, n.id};
    }
  }
  return out;
}

}  // namespace lcgerm
