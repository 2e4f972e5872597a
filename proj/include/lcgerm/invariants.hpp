#pragma once

#include <optional>
#include <vector>

#include "lcgerm/blowup.hpp"
#include "lcgerm/germ.hpp"

namespace lcgerm {

// Effective Q-divisor germ sum c_j C_j at the origin.
class WeightedGerm {
 public:
  struct Component {
    CurveGerm germ;
    Rational coefficient;
  };

  WeightedGerm() = default;
  // Throws InvariantError on a negative coefficient or two components
  // sharing a factor. Zero-coefficient entries are dropped.
  explicit WeightedGerm(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  std::size_t size() const { return components_.size(); }
  // True when the constructor dropped at least one zero-coefficient entry.
  bool dropped_zero_entries() const { return dropped_zero_; }

  std::vector<CurveGerm> germs() const;
  std::vector<Rational> coefficients() const;
  WeightedGerm scaled(const Rational& t) const;

 private:
  std::vector<Component> components_;
  bool dropped_zero_ = false;
};

// Intersection number at the origin from a tree containing germs i and j:
// sum over blown-up points of weight * mult_i * mult_j, plus the final
// transverse meetings.
long noether_pair(const ResolutionTree& tree, int i, int j);

long intersection_multiplicity_noether(const CurveGerm& f, const CurveGerm& g, const TreeOptions& options = {});
// ord_y Res_x(f', g') after the first shear y -> y + s*x (s = 1, 2, ...)
// making both x-leading coefficients constant and separating the common
// zeros on y = 0.
long intersection_multiplicity_resultant(const CurveGerm& f, const CurveGerm& g);
// Both computations; throws std::logic_error if they disagree and
// InvariantError if f and g share a component.
long intersection_multiplicity(const CurveGerm& f, const CurveGerm& g, const TreeOptions& options = {});

// sum_j c_j * I(C_j, delta)
Rational pair_mult(const WeightedGerm& omega, const CurveGerm& delta, const TreeOptions& options = {});
// sum_j c_j * mult(C_j)
Rational total_mult(const WeightedGerm& d);

struct LcWitness {
  enum class Kind { Component, Node };
  Kind kind = Kind::Node;
  int index = 0;           // component index or tree node id
  Rational coefficient;    // c_j, or e = sum c_j ord_j - (logdisc - 1)
  Rational logdisc;        // Node only
  std::vector<int> ord;    // Node only, per component
};

struct LcReport {
  bool is_lc = true;
  std::optional<LcWitness> witness;
  int resolution_depth = 0;
};

// Evaluates the lc condition on a tree whose germ k carries coeffs[k].
// The first violator is reported: components in order, then nodes
// breadth-first.
LcReport lc_report(const ResolutionTree& tree, const std::vector<Rational>& coeffs);

LcReport is_log_canonical_at_origin(const WeightedGerm& d, const TreeOptions& options = {});

// What attains a threshold minimum.
struct Binding {
  enum class Kind { None, Component, Node, Cap };
  Kind kind = Kind::None;
  int index = -1;
};

// Log canonical threshold, or +infinity when nothing constrains it.
class LctValue {
 public:
  static LctValue infinity() { return LctValue(); }
  static LctValue finite(Rational v) { return LctValue(std::move(v)); }

  bool is_infinite() const { return !value_; }
  // Throws std::logic_error on +infinity.
  const Rational& value() const;
  std::string to_string() const;  // "p/q" or "inf"

  friend bool operator==(const LctValue& a, const LctValue& b) { return a.value_ == b.value_; }

 private:
  LctValue() = default;
  explicit LctValue(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

struct LctResult {
  LctValue lct = LctValue::infinity();
  Binding binding;
  int resolution_depth = 0;
};

// min(min_j 1/c_j, min_E logdisc(E) / sum_j c_j ord_E(C_j)). Empty divisor
// gives +infinity; a divisor whose entries were all zero is an error.
LctResult lct_at_origin(const WeightedGerm& d, const TreeOptions& options = {});

struct FamilyThreshold {
  Rational value;
  Binding binding;
  int resolution_depth = 0;
};

// sup{lambda >= 0 : d_fixed + lambda * c_var is lc at the origin}.
// Throws InvariantError if c_var shares a component with d_fixed or
// d_fixed itself is not lc.
FamilyThreshold lct_threshold_in_family(const WeightedGerm& d_fixed, const CurveGerm& c_var,
                                        const TreeOptions& options = {});

}  // namespace lcgerm
