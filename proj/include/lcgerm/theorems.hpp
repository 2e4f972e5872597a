#pragma once

#include <array>
#include <string>
#include <vector>

#include "lcgerm/invariants.hpp"

namespace lcgerm {

// a1*delta1 + a2*delta2 + omega at the origin, with delta1, delta2 smooth and
// transverse and omega supported away from both.
class LocalConfig {
 public:
  // Throws InvariantError when the deltas are singular or tangent, a1 or a2
  // is negative, or omega shares a component with a delta.
  LocalConfig(CurveGerm delta1, CurveGerm delta2, Rational a1, Rational a2, WeightedGerm omega);

  const CurveGerm& delta1() const { return delta1_; }
  const CurveGerm& delta2() const { return delta2_; }
  const Rational& a1() const { return a1_; }
  const Rational& a2() const { return a2_; }
  const WeightedGerm& omega() const { return omega_; }

 private:
  CurveGerm delta1_, delta2_;
  Rational a1_, a2_;
  WeightedGerm omega_;
};

// Everything the theorem predicates read, from one resolution of
// delta1 + delta2 + supp(omega).
struct LocalAnalysis {
  LcReport lc;
  Rational m;             // mult of omega at the origin
  Rational omega_delta1;  // local intersection of omega with delta1
  Rational omega_delta2;
};

LocalAnalysis analyze(const LocalConfig& cfg, const TreeOptions& options = {});

// value > threshold
struct Bound {
  std::string label;
  Rational value;
  Rational threshold;
  bool holds() const { return value > threshold; }
};

// Disjunction of strict lower bounds, in the order the statement lists them.
struct Conclusion {
  std::vector<Bound> disjuncts;
  bool holds() const;
};

// Pair (S, a*delta + omega) with delta smooth, 0 <= a <= 1, not lc at the
// origin: asserts mult(omega . delta) > 1. Throws HypothesisNotMet if a > 1
// or the pair is lc.
Conclusion adjunction_conclusion(const CurveGerm& delta, const Rational& a, const WeightedGerm& omega,
                                 const TreeOptions& options = {});
// The same statement applied to delta_which (1 or 2) of a two-curve
// configuration, with the other delta moved into omega.
Conclusion adjunction_conclusion(const LocalConfig& cfg, int which, const LocalAnalysis& analysis);

// (2n-2)/(n+1) a1 + 2/(n+1) a2 <= 1. Throws InvariantError if n < 3.
bool kosta_original_hypothesis(const Rational& a1, const Rational& a2, long n);

// mult(omega . delta1) > 2a1 - a2  or  mult(omega . delta2) > n/(n-1) a2 - a1.
Conclusion kosta_original_conclusion(const LocalConfig& cfg, long n, const LocalAnalysis& analysis);
Conclusion kosta_original_conclusion(const LocalConfig& cfg, long n, const TreeOptions& options = {});

struct KostaParams {
  Rational alpha, beta, A, B, M, N;
};

struct KostaCheck {
  static const std::array<const char*, 7> kClauseText;
  std::array<bool, 7> clauses{};
  bool holds() const;
};

// The seven clauses c1..c7 in listing order; c7 is the closing disjunction.
// Throws InvariantError on a negative parameter.
KostaCheck kosta_hypotheses(const KostaParams& p, const Rational& a1, const Rational& a2);

// mult(omega . delta1) > M + A a1 - a2  or  mult(omega . delta2) > N + B a2 - a1.
Conclusion kosta_conclusion(const LocalConfig& cfg, const KostaParams& p, const LocalAnalysis& analysis);
Conclusion kosta_conclusion(const LocalConfig& cfg, const KostaParams& p, const TreeOptions& options = {});

// mult(omega . delta1) > 2(1 - a2)  or  mult(omega . delta2) > 2(1 - a1),
// for non-lc configurations with mult(omega) <= 1.
Conclusion main_conclusion(const LocalConfig& cfg, const LocalAnalysis& analysis);
Conclusion main_conclusion(const LocalConfig& cfg, const TreeOptions& options = {});

// Region where the two-curve bound with parameter n says something beyond
// mult(omega . delta_i) >= m:
//   2a1 - a2 >= m,  n/(n-1) a2 - a1 >= m,  (2n-2)/(n+1) a1 + 2/(n+1) a2 <= 1,
// with a1, a2, m >= 0.
bool in_dominance_region(const Rational& a1, const Rational& a2, const Rational& m, long n);

struct DominanceReport {
  bool delta1_dominates = false;        // 2(1 - a2) >= 2a1 - a2
  bool delta2_dominates = false;        // 2(1 - a1) >= (2n-2)/(n+1) a1 + 2/(n+1) a2
  bool delta2_dominates_bound = false;  // 2(1 - a1) >= n/(n-1) a2 - a1
  bool a1_at_most_half = false;
  bool a2_at_most_one = false;
  bool m_at_most_one = false;
  // Both stated dominances and all three stated bounds.
  bool holds() const;
};

// Throws InvariantError if n < 3 and HypothesisNotMet outside the region.
DominanceReport dominance_in_region(const Rational& a1, const Rational& a2, const Rational& m, long n);

struct RegionPoint {
  Rational a1, a2, m;
};

// All points of the lattice (1/q)Z^3 inside the region, for the smallest q
// giving at least min_points of them.
std::vector<RegionPoint> dominance_region_grid(long n, std::size_t min_points);

}  // namespace lcgerm
