#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lcgerm/rational.hpp"

namespace lcgerm {

enum class Relation { Le, Lt, Eq };

const char* to_string(Relation r);

// coeffs . x  rel  rhs
struct LinConstraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::Le;
  Rational rhs;
};

class LinSystem {
 public:
  LinSystem() = default;
  explicit LinSystem(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<LinConstraint>& constraints() const { return constraints_; }
  std::size_t arity() const { return vars_.size(); }

  // Throws InvariantError on an arity mismatch.
  void add(LinConstraint c);
  // Parses "2*a1 - a2 > 1", "1 >= a1 + a3", "a = 0", ... over the declared
  // variables. Throws ParseError.
  void add(std::string_view text);

  std::string constraint_text(std::size_t i) const;

 private:
  std::vector<std::string> vars_;
  std::vector<LinConstraint> constraints_;
};

// Affine form sum_i coeffs[i] * var_i + constant.
struct LinearForm {
  std::vector<Rational> coeffs;
  Rational constant;

  friend LinearForm operator+(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator*(const Rational& s, const LinearForm& a);
  friend bool operator==(const LinearForm& a, const LinearForm& b);
};

// Grammar: expr := [sign] term (('+'|'-') term)*; term := factor ('*' factor)*
// with at most one non-constant factor; factor := rational | var | '(' expr ')'.
LinearForm parse_linear_form(std::string_view text, const std::vector<std::string>& variables);

struct FeasibilityResult {
  bool feasible = false;
  // Feasible: a point satisfying every constraint.
  std::vector<Rational> witness;
  // Infeasible: one multiplier per constraint (>= 0 for inequalities, any
  // sign for equalities) whose combination has zero left-hand side and a
  // contradictory right-hand side.
  std::vector<Rational> certificate;
};

// Fourier-Motzkin elimination with strictness tracked through every
// combination. `order` lists variable indices to eliminate (default
// 0, 1, ...). Throws InvariantError on a malformed system.
FeasibilityResult is_feasible(const LinSystem& sys, const std::vector<int>& order = {});

// Independent checks of the two kinds of evidence.
bool verify_certificate(const LinSystem& sys, const std::vector<Rational>& multipliers);
bool verify_witness(const LinSystem& sys, const std::vector<Rational>& point);

}  // namespace lcgerm
