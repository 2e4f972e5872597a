#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lcgerm/rational.hpp"

namespace lcgerm {

// Where an expected value comes from.
enum class Provenance {
  Formula,     // closed form evaluated exactly
  Oracle,      // resolution-tree computation
  Arithmetic,  // direct exact arithmetic on the inputs
};

const char* to_string(Provenance p);

struct ScenarioCheck {
  std::string label;
  std::string expected;
  std::string actual;
  Provenance provenance = Provenance::Formula;
  bool passed = false;
};

struct ScenarioReport {
  std::string name;
  std::string anchor;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ScenarioCheck> checks;
  bool passed() const;
};

// x at 1/m, y at 1 - 1/m and lambda * (y - x^r), r = km(m-1): the threshold
// 1/m + 1/(km^2), the intersection numbers, the parameter tuple
// (1, 1, 1/(km-1), km, 1, 0) and both conclusions past the threshold.
// Throws InvariantError unless m, k >= 2.
ScenarioReport smooth_branch_family(long m, long k);

// lct of smooth, node, cusp, tacnode, ordinary triple point and the
// tacnode with irrational tangent branches y^2 - 2x^4.
ScenarioReport germ_lct_table();

// Fibonacci tiger coefficients for k = 0..k_max, plus the k = 0 local
// surrogate (five lines at 1/3, one at 2/3). Throws InvariantError if
// k_max < 0.
ScenarioReport fibonacci_tiger(long k_max);

// Line-plus-conic parameters: with a1 = n + m - 1, a2 = n every clause for
// (alpha, beta, A, B, M, N) = (1, 1, 1, 2, 1, 0) holds on 2n + m <= 2,
// n, m >= 0, and the two thresholds reduce to m and 1 + n - m.
ScenarioReport line_conic_params();

std::vector<std::string> scenario_names();

// Runs a named scenario with its default arguments ("smooth-branch-family"
// runs the grid m in {2, 3}, k in {2, 3, 4}). Throws InvariantError on an
// unknown name.
std::vector<ScenarioReport> run_scenario(const std::string& name);

}  // namespace lcgerm
