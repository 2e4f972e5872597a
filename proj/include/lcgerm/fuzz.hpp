#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcgerm/theorems.hpp"

namespace lcgerm {

// Relative draw weights of the omega component families.
struct GermFamilyWeights {
  int branch = 5;   // y = q(x), q(0) = 0, with a chosen contact order
  int cusp = 2;     // y^2 = c x^(2s+1)
  int tacnode = 1;  // y^2 = c^2 x^(2s)
  int swapped = 2;  // any of the above with x and y exchanged
};

struct GenSpec {
  std::uint64_t seed = 42;
  long count = 500;
  int max_components = 3;
  GermFamilyWeights weights;
  long coefficient_bound = 12;     // bound on numerators and denominators
  Rational max_coefficient{1};     // every a_i and omega coefficient lies in [0, max]
  int max_order = 6;               // contact order and exponent s bound
  bool shear = true;               // apply a random rational linear change
  int threads = 0;                 // 0: hardware concurrency; never affects results
};

// Deterministic in (spec minus threads): the same configs on every run and
// platform. Deltas are smooth and transverse, omega is coprime to both and
// every tangent direction is rational.
std::vector<LocalConfig> generate(const GenSpec& spec);

// The parameter tuples asserted on each non-lc config: fixed tuples from
// the worked examples plus a seeded sample of a grid, all passing the six
// clauses that do not involve a1, a2.
std::vector<KostaParams> kosta_param_pool(std::uint64_t seed);

struct TheoremTally {
  long asserted = 0;
  long vacuous = 0;  // not lc, hypotheses fail
  long lc = 0;       // pair is lc, nothing to assert
  long failures = 0;
};

struct FailureDump {
  long index = 0;
  std::string theorem;
  std::string detail;
  std::string config_json;  // re-runnable configuration file
};

struct CampaignReport {
  GenSpec spec;
  long generated = 0;
  long lc = 0;
  long not_lc = 0;
  TheoremTally adjunction, main, kosta, kosta_original;
  long kosta_instances = 0;           // (config, tuple) pairs asserted
  long kosta_original_instances = 0;  // (config, n) pairs asserted
  std::vector<FailureDump> failures;

  static constexpr long kMinMainAssertions = 50;
  bool coverage_ok() const { return main.asserted >= kMinMainAssertions; }
  bool passed() const { return failures.empty() && coverage_ok(); }
};

CampaignReport run_campaign(const GenSpec& spec);

}  // namespace lcgerm
