#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcgerm/catalog.hpp"
#include "lcgerm/config.hpp"
#include "lcgerm/fuzz.hpp"

namespace lcgerm {

// Output of one front-end operation. The JSON form has a fixed key order,
// writes every rational as "p/q" and embeds the inputs needed to recompute
// it, so equal inputs give byte-identical documents. Schema: docs/reports.md.
struct Report {
  std::string kind;
  std::string text;
  std::string json;
  bool ok = true;  // false when an asserted property failed
};

// lct of the full boundary, or the family threshold when the configuration
// names a family curve. Throws InvariantError("empty divisor") when there is
// nothing to measure.
Report lct_report(const ConfigFile& cfg);
Report loglc_report(const ConfigFile& cfg);
// All pairs of named curves, or one pair.
Report imult_report(const ConfigFile& cfg, const std::optional<std::pair<std::string, std::string>>& pair = {});

enum class TheoremSelector { All, Adjunction, Main, Kosta, KostaOriginal };
// "all", "adjunction", "main", "kosta", "kosta-original". Throws InvariantError.
TheoremSelector parse_theorem_selector(std::string_view name);
const char* to_string(TheoremSelector s);

// With a single selected theorem whose hypotheses fail, throws
// HypothesisNotMet; with "all" such theorems are reported as not applicable.
Report theorem_report(const ConfigFile& cfg, TheoremSelector which);

Report audit_report(const std::vector<CatalogEntry>& catalog, std::uint64_t seed = kDefaultAuditSeed,
                    const std::string& source = "builtin");
// A scenario name or "all".
Report scenario_report(const std::string& name);
Report fuzz_report(const GenSpec& spec);

// Re-reads a JSON report and re-checks it: evidence in audit reports is
// verified independently, every other kind is recomputed from its embedded
// inputs and compared byte for byte.
Report verify_report(std::string_view json_text);

}  // namespace lcgerm
