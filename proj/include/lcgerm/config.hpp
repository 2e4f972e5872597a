#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcgerm/parse.hpp"
#include "lcgerm/theorems.hpp"

namespace lcgerm {

struct NamedCurve {
  std::string name;
  std::string text;  // polynomial as written
  CurveGerm germ;
};

struct DivisorEntry {
  std::string curve;
  Rational coefficient;
};

// A local configuration read from a JSON document. Field reference:
// docs/config.md. The divisor is omega; when deltas are present the full
// boundary is a1*delta1 + a2*delta2 + omega.
struct ConfigFile {
  VariableNames variables;
  std::vector<NamedCurve> curves;
  std::vector<DivisorEntry> divisor;
  std::optional<std::string> family;
  std::optional<std::string> delta1, delta2;
  Rational a1, a2;
  std::optional<KostaParams> kosta;
  std::optional<long> kosta_original_n;
  std::optional<int> depth_cap;

  // Throws InvariantError on an unknown name.
  const CurveGerm& curve(const std::string& name) const;
  bool has_deltas() const { return delta1.has_value() && delta2.has_value(); }
  WeightedGerm omega() const;
  WeightedGerm boundary() const;
  // Throws InvariantError unless both deltas are named.
  LocalConfig local_config() const;
  TreeOptions tree_options() const;
};

// Throws ParseError (JSON syntax, polynomial or rational text) and
// InvariantError (missing or unknown names, negative coefficients, invalid
// germs).
ConfigFile parse_config(std::string_view json_text);
ConfigFile read_config_file(const std::string& path);

// Canonical JSON: fixed key order, rationals as "p/q".
std::string config_to_json(const ConfigFile& cfg);

// Names the curves delta1, delta2, c1, c2, ... in that order.
ConfigFile to_config_file(const LocalConfig& cfg);

}  // namespace lcgerm
