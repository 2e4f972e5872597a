#include "lcgerm/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <json.hpp>

#include "lcgerm/catalog_data.hpp"
#include "detrand.hpp"
#include "lcgerm/errors.hpp"

namespace lcgerm {

namespace {

constexpr const char* kFormat = "lcgerm-linsys-catalog/1";

const nlohmann::json& field(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InvariantError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

std::string string_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_string()) throw InvariantError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what(), e.byte);
  }
  if (string_field(doc, "format", "catalog") != kFormat) {
    throw InvariantError(std::string("catalog format must be '") + kFormat + "'");
  }
  const auto& systems = field(doc, "systems", "catalog");
  if (!systems.is_array()) throw InvariantError("catalog: 'systems' must be an array");
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto& s = systems[i];
    const std::string where = "catalog system " + std::to_string(i);
    CatalogEntry e;
    e.name = string_field(s, "name", where);
    e.anchor = string_field(s, "anchor", where);
    const auto& vars = field(s, "variables", where);
    if (!vars.is_array() || vars.empty()) throw InvariantError(where + ": 'variables' must be a non-empty array");
    std::vector<std::string> names;
    for (const auto& v : vars) {
      if (!v.is_string()) throw InvariantError(where + ": variable names must be strings");
      names.push_back(v.get<std::string>());
    }
    e.system = LinSystem(std::move(names));
    const auto& cons = field(s, "constraints", where);
    if (!cons.is_array()) throw InvariantError(where + ": 'constraints' must be an array");
    for (const auto& c : cons) {
      if (!c.is_string()) throw InvariantError(where + ": constraints must be strings");
      e.system.add(c.get<std::string>());
    }
    const std::string expect = string_field(s, "expect", where);
    if (expect != "feasible" && expect != "infeasible") {
      throw InvariantError(where + ": 'expect' must be 'feasible' or 'infeasible'");
    }
    e.expect_feasible = expect == "feasible";
    if (std::any_of(out.begin(), out.end(), [&](const CatalogEntry& o) { return o.name == e.name; })) {
      throw InvariantError(where + ": duplicate name '" + e.name + "'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

const char* builtin_catalog_text() { return detail::kProofCatalogJson; }

std::vector<CatalogEntry> builtin_catalog() { return parse_catalog(builtin_catalog_text()); }

bool AuditEntry::passed() const {
  return result.feasible == entry.expect_feasible && evidence_verified && order_independent;
}

std::size_t AuditReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const AuditEntry& e) { return !e.passed(); }));
}

AuditReport audit_catalog(const std::vector<CatalogEntry>& catalog, std::uint64_t seed) {
  AuditReport report;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  for (const auto& entry : catalog) {
    AuditEntry a;
    a.entry = entry;
    a.result = is_feasible(entry.system);
    a.evidence_verified = a.result.feasible ? verify_witness(entry.system, a.result.witness)
                                            : verify_certificate(entry.system, a.result.certificate);
    std::vector<int> order(entry.system.arity());
    std::iota(order.begin(), order.end(), 0);
    a.order_independent = true;
    for (int rep = 0; rep < 3; ++rep) {
      detail::shuffle(order, rng);
      if (is_feasible(entry.system, order).feasible != a.result.feasible) a.order_independent = false;
    }
    report.entries.push_back(std::move(a));
  }
  return report;
}

AuditReport audit_proof_chains() { return audit_catalog(builtin_catalog()); }

}  // namespace lcgerm
