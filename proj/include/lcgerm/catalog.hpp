#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcgerm/linfeas.hpp"

namespace lcgerm {

// One branch of a hand proof, written as a linear system whose expected
// verdict is recorded next to it.
struct CatalogEntry {
  std::string name;
  std::string anchor;
  LinSystem system;
  bool expect_feasible = false;
};

// Reads the catalog document (see data/proof_catalog.json). Throws
// ParseError on malformed JSON or constraint text, InvariantError on a
// structurally wrong document.
std::vector<CatalogEntry> parse_catalog(std::string_view json_text);

// The catalog shipped with the library, embedded at build time.
const char* builtin_catalog_text();
std::vector<CatalogEntry> builtin_catalog();

struct AuditEntry {
  CatalogEntry entry;
  FeasibilityResult result;
  bool evidence_verified = false;  // certificate or witness re-checked
  bool order_independent = false;  // same verdict under shuffled orders
  bool passed() const;
};

struct AuditReport {
  std::uint64_t seed = 0;
  std::vector<AuditEntry> entries;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

inline constexpr std::uint64_t kDefaultAuditSeed = 3;

// Each entry is solved in natural order, its evidence re-verified, and the
// verdict recomputed under three seeded random elimination orders.
AuditReport audit_catalog(const std::vector<CatalogEntry>& catalog, std::uint64_t seed = kDefaultAuditSeed);
AuditReport audit_proof_chains();

}  // namespace lcgerm
